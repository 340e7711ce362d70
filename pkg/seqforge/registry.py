""" A-number registry: every sequence the package can produce, with its offset """
import logging
import os
from dataclasses import dataclass
from itertools import count

from seqforge import coordination, digit_maps, grid_arrays, lex_earliest, tag_system
from seqforge.core import PrefixSource, SequenceId, TermStream
from seqforge.digit_maps import ClimbStatus, MapKind
from seqforge.exceptions import UnknownSequence
from seqforge.tag_system import TagStatus

logger = logging.getLogger(__name__)

# Known prefixes that are looked up, not computed
REFERENCE_CONSTANTS = {
    'A250001': (1, (1, 3, 14, 173, 16951)),
    'A250000': (1, (0, 0, 1, 2, 4, 5, 7, 9, 12, 14, 17, 21, 24)),
}


@dataclass(frozen=True)
class SequenceEntry:
    seq_id: SequenceId
    offset: int
    source: object

    @property
    def a_number(self):
        return self.seq_id.a_number

    @property
    def name(self):
        return self.seq_id.name

    def stream(self):
        return TermStream(self.seq_id, self.offset, self.source)


def _window_side(n):
    k = 1
    while k * (k + 1) // 2 < n:
        k += 1
    return k


def _antidiagonal_read(fill):
    def prefix(n):
        k = _window_side(n)
        return fill(k, k).antidiagonals()[:n]
    return PrefixSource(prefix)


def _spiral_read():
    def prefix(n):
        radius = 0
        while (2 * radius + 1) ** 2 < n:
            radius += 1
        array = grid_arrays.spiral_array(radius)
        positions = grid_arrays.spiral_positions(radius)
        return [array.at(x, y) for x, y in positions][:n]
    return PrefixSource(prefix)


def _spoke_read(direction, skip_centre):
    def prefix(n):
        radius = n if skip_centre else n - 1
        values = grid_arrays.extract_line(grid_arrays.spiral_array(radius), 'spoke', direction).values
        return values[1:] if skip_centre else values
    return PrefixSource(prefix)


def _map_values(fn, start):
    def source():
        for n in count(start):
            yield fn(n)
    return source


def _factor_map(base):
    return _map_values(lambda n: 1 if n == 1 else digit_maps.f_factor_concat(n, base), 1)


def _climb_values(kind):
    """ F(n) from n = 1; the stream ends at the first start the budgets
        cannot resolve
    """
    def source():
        yield 1
        for n in count(2):
            outcome = digit_maps.climb(n, kind)
            if outcome.status is ClimbStatus.REACHED_PRIME:
                yield outcome.terminal
            elif outcome.never_prime:
                yield -1
            else:
                logger.warning('F({}) is unresolved ({}); stopping the stream'.format(n, outcome))
                return
    return source


def _unreached_b2():
    """ Starts whose base-2 climb provably never reaches a prime; the stream ends
        at the first start the budgets cannot resolve
    """
    for n in count(2):
        outcome = digit_maps.climb(n, MapKind.FACTOR_CONCAT_B2)
        if outcome.never_prime:
            yield n
        elif outcome.status is not ClimbStatus.REACHED_PRIME:
            logger.warning('Base-2 climb of {} is unresolved ({}); stopping the stream'.format(n, outcome))
            return


def _power_train_fixed():
    yield from digit_maps.power_train_fixed_points(10 ** 4)
    big = digit_maps.POWER_TRAIN_LARGE_FIXED_POINT
    if digit_maps.power_train(big) == big:
        yield big


def _home_prime_of_49(n):
    return digit_maps.home_prime_trajectory(49, n - 1)[:n]


def _sigma_outcomes():
    for n in count(1):
        outcome = tag_system.accelerated_trajectory(tag_system.sigma(n))
        if outcome.status is TagStatus.UNRESOLVED:
            logger.warning('sigma_{} is unresolved ({}); stopping the stream'.format(n, outcome))
            return
        yield n, outcome


def _sigma_words():
    for _, outcome in _sigma_outcomes():
        yield outcome.words_before_cycle_or_death


def _sigma_cycles():
    for _, outcome in _sigma_outcomes():
        yield outcome.cycle_len


def _sigma_deaths():
    for n, outcome in _sigma_outcomes():
        if outcome.status is TagStatus.DIES:
            yield n


def _longest_trajectories():
    for n in range(1, 23):
        yield tag_system.max_words_over_length(n)


def _coordination_read(graph, base):
    return PrefixSource(lambda n: list(coordination.coordination_sequence(graph(), base, n - 1)))


def _patch_read(path):
    """ Shells of a finite patch, ending at the radius the patch is valid for """
    def prefix(n):
        patch = coordination.load_patch(path)
        return list(coordination.patch_coordination(patch, min(n - 1, patch.radius_valid)))
    return PrefixSource(prefix)


_ENTRIES = [
    ('A064413', 'EKG sequence', 1, lex_earliest.iter_ekg),
    ('A098550', 'Yellowstone permutation', 1, lex_earliest.iter_yellowstone),
    ('A127202', 'gcd with previous term differs from the previous gcd', 1, lex_earliest.iter_quet),
    ('A280864', 'primes of a(n) divide exactly one neighbour', 1, lex_earliest.iter_sigrist),
    ('A055265', 'consecutive sums are prime', 1, lex_earliest.iter_bottomley),
    ('A036552', 'smallest missing number, then its double', 1, lex_earliest.iter_a036552),
    ('A064736', 'smallest missing number, with products between', 1, lex_earliest.iter_a064736),
    ('A282317', 'lexicographically earliest cube-free binary word', 1,
     PrefixSource(lambda n: lex_earliest.cubefree_earliest(n).terms)),
    ('A010060', 'Thue-Morse sequence', 0, lex_earliest.iter_thue_morse),
    ('A003987', 'Nim-sum table read by antidiagonals', 0, _antidiagonal_read(grid_arrays.nim_sum_table)),
    ('A269526', 'Sudoku array read by antidiagonals', 1, _antidiagonal_read(grid_arrays.sudoku_array)),
    ('A004481', 'Grundy values of the diagonal-shift game by antidiagonals', 0,
     _antidiagonal_read(grid_arrays.grundy_table)),
    ('A274318', 'main diagonal of the Sudoku array', 0, PrefixSource(grid_arrays.sudoku_main_diagonal)),
    ('A274640', 'spiral array read in spiral order', 0, _spiral_read()),
    ('A274924', 'spiral array, east spoke', 0, _spoke_read('E', False)),
    ('A274925', 'spiral array, north-east spoke', 0, _spoke_read('NE', False)),
    ('A274926', 'spiral array, north spoke', 0, _spoke_read('N', False)),
    ('A274927', 'spiral array, north-west spoke', 0, _spoke_read('NW', False)),
    ('A274928', 'spiral array, west spoke', 1, _spoke_read('W', True)),
    ('A274929', 'spiral array, south-west spoke', 1, _spoke_read('SW', True)),
    ('A274930', 'spiral array, south spoke', 1, _spoke_read('S', True)),
    ('A274931', 'spiral array, south-east spoke', 1, _spoke_read('SE', True)),
    ('A080670', 'prime factors with exponents, concatenated', 1, _factor_map(10)),
    ('A195264', 'prime reached by iterating A080670', 1, _climb_values(MapKind.FACTOR_CONCAT_B10)),
    ('A230625', 'A080670 in base 2', 1, _factor_map(2)),
    ('A230627', 'prime reached by iterating A230625', 1, _climb_values(MapKind.FACTOR_CONCAT_B2)),
    ('A288847', 'starts whose base-2 climb reaches no prime', 1, _unreached_b2),
    ('A037276', 'prime factors with repetition, concatenated', 1,
     _map_values(lambda n: 1 if n == 1 else digit_maps.home_prime_step(n), 1)),
    ('A037274', 'home primes', 1, _climb_values(MapKind.HOME_PRIME)),
    ('A056938', 'home-prime trajectory of 49', 1, PrefixSource(_home_prime_of_49, initial=8)),
    ('A133500', 'power train map', 0, _map_values(digit_maps.power_train, 0)),
    ('A135385', 'fixed points of the power train map', 1, _power_train_fixed),
    ('A173426', 'concatenation 1 up to n and back down to 1', 1, _map_values(digit_maps.memorable_concat, 1)),
    ('A007908', 'concatenation of 1 up to n', 1, _map_values(digit_maps.smarandache, 1)),
    ('A284116', 'longest tag trajectory from a word of length n', 1, _longest_trajectories),
    ('A284119', 'words before (100)^n cycles or dies', 1, _sigma_words),
    ('A284121', 'cycle length reached from (100)^n, 1 if it dies', 1, _sigma_cycles),
    ('A291792', 'n such that (100)^n dies', 1, _sigma_deaths),
    ('A008574', 'coordination sequence of the square grid', 0,
     _coordination_read(coordination.square_grid, 'v')),
    ('A296368', 'coordination sequence of a trivalent Cairo vertex', 0,
     _coordination_read(coordination.cairo_graph, 'Vp')),
]


# Sequences read off a tiling patch supplied as a file in the patches folder
PATCH_SEQUENCES = {
    'A303981': ('coordination sequence of the Ammann-Beenker tiling', 0, 'ammann_beenker.patch'),
}


def _constant_source(values):
    return lambda: iter(values)


REGISTRY = {
    a_number: SequenceEntry(SequenceId(a_number, name), offset, source)
    for a_number, name, offset, source in _ENTRIES
}
REGISTRY.update({
    'A250001': SequenceEntry(SequenceId('A250001', 'circles in the plane (known terms)'),
                             REFERENCE_CONSTANTS['A250001'][0],
                             _constant_source(REFERENCE_CONSTANTS['A250001'][1])),
    'A250000': SequenceEntry(SequenceId('A250000', 'peaceable queens (known terms)'),
                             REFERENCE_CONSTANTS['A250000'][0],
                             _constant_source(REFERENCE_CONSTANTS['A250000'][1])),
})


def lookup(a_number, patches=None):
    """ Registry entry for an A-number; patch-driven sequences need the folder
        holding their patch file
    """
    SequenceId(a_number)
    if a_number in PATCH_SEQUENCES:
        name, offset, file_name = PATCH_SEQUENCES[a_number]
        path = os.path.join(patches, file_name) if patches else None
        if path is None or not os.path.isfile(path):
            raise UnknownSequence('{} is computed from {}, which was not found in the patches folder'.format(
                a_number, file_name))
        return SequenceEntry(SequenceId(a_number, name), offset, _patch_read(path))
    try:
        return REGISTRY[a_number]
    except KeyError:
        raise UnknownSequence('{} is not registered'.format(a_number))


def get_stream(a_number, patches=None):
    return lookup(a_number, patches).stream()
