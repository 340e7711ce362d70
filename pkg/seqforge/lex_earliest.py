""" Greedy and backtracking generators for lexicographically earliest sequences """
import logging
import math
from collections import deque
from dataclasses import dataclass, field
from itertools import islice
from math import gcd, prod

from seqforge.arith import is_prime, prime_divisors
from seqforge.core import terms_from_values
from seqforge.exceptions import BudgetExceeded, DuplicateTerm

logger = logging.getLogger(__name__)


class GreedyState(object):
    """ Bookkeeping shared by the greedy permutation generators

    ``prime_index`` maps a modulus k to the smallest multiple of k that might
    still be unused; pointers only move past values that are used, so
    lookups stay amortised near constant.
    """

    def __init__(self, window=2):
        self.used = set()
        self.smallest_missing = 1
        self.last_terms = deque(maxlen=window)
        self.prime_index = {}

    def emit(self, value):
        if value in self.used:
            raise DuplicateTerm(value)
        self.used.add(value)
        self.last_terms.append(value)
        while self.smallest_missing in self.used:
            self.smallest_missing += 1
        return value

    def next_unused_multiple(self, k):
        ptr = self.prime_index.get(k, k)
        while ptr in self.used:
            ptr += k
        self.prime_index[k] = ptr
        return ptr

    def unused_multiples(self, k):
        m = self.next_unused_multiple(k)
        while True:
            if m not in self.used:
                yield m
            m += k

    def unused_values(self):
        m = self.smallest_missing
        while True:
            if m not in self.used:
                yield m
            m += 1


def _first(candidates, accept, bound=None):
    for m in candidates:
        if bound is not None and m >= bound:
            return None
        if accept(m):
            return m


def iter_ekg():
    state = GreedyState()
    yield state.emit(1)
    yield state.emit(2)
    while True:
        prev = state.last_terms[-1]
        yield state.emit(min(state.next_unused_multiple(p) for p in prime_divisors(prev)))


def iter_yellowstone():
    state = GreedyState()
    for seed in (1, 2, 3):
        yield state.emit(seed)
    while True:
        older, prev = state.last_terms
        best = None
        for p in prime_divisors(older):
            m = _first(state.unused_multiples(p), lambda m: gcd(m, prev) == 1, best)
            if m is not None:
                best = m
        yield state.emit(best)


def iter_quet():
    state = GreedyState()
    yield state.emit(1)
    yield state.emit(2)
    while True:
        older, prev = state.last_terms
        g = gcd(older, prev)
        if g == 1:
            m = min(state.next_unused_multiple(p) for p in prime_divisors(prev))
        else:
            m = _first(state.unused_values(), lambda m: gcd(prev, m) != g)
        yield state.emit(m)


def iter_sigrist():
    """ Every prime of a(n-1) must divide exactly one of a(n-2) and a(n) """
    state = GreedyState()
    yield state.emit(1)
    yield state.emit(2)
    while True:
        older, prev = state.last_terms
        primes = prime_divisors(prev)
        required = prod(p for p in primes if older % p)
        forbidden = [p for p in primes if older % p == 0]

        def clear(m):
            return all(m % p for p in forbidden)

        if required == 1:
            m = _first(state.unused_values(), clear)
        else:
            m = _first(state.unused_multiples(required), clear)
        yield state.emit(m)


def iter_bottomley():
    state = GreedyState()
    yield state.emit(1)
    while True:
        prev = state.last_terms[-1]
        yield state.emit(_first(state.unused_values(), lambda m: bool(is_prime(prev + m))))


def iter_a036552():
    """ a(2n) is the smallest missing number and a(2n+1) = 2 a(2n) """
    state = GreedyState()
    yield state.emit(1)
    while True:
        m = state.smallest_missing
        yield state.emit(m)
        yield state.emit(2 * m)


def iter_a064736():
    """ a(2n+2) is the smallest missing number and a(2n+1) = a(2n) a(2n+2) """
    state = GreedyState()
    yield state.emit(1)
    yield state.emit(2)
    while True:
        left = state.last_terms[-1]
        right = state.smallest_missing
        yield state.emit(left * right)
        yield state.emit(right)


def iter_thue_morse():
    n = 0
    while True:
        yield bin(n).count('1') & 1
        n += 1


def _take(it, n):
    return list(islice(it, n))


def ekg(n):
    return terms_from_values(_take(iter_ekg(), n))


def yellowstone(n):
    return terms_from_values(_take(iter_yellowstone(), n))


def quet(n):
    return terms_from_values(_take(iter_quet(), n))


def sigrist(n):
    return terms_from_values(_take(iter_sigrist(), n))


def bottomley(n):
    return terms_from_values(_take(iter_bottomley(), n))


ERDOS_VARIANTS = {
    'A036552': iter_a036552,
    'A064736': iter_a064736,
}


def erdos_variant(kind, n):
    try:
        source = ERDOS_VARIANTS[kind]
    except KeyError:
        raise ValueError('Unknown variant {}, expected one of {}'.format(
            kind, ', '.join(ERDOS_VARIANTS)))
    return terms_from_values(_take(source(), n))


def thue_morse(n):
    return terms_from_values(_take(iter_thue_morse(), n), offset=0)


# Defining rules, written directly from the definitions. ``history`` ends with
# the most recent terms and each rule decides whether m may come next.
RULES = {
    'ekg': ((1, 2), lambda h, m: gcd(h[-1], m) > 1),
    'yellowstone': ((1, 2, 3), lambda h, m: gcd(h[-2], m) > 1 and gcd(h[-1], m) == 1),
    'quet': ((1, 2), lambda h, m: gcd(h[-1], m) != gcd(h[-2], h[-1])),
    'sigrist': ((1, 2), lambda h, m: all((h[-2] % p == 0) != (m % p == 0)
                                         for p in prime_divisors(h[-1]))),
    'bottomley': ((1,), lambda h, m: bool(is_prime(h[-1] + m))),
}


def naive_greedy(rule, n):
    """ Linear-scan rendition of a greedy rule, used as an oracle """
    seeds, accept = RULES[rule]
    values = list(seeds[:n])
    used = set(values)
    while len(values) < n:
        m = 1
        while m in used or not accept(values, m):
            m += 1
        values.append(m)
        used.add(m)
    return values


def rule_violations(values, rule):
    """ Positions (1-based) whose term breaks the defining rule """
    seeds, accept = RULES[rule]
    bad = [i + 1 for i, (v, s) in enumerate(zip(values, seeds)) if v != s]
    for i in range(len(seeds), len(values)):
        if not accept(values[max(0, i - 2):i], values[i]):
            bad.append(i + 1)
    return bad


def minimality_violations(values, rule):
    """ Positions where some smaller unused value would also satisfy the rule """
    seeds, accept = RULES[rule]
    bad = []
    used = set(values[:len(seeds)])
    for i in range(len(seeds), len(values)):
        history = values[max(0, i - 2):i]
        if any(m not in used and accept(history, m) for m in range(1, values[i])):
            bad.append(i + 1)
        used.add(values[i])
    return bad


@dataclass
class PermutationReport:
    duplicate: int = None
    covered_through: int = 0
    missing_min: int = 1


def permutation_check(terms):
    seen = set()
    duplicate = None
    for t in terms:
        value = t[1] if isinstance(t, tuple) else t
        if value in seen and duplicate is None:
            duplicate = value
        seen.add(value)
    covered = 0
    while covered + 1 in seen:
        covered += 1
    return PermutationReport(duplicate, covered, covered + 1)


@dataclass
class CycleStructure:
    cycles: list = field(default_factory=list)
    open_orbits: list = field(default_factory=list)

    @property
    def fixed_points(self):
        return [c[0] for c in self.cycles if len(c) == 1]


def cycle_structure(terms):
    """ Cycles of the partial map n -> a(n) that close inside the prefix; chains
        that leave it are reported as open orbits
    """
    mapping = {}
    images = set()
    for index, value in terms:
        if value in images:
            raise DuplicateTerm(value)
        images.add(value)
        mapping[index] = value

    visited = set()
    result = CycleStructure()

    # Chains start at indexes nothing in the prefix maps onto
    for start in sorted(mapping):
        if start in images:
            continue
        chain = []
        x = start
        while x in mapping:
            chain.append(x)
            visited.add(x)
            x = mapping[x]
        chain.append(x)
        result.open_orbits.append(tuple(chain))

    for start in sorted(mapping):
        if start in visited:
            continue
        cycle = []
        x = start
        while x not in visited and x in mapping:
            cycle.append(x)
            visited.add(x)
            x = mapping[x]
        if x == start:
            result.cycles.append(tuple(cycle))
        else:
            # Runs off the prefix through a value whose preimage lies outside it
            result.open_orbits.append(tuple(cycle + [x]))
    return result


def _ratio_class(value):
    if is_prime(value):
        return 'prime'
    if value % 3 == 0 and is_prime(value // 3):
        return 'three_p'
    return 'other'


@dataclass
class GrowthBand:
    count: int = 0
    low: float = math.inf
    high: float = -math.inf

    def add(self, ratio):
        self.count += 1
        self.low = min(self.low, ratio)
        self.high = max(self.high, ratio)


def growth_classes(terms, start=1, normalized=False):
    """ Ratio bands of a(n)/n per class (prime, three_p, other)

    With ``normalized`` the ratio is a(n) / (n (1 + 1/(3 ln n))), which the
    EKG growth conjecture puts near 1/2, 3/2 and 1 for the three classes.
    """
    bands = {'prime': GrowthBand(), 'three_p': GrowthBand(), 'other': GrowthBand()}
    for n, value in terms:
        if n < max(start, 2):
            continue
        scale = n * (1 + 1 / (3 * math.log(n))) if normalized else n
        bands[_ratio_class(value)].add(value / scale)
    return bands


def yellowstone_geysers(terms):
    """ (n, prime a(n), a(n+2)) wherever a prime term is followed two steps later
        by a value above both of its neighbours
    """
    values = [v for _, v in terms]
    offset = terms[0][0] if terms else 1
    out = []
    for i in range(len(values) - 3):
        if is_prime(values[i]) and values[i + 2] > max(values[i + 1], values[i + 3]):
            out.append((i + offset, values[i], values[i + 2]))
    return out


def has_cube_suffix(word):
    """ True when some block X makes the word end in XXX """
    n = len(word)
    for k in range(1, n // 3 + 1):
        if word[n - 3 * k:n - 2 * k] == word[n - 2 * k:n - k] == word[n - k:]:
            return True
    return False


def is_cubefree(word):
    """ Full scan: a cube of period k is a run of 2k positions with w[i] == w[i+k] """
    word = list(word)
    n = len(word)
    for k in range(1, n // 3 + 1):
        run = 0
        for i in range(n - k):
            if word[i] == word[i + k]:
                run += 1
                if run >= 2 * k:
                    return False
            else:
                run = 0
    return True


class CubeFreeSearchState(object):
    """ Depth-first search for the lexicographically least cube-free 0/1 word
        of a given length. ``decision_stack`` holds positions where 0 was
        chosen and 1 has not been tried yet.
    """

    def __init__(self, certify_depth=0, node_budget=10 ** 7):
        self.word = []
        self.decision_stack = []
        self.certify_depth = certify_depth
        self.node_budget = node_budget
        self.nodes = 0

    def _backtrack(self):
        if not self.decision_stack:
            raise BudgetExceeded('No cube-free binary word of this length exists',
                                 progress=list(self.word))
        pos = self.decision_stack.pop()
        del self.word[pos:]
        self.word.append(1)

    def extend_to(self, length):
        if len(self.word) == 0 and length > 0:
            self.word.append(0)
            self.decision_stack.append(0)
        while True:
            self.nodes += 1
            if self.nodes > self.node_budget:
                raise BudgetExceeded('Cube-free search exceeded {} nodes'.format(self.node_budget),
                                     progress=list(self.word))
            if has_cube_suffix(self.word):
                self._backtrack()
                continue
            if len(self.word) >= length:
                return self.word[:length]
            self.decision_stack.append(len(self.word))
            self.word.append(0)


@dataclass
class CubeFreeResult:
    terms: list
    certified_len: int


def cubefree_earliest(n, certify_depth=30, node_budget=10 ** 7):
    """ First n symbols of the earliest cube-free binary word

    The prefix returned is the start of the least cube-free word of length
    n + certify_depth. ``certified_len`` counts the leading symbols that do
    not change when the lookahead is doubled; later symbols are conjectural.
    """
    if n < 1:
        raise ValueError('n must be at least 1')

    search = CubeFreeSearchState(certify_depth, node_budget)
    terms = search.extend_to(n + certify_depth)[:n]

    deeper = CubeFreeSearchState(2 * certify_depth, node_budget)
    try:
        check = deeper.extend_to(n + 2 * certify_depth)[:n]
    except BudgetExceeded:
        logger.warning('Deeper lookahead ran out of budget, nothing certified')
        return CubeFreeResult(terms, 0)

    certified = 0
    while certified < n and terms[certified] == check[certified]:
        certified += 1
    logger.debug('Cube-free prefix: {} of {} terms stable, {} nodes'.format(
        certified, n, search.nodes + deeper.nodes))
    return CubeFreeResult(terms, certified)
