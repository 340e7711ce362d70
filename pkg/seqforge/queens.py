""" Peaceable queens: verification, exact search at small n, the pentagonal
    construction and board rendering
"""
import itertools
import logging
import time
from dataclasses import dataclass, field

import numpy as np

from seqforge.workers import parallel_map

logger = logging.getLogger(__name__)

DEFAULT_TIME_BUDGET = 600

# Known maximal army sizes for n = 1, 2, ...
KNOWN_TERMS = (0, 0, 1, 2, 4, 5, 7, 9, 12, 14, 17, 21, 24)

# The construction below reaches the bound for every n up to this one, and
# for every even n checked beyond it
CONSTRUCTION_EXACT_THROUGH = 30

EMPTY, WHITE, BLACK = '·', 'W', 'B'


@dataclass(frozen=True)
class Placement:
    n: int
    white: frozenset = field(default_factory=frozenset)
    black: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, 'white', frozenset(self.white))
        object.__setattr__(self, 'black', frozenset(self.black))
        for r, c in self.white | self.black:
            if not (0 <= r < self.n and 0 <= c < self.n):
                raise ValueError('Cell ({}, {}) is off a board of side {}'.format(r, c, self.n))
        if self.white & self.black:
            raise ValueError('A cell holds both a white and a black queen')

    @property
    def m(self):
        return min(len(self.white), len(self.black))

    @property
    def balanced(self):
        return len(self.white) == len(self.black)


@dataclass(frozen=True)
class QueensResult:
    n: int
    m: int
    witness: Placement
    optimal: bool

    def __str__(self):
        return 'm={}, {}'.format(self.m, 'optimal' if self.optimal else 'best found')


def _lines(cell):
    r, c = cell
    return (('r', r), ('c', c), ('d', r - c), ('a', r + c))


def verify(p):
    """ True when no white queen shares a row, column or diagonal with a black
        queen; pieces in between do not block
    """
    occupied = set()
    for cell in p.white:
        occupied.update(_lines(cell))
    return not any(line in occupied for cell in p.black for line in _lines(cell))


def lower_bound(n):
    return 7 * n * n // 48


def _attack_masks(n):
    masks = []
    for r in range(n):
        for c in range(n):
            mask = 0
            for r2 in range(n):
                for c2 in range(n):
                    if r2 == r or c2 == c or r2 - c2 == r - c or r2 + c2 == r + c:
                        mask |= 1 << (r2 * n + c2)
            masks.append(mask)
    return masks


def _popcount(x):
    return bin(x).count('1')


class _Deadline(Exception):
    pass


class _ArmySearch(object):
    """ Depth-first choice of white cells in row-major order; every cell no
        white queen attacks is free for black

    Boards are reduced by symmetry: the white bounding box is kept no nearer
    the bottom, left or right edge than it is to the top.
    """

    def __init__(self, n, deadline):
        self.n = n
        self.size = n * n
        self.masks = _attack_masks(n)
        self.full = (1 << self.size) - 1
        self.deadline = deadline
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _Deadline()

    def branch(self, first, m):
        """ A white army of m cells whose smallest cell is ``first``, or None """
        n = self.n
        top = first // n
        if top > min(first % n, n - 1 - top, n - 1 - first % n):
            return None
        chosen = [first]
        attacked = self.masks[first]
        if _popcount(self.full & ~attacked) < m:
            return None
        box = (top, first % n, first % n)
        found = self._extend(chosen, attacked, first + 1, m, top, box)
        return found

    def _extend(self, chosen, attacked, start, m, top, box):
        self._tick()
        if len(chosen) == m:
            return list(chosen)
        n = self.n
        for i in range(start, self.size - (m - len(chosen)) + 1):
            r, c = divmod(i, n)
            bottom, left, right = max(box[0], r), min(box[1], c), max(box[2], c)
            if top > min(left, n - 1 - bottom, n - 1 - right):
                continue
            now = attacked | self.masks[i]
            if _popcount(self.full & ~now) < m:
                continue
            chosen.append(i)
            found = self._extend(chosen, now, i + 1, m, top, (bottom, left, right))
            if found:
                return found
            chosen.pop()
        return None

    def placement(self, white_cells, m):
        n = self.n
        attacked = 0
        for i in white_cells:
            attacked |= self.masks[i]
        free = [i for i in range(self.size) if not (attacked >> i) & 1]
        return Placement(n, {divmod(i, n) for i in white_cells},
                         {divmod(i, n) for i in free[:m]})


def solve_exact(n, time_budget=DEFAULT_TIME_BUDGET, threads=1):
    """ Largest m for which m white and m black queens coexist peaceably

    Army sizes are tried upwards from the constructive bound; each size is
    split into one branch per choice of the first white cell.
    """
    if n < 1:
        raise ValueError('Board side must be at least 1')

    deadline = time.monotonic() + time_budget
    search = _ArmySearch(n, deadline)
    best = jubin_construction(n)
    best = _balanced(best)
    logger.debug('n={}: construction gives {}'.format(n, best.m))

    m = best.m + 1
    while m <= n * n // 2:
        def job(first, m=m):
            try:
                return search.branch(first, m)
            except _Deadline:
                return _Deadline

        results = parallel_map(job, range(search.size), threads)
        timed_out = any(r is _Deadline for r in results)
        found = [r for r in results if r not in (None, _Deadline)]
        if found:
            best = search.placement(min(found), m)
            logger.debug('n={}: found m={} after {} nodes'.format(n, m, search.nodes))
            m += 1
            continue
        if timed_out:
            logger.warning('n={}: time budget spent while trying m={}'.format(n, m))
            return QueensResult(n, best.m, best, False)
        break

    logger.info('n={}: m={} is optimal ({} nodes)'.format(n, best.m, search.nodes))
    return QueensResult(n, best.m, best, True)


def _balanced(p):
    m = p.m
    return Placement(p.n, sorted(p.white)[:m], sorted(p.black)[:m])


def _region_counts(n, params):
    """ Cell counts of the white and black regions for every parameter choice

    Each region is an intersection of a row condition, a column-and-antidiagonal
    condition and a diagonal condition, so the counts come out of one matrix
    product per colour.
    """
    r, c = np.divmod(np.arange(n * n), n)
    d, s = r - c, r + c
    row_sets, cs_sets, diag_sets = params

    rows = np.array([(r < r1) | ((r >= r2) & (r < r3)) for r1, r2, r3 in row_sets], dtype=float)
    cols = np.array([(c < c0) & (s < s0) for c0, s0 in cs_sets], dtype=float)
    cols_black = np.array([(c >= c0) & (s >= s0) for c0, s0 in cs_sets], dtype=float)
    diags = np.array([((d >= d1) & (d < d2)) | (d >= d3) for d1, d2, d3 in diag_sets], dtype=float)

    white_rc = (rows[:, None, :] * cols[None, :, :]).reshape(-1, n * n)
    black_rc = ((1 - rows)[:, None, :] * cols_black[None, :, :]).reshape(-1, n * n)
    white = white_rc @ diags.T
    black = black_rc @ (1 - diags).T
    return white.reshape(len(row_sets), len(cs_sets), len(diag_sets)), \
        black.reshape(len(row_sets), len(cs_sets), len(diag_sets))


def _region(n, r1, r2, r3, c0, s0, d1, d2, d3):
    white, black = set(), set()
    for r in range(n):
        white_row = r < r1 or r2 <= r < r3
        for c in range(n):
            d, s = r - c, r + c
            white_diag = d1 <= d < d2 or d >= d3
            if white_row and c < c0 and s < s0 and white_diag:
                white.add((r, c))
            elif not white_row and c >= c0 and s >= s0 and not white_diag:
                black.add((r, c))
    return Placement(n, white, black)


def jubin_construction(n):
    """ Four pentagonal regions, two per colour, cut out by rows, columns and
        both diagonal directions

    White takes rows [0, r1) and [r2, r3), columns left of c0, antidiagonals
    below s0 and diagonals in [d1, d2) or from d3 on; black takes the
    complement of each condition, so the colours never share a line. The
    cut points start at fixed fractions of n and each is moved by at most
    one to maximise the smaller army.
    """
    if n < 1:
        raise ValueError('Board side must be at least 1')
    base = (n // 4, n // 2, 3 * n // 4, n // 2, n - 1, -(n // 3), 0, n // 3)
    shifts = (-1, 0, 1)

    row_sets = [tuple(b + k for b, k in zip(base[0:3], ks)) for ks in itertools.product(shifts, repeat=3)]
    cs_sets = [tuple(b + k for b, k in zip(base[3:5], ks)) for ks in itertools.product(shifts, repeat=2)]
    diag_sets = [tuple(b + k for b, k in zip(base[5:8], ks)) for ks in itertools.product(shifts, repeat=3)]
    ordered = np.array([d1 <= d2 <= d3 for d1, d2, d3 in diag_sets])

    white, black = _region_counts(n, (row_sets, cs_sets, diag_sets))
    score = np.minimum(white, black)
    score[:, :, ~ordered] = -1
    i, j, k = np.unravel_index(int(np.argmax(score)), score.shape)

    p = _region(n, *row_sets[i], *cs_sets[j], *diag_sets[k])
    logger.debug('Construction for n={}: {} white, {} black'.format(n, len(p.white), len(p.black)))
    return p


def symmetries(p):
    """ The eight images of a placement under rotations and reflections """
    n = p.n
    maps = (
        lambda r, c: (r, c),
        lambda r, c: (c, n - 1 - r),
        lambda r, c: (n - 1 - r, n - 1 - c),
        lambda r, c: (n - 1 - c, r),
        lambda r, c: (r, n - 1 - c),
        lambda r, c: (n - 1 - r, c),
        lambda r, c: (c, r),
        lambda r, c: (n - 1 - c, n - 1 - r),
    )
    return [Placement(n, {f(*x) for x in p.white}, {f(*x) for x in p.black}) for f in maps]


def swap_colours(p):
    return Placement(p.n, p.black, p.white)


def render_ascii(p):
    rows = []
    for r in range(p.n):
        row = []
        for c in range(p.n):
            if (r, c) in p.white:
                row.append(WHITE)
            elif (r, c) in p.black:
                row.append(BLACK)
            else:
                row.append(EMPTY)
        rows.append(''.join(row))
    return '\n'.join(rows)


def render_svg(p, cell=24):
    side = p.n * cell
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" '
             'viewBox="0 0 {0} {0}">'.format(side)]
    for r in range(p.n):
        for c in range(p.n):
            shade = '#d8c8a8' if (r + c) % 2 == 0 else '#a88858'
            parts.append('<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>'.format(
                c * cell, r * cell, cell, cell, shade))
    for colour, cells in (('#ffffff', p.white), ('#000000', p.black)):
        for r, c in sorted(cells):
            parts.append('<circle cx="{}" cy="{}" r="{}" fill="{}" stroke="#000000"/>'.format(
                c * cell + cell // 2, r * cell + cell // 2, cell * 3 // 8, colour))
    parts.append('</svg>')
    return '\n'.join(parts) + '\n'


def render(p, fmt='ascii'):
    if fmt == 'ascii':
        return render_ascii(p)
    if fmt == 'svg':
        return render_svg(p)
    raise ValueError('Unknown format {!r}'.format(fmt))


def parse_ascii(text):
    """ Board rows of W, B and '.' or '·', optionally preceded by a line giving n """
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if lines and lines[0].isdigit():
        n = int(lines.pop(0))
    else:
        n = len(lines)
    if len(lines) != n or any(len(line) != n for line in lines):
        raise ValueError('Expected {0} rows of {0} cells'.format(n))

    white, black = set(), set()
    for r, line in enumerate(lines):
        for c, ch in enumerate(line):
            if ch == WHITE:
                white.add((r, c))
            elif ch == BLACK:
                black.add((r, c))
            elif ch not in (EMPTY, '.'):
                raise ValueError('Unexpected cell {!r} in row {}'.format(ch, r))
    return Placement(n, white, black)


FIVE_BY_FIVE = parse_ascii("""
W·W··
····B
W·W··
····B
·B·B·
""")
