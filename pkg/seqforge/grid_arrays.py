""" Two-dimensional greedy arrays: the Nim-sum table, the Sudoku array and the
    spiral array, with line extraction and serialisation
"""
import logging
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from seqforge.exceptions import WindowError

logger = logging.getLogger(__name__)

CELL_MAX = np.iinfo(np.int32).max

# Counterclockwise, first move east
SPIRAL_DIRECTIONS = ((1, 0), (0, 1), (-1, 0), (0, -1))

SPOKES = {
    'E': (1, 0), 'NE': (1, 1), 'N': (0, 1), 'NW': (-1, 1),
    'W': (-1, 0), 'SW': (-1, -1), 'S': (0, -1), 'SE': (1, -1),
}


@dataclass
class QuarterPlaneArray:
    """ Cells T(m, n) for 0 <= m < rows, 0 <= n < cols; m is the row """
    cells: np.ndarray
    fill_order: str = 'antidiagonal-upwards'

    @property
    def size(self):
        return self.cells.shape

    def __getitem__(self, key):
        return int(self.cells[key])

    def antidiagonals(self):
        """ Complete antidiagonals read upwards: (d, 0), (d-1, 1), ..., (0, d) """
        rows, cols = self.cells.shape
        out = []
        for d in range(min(rows, cols)):
            out.extend(int(self.cells[d - n, n]) for n in range(d + 1))
        return out

    def lines(self):
        rows, cols = self.cells.shape
        for m in range(rows):
            yield ('row', m), self.cells[m, :]
        for n in range(cols):
            yield ('column', n), self.cells[:, n]
        for k in range(-rows + 1, cols):
            yield ('diagonal', k), np.diagonal(self.cells, k)
        flipped = np.fliplr(self.cells)
        for k in range(-rows + 1, cols):
            yield ('antidiagonal', cols - 1 - k), np.diagonal(flipped, k)


@dataclass
class SpiralArray:
    """ Cells over [-radius, radius]^2; ``cells[y + radius, x + radius]`` """
    radius: int
    cells: np.ndarray
    fill_order: str = 'counterclockwise-spiral'

    def at(self, x, y):
        r = self.radius
        if max(abs(x), abs(y)) > r:
            raise WindowError('({}, {}) lies outside radius {}'.format(x, y, r))
        return int(self.cells[y + r, x + r])

    def lines(self):
        r = self.radius
        coords = range(-r, r + 1)
        for y in coords:
            yield ('row', y), [self.at(x, y) for x in coords]
        for x in coords:
            yield ('column', x), [self.at(x, y) for y in coords]
        for k in range(-2 * r, 2 * r + 1):
            yield ('diagonal', k), [self.at(x, x - k) for x in coords if abs(x - k) <= r]
            yield ('antidiagonal', k), [self.at(x, k - x) for x in coords if abs(k - x) <= r]


@dataclass
class LineView:
    kind: str
    origin: object
    values: list


def _to_array(values, shape):
    top = max(values.values(), default=0)
    if top > CELL_MAX:
        raise OverflowError('Cell value {} does not fit in 32 bits'.format(top))
    out = np.zeros(shape, dtype=np.int32)
    for key, value in values.items():
        out[key] = value
    return out


def nim_sum_table(rows, cols):
    return QuarterPlaneArray(np.bitwise_xor.outer(np.arange(rows, dtype=np.int32),
                                                  np.arange(cols, dtype=np.int32)))


def mex_fill(rows, cols):
    """ Smallest nonnegative value absent from the row to the left and the column above """
    cells = np.zeros((rows, cols), dtype=np.int32)
    for d in range(rows + cols - 1):
        for n in range(max(0, d - rows + 1), min(d, cols - 1) + 1):
            m = d - n
            seen = set(cells[m, :n].tolist()) | set(cells[:m, n].tolist())
            v = 0
            while v in seen:
                v += 1
            cells[m, n] = v
    return QuarterPlaneArray(cells)


def mex_fill_equivalence(rows, cols):
    return bool(np.array_equal(mex_fill(rows, cols).cells, nim_sum_table(rows, cols).cells))


def sudoku_array(rows, cols):
    """ Greedy fill by upward antidiagonals, smallest positive value not yet on
        the cell's row, column, diagonal or antidiagonal

    Cells of the window depend on earlier cells of their antidiagonal that
    lie below it, so the fill covers the trapezoid n < cols, m + n <= rows + cols - 2.
    """
    row_seen = defaultdict(set)
    col_seen = defaultdict(set)
    diag_seen = defaultdict(set)
    anti_seen = defaultdict(set)
    window = {}

    for d in range(rows + cols - 1):
        for n in range(min(d, cols - 1) + 1):
            m = d - n
            lines = (row_seen[m], col_seen[n], diag_seen[m - n], anti_seen[d])
            v = 1
            while any(v in line for line in lines):
                v += 1
            for line in lines:
                line.add(v)
            if m < rows:
                window[m, n] = v

    logger.debug('Sudoku array {}x{} filled'.format(rows, cols))
    return QuarterPlaneArray(_to_array(window, (rows, cols)))


def sudoku_main_diagonal(n):
    return [int(v) for v in np.diagonal(sudoku_array(n, n).cells)]


def grundy_table(rows, cols):
    """ Sprague-Grundy values of the two-pile game where a move takes from the
        first pile, from the second pile, equally from both, or shifts counters
        from the second pile onto the first
    """
    heights = [rows + cols - 1 - n for n in range(cols)]
    g = {}
    for n in range(cols):
        for m in range(heights[n]):
            options = set()
            options.update(g[m2, n] for m2 in range(m))
            options.update(g[m, n2] for n2 in range(n))
            options.update(g[m - k, n - k] for k in range(1, min(m, n) + 1))
            options.update(g[m + k, n - k] for k in range(1, n + 1))
            v = 0
            while v in options:
                v += 1
            g[m, n] = v
    window = {key: v for key, v in g.items() if key[0] < rows}
    return QuarterPlaneArray(_to_array(window, (rows, cols)))


def spiral_positions(radius):
    """ Cells of the square of the given radius in spiral order from the origin """
    x = y = 0
    yield x, y
    total = (2 * radius + 1) ** 2
    placed = 1
    step = 1
    turn = 0
    while placed < total:
        for _ in range(2):
            dx, dy = SPIRAL_DIRECTIONS[turn % 4]
            for _ in range(step):
                x += dx
                y += dy
                if max(abs(x), abs(y)) <= radius:
                    yield x, y
                    placed += 1
                    if placed == total:
                        return
            turn += 1
        step += 1


def spiral_array(radius):
    """ Smallest positive value absent from every row, column and slope +-1
        diagonal through the cell, among the cells placed before it
    """
    row_seen = defaultdict(set)
    col_seen = defaultdict(set)
    diag_seen = defaultdict(set)
    anti_seen = defaultdict(set)
    values = {}

    for x, y in spiral_positions(radius):
        lines = (row_seen[y], col_seen[x], diag_seen[x - y], anti_seen[x + y])
        v = 1
        while any(v in line for line in lines):
            v += 1
        for line in lines:
            line.add(v)
        values[y + radius, x + radius] = v

    size = 2 * radius + 1
    return SpiralArray(radius, _to_array(values, (size, size)))


def extract_line(array, kind, origin):
    """ Values along one line of a stored array

    Quarter-plane arrays: row m, column n, diagonal k (cells with n - m = k,
    increasing m) and antidiagonal d (cells with m + n = d, increasing n).
    Spiral arrays: row y, column x, diagonal k (x - y = k), antidiagonal k
    (x + y = k), all by increasing x then y, and spoke named by compass point
    (centre first, moving outwards).
    """
    if isinstance(array, SpiralArray):
        return _spiral_line(array, kind, origin)

    rows, cols = array.cells.shape
    if kind == 'row':
        _check(0 <= origin < rows, origin)
        values = array.cells[origin, :]
    elif kind == 'column':
        _check(0 <= origin < cols, origin)
        values = array.cells[:, origin]
    elif kind == 'diagonal':
        _check(-rows < origin < cols, origin)
        values = np.diagonal(array.cells, origin)
    elif kind == 'antidiagonal':
        _check(0 <= origin <= rows + cols - 2, origin)
        values = [array.cells[origin - n, n] for n in range(cols) if 0 <= origin - n < rows]
    else:
        raise ValueError('Unknown line kind {!r}'.format(kind))
    return LineView(kind, origin, [int(v) for v in values])


def _spiral_line(array, kind, origin):
    r = array.radius
    coords = range(-r, r + 1)
    if kind == 'spoke':
        _check(origin in SPOKES, origin)
        dx, dy = SPOKES[origin]
        values = [array.at(k * dx, k * dy) for k in range(r + 1)]
    elif kind == 'row':
        _check(abs(origin) <= r, origin)
        values = [array.at(x, origin) for x in coords]
    elif kind == 'column':
        _check(abs(origin) <= r, origin)
        values = [array.at(origin, y) for y in coords]
    elif kind == 'diagonal':
        _check(abs(origin) <= 2 * r, origin)
        values = [array.at(x, x - origin) for x in coords if abs(x - origin) <= r]
    elif kind == 'antidiagonal':
        _check(abs(origin) <= 2 * r, origin)
        values = [array.at(x, origin - x) for x in coords if abs(origin - x) <= r]
    else:
        raise ValueError('Unknown line kind {!r}'.format(kind))
    return LineView(kind, origin, values)


def _check(inside, origin):
    if not inside:
        raise WindowError('Line origin {!r} lies outside the stored window'.format(origin))


def audit(array):
    """ Lines that repeat a value, as (kind, origin) pairs """
    bad = []
    for key, values in array.lines():
        values = list(values)
        if len(set(values)) != len(values):
            bad.append(key)
    return bad


def minimality_violations(array, cells):
    """ Sampled cells whose value could be lowered without creating a repeat on
        any of its lines within the window
    """
    bad = []
    if isinstance(array, SpiralArray):
        for x, y in cells:
            seen = set()
            for kind, origin in (('row', y), ('column', x), ('diagonal', x - y), ('antidiagonal', x + y)):
                seen.update(_spiral_line(array, kind, origin).values)
            if any(v not in seen for v in range(1, array.at(x, y))):
                bad.append((x, y))
        return bad

    for m, n in cells:
        seen = set()
        for kind, origin in (('row', m), ('column', n), ('diagonal', n - m), ('antidiagonal', m + n)):
            seen.update(extract_line(array, kind, origin).values)
        if any(v not in seen for v in range(1, array[m, n])):
            bad.append((m, n))
    return bad
