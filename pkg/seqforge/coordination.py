""" Coordination sequences of periodic graphs and finite patches """
import logging
from dataclasses import dataclass

import networkx as nx

from seqforge.exceptions import DisconnectedBase, InvalidConfiguration, PatchRadiusError
from seqforge.workers import parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PeriodicGraph:
    """ ``edges`` holds (u, v, offset): u in cell c joins v in cell c + offset.
        Every edge is stored in both directions.
    """
    dim: int
    cell_vertices: tuple
    edges: tuple

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError('Periodic graphs must be 2 or 3 dimensional')
        labels = set(self.cell_vertices)
        present = set(self.edges)
        for u, v, t in self.edges:
            if u not in labels or v not in labels:
                raise ValueError('Edge ({}, {}) names an unknown vertex'.format(u, v))
            if len(t) != self.dim:
                raise ValueError('Offset {} does not have {} coordinates'.format(t, self.dim))
            if (v, u, tuple(-x for x in t)) not in present:
                raise ValueError('Edge ({}, {}, {}) has no reverse'.format(u, v, t))

    @classmethod
    def from_undirected(cls, dim, cell_vertices, edges):
        both = []
        for u, v, t in edges:
            t = tuple(t)
            both.append((u, v, t))
            both.append((v, u, tuple(-x for x in t)))
        return cls(dim, tuple(cell_vertices), tuple(both))

    def neighbours(self, vertex):
        return [(v, t) for u, v, t in self.edges if u == vertex]

    def degree(self, vertex):
        return len(self.neighbours(vertex))

    @property
    def max_offset(self):
        return max((max(abs(x) for x in t) for _, _, t in self.edges), default=0)


@dataclass(frozen=True)
class CoordSeq:
    terms: tuple
    base: object

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, n):
        return self.terms[n]


def square_grid():
    return PeriodicGraph.from_undirected(2, ('v',), [('v', 'v', (1, 0)), ('v', 'v', (0, 1))])


def cairo_graph():
    """ The Cairo pentagonal tiling; four pentagons per cell

    T0 and T1 are the tetravalent vertices, the other four trivalent vertices
    are paired across the short edges (Vp with Vm, Hp with Hm).
    """
    return PeriodicGraph.from_undirected(2, ('T0', 'T1', 'Vp', 'Vm', 'Hp', 'Hm'), [
        ('Vp', 'Vm', (0, 0)),
        ('Hp', 'Hm', (0, 0)),
        ('Vp', 'T1', (0, 0)),
        ('Vp', 'T0', (1, 0)),
        ('Vm', 'T0', (0, 0)),
        ('Vm', 'T1', (0, -1)),
        ('Hp', 'T1', (0, 0)),
        ('Hp', 'T0', (0, 0)),
        ('Hm', 'T1', (-1, 0)),
        ('Hm', 'T0', (0, 1)),
    ])


BUILTIN_GRAPHS = {
    'square': square_grid,
    'cairo': cairo_graph,
}


def coordination_sequence(g, base, n_max):
    """ Number of vertices at each graph distance 0..n_max from ``base`` in cell 0

    Cells are materialised only as the BFS reaches them; a vertex n hops away
    sits within n * max_offset cells of the origin.
    """
    if n_max < 0:
        raise ValueError('n_max must be nonnegative')
    if base not in g.cell_vertices:
        raise ValueError('Unknown base vertex {!r}'.format(base))

    adjacency = {v: g.neighbours(v) for v in g.cell_vertices}
    if not adjacency[base]:
        raise DisconnectedBase('Vertex {!r} has no neighbours'.format(base))

    origin = (0,) * g.dim
    seen = {(base, origin)}
    frontier = [(base, origin)]
    terms = [1]
    for k in range(1, n_max + 1):
        nxt = []
        for v, cell in frontier:
            for w, t in adjacency[v]:
                node = (w, tuple(a + b for a, b in zip(cell, t)))
                if node not in seen:
                    seen.add(node)
                    nxt.append(node)
        if not nxt:
            raise DisconnectedBase('The component of {!r} is finite ({} vertices)'.format(base, len(seen)))
        terms.append(len(nxt))
        frontier = nxt

    cells = {cell for _, cell in seen}
    logger.debug('BFS from {!r} to depth {} touched {} cells'.format(base, n_max, len(cells)))
    return CoordSeq(tuple(terms), base)


def coordination_table(g, n_max, threads=1):
    """ Coordination sequence of every vertex of the unit cell """
    sequences = parallel_map(lambda v: coordination_sequence(g, v, n_max), g.cell_vertices, threads)
    return dict(zip(g.cell_vertices, sequences))


def trivalent_formula(n):
    if n < 0:
        raise ValueError('n must be nonnegative')
    if n < 3:
        return (1, 3, 8)[n]
    if n % 2 == 1:
        return 4 * n
    return 4 * n - 1 if n % 4 == 0 else 4 * n + 1


def tetravalent_formula(n):
    if n < 0:
        raise ValueError('n must be nonnegative')
    return 1 if n == 0 else 4 * n


@dataclass
class PatchGraph:
    graph: nx.Graph
    base: object
    radius_valid: int


def parse_patch(text):
    """ Lines 'v id', 'e id id', 'base id' and 'radius k'; '#' starts a comment """
    graph = nx.Graph()
    base = None
    radius = None
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == 'v' and len(args) == 1:
            graph.add_node(args[0])
        elif kind == 'e' and len(args) == 2:
            if args[0] == args[1]:
                raise InvalidConfiguration('Line {}: loops are not allowed'.format(line_no))
            graph.add_edge(args[0], args[1])
        elif kind == 'base' and len(args) == 1:
            base = args[0]
        elif kind == 'radius' and len(args) == 1 and args[0].isdigit():
            radius = int(args[0])
        else:
            raise InvalidConfiguration('Line {}: cannot read {!r}'.format(line_no, raw))

    if base is None or radius is None:
        raise InvalidConfiguration('A patch needs both a base and a radius line')
    if base not in graph:
        raise InvalidConfiguration('Base vertex {} is not in the patch'.format(base))
    return PatchGraph(graph, base, radius)


def load_patch(path):
    with open(path, 'r') as f:
        return parse_patch(f.read())


def patch_coordination(p, n_max):
    if n_max > p.radius_valid:
        raise PatchRadiusError('Shells beyond radius {} are cut by the patch boundary (asked for {})'.format(
            p.radius_valid, n_max))
    if p.graph.degree(p.base) == 0 and n_max > 0:
        raise DisconnectedBase('Vertex {} has no neighbours'.format(p.base))

    distances = nx.single_source_shortest_path_length(p.graph, p.base, cutoff=n_max)
    terms = [0] * (n_max + 1)
    for d in distances.values():
        terms[d] += 1
    return CoordSeq(tuple(terms), p.base)
