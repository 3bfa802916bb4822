import re
import hashlib
from typing import Callable, Optional
from dataclasses import dataclass, field

from source.graph_core.graph import Graph, build_graph
from source.utils.labels import GRAPH_F_ID_TO_LABEL, PRISM_STAR_ID_TO_LABEL


# frozen gadget: chords plus an outer 16-cycle
GADGET_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 9),
    (0, 11), (0, 12), (0, 13), (0, 14), (0, 15), (1, 2), (1, 3), (1, 4),
    (1, 5), (1, 7), (1, 8), (1, 10), (1, 12), (1, 13), (1, 14), (1, 15),
    (2, 3), (2, 4), (2, 5), (2, 6), (2, 8), (2, 9), (2, 11), (2, 13),
    (2, 14), (2, 15), (3, 4), (3, 5), (3, 6), (3, 7), (3, 9), (3, 10),
    (3, 12), (3, 14), (3, 15), (4, 5), (4, 6), (4, 7), (4, 8), (4, 10),
    (4, 11), (4, 13), (4, 14), (4, 15), (5, 6), (5, 7), (5, 8), (5, 9),
    (5, 10), (5, 11), (5, 12), (5, 14), (6, 7), (6, 8), (6, 9), (6, 10),
    (6, 12), (6, 13), (6, 15), (7, 8), (7, 9), (7, 10), (7, 11), (7, 13),
    (7, 14), (8, 9), (8, 10), (8, 11), (8, 12), (8, 14), (8, 15), (9, 10),
    (9, 11), (9, 12), (9, 13), (9, 14), (9, 15), (10, 11), (10, 12), (10, 13),
    (10, 14), (10, 15), (11, 12), (11, 13), (11, 14), (11, 15), (12, 13), (12, 14),
    (12, 15), (13, 14), (13, 15), (14, 15),
)
GADGET_CHECKSUM = 'eadbed61ff8722d26ac71550aa62e40f4bbdd5b6e651f40da29fa3477641360b'
GADGET_COLORINGS = {
    'proper7': (1, 2, 3, 4, 5, 7, 2, 3, 4, 5, 1, 2, 3, 4, 6, 7),
    'frozen8': (1, 2, 3, 4, 5, 6, 7, 8, 1, 2, 3, 4, 5, 6, 7, 8),
}

# z, y, x, w, d, c, b, a -> 0..7
GRAPH_F_EDGES = (
    (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3),
    (2, 6), (3, 7), (4, 5), (4, 7), (5, 6), (6, 7),
)

# v1, v2, v3, x1, y1, z1, y2, z2, x2 -> 0..8; the first nine edges are the 3-prism
PRISM3_STAR_EDGES = (
    (0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5),
    (6, 7), (7, 8), (6, 8), (1, 6), (3, 6), (2, 7), (4, 7), (5, 8), (0, 8),
)

SMALL_GRAPHS = {
    'K1': (1, ()),
    'K2': (2, ((0, 1),)),
    'P3': (3, ((0, 1), (1, 2))),
    'triangle': (3, ((0, 1), (0, 2), (1, 2))),
    '4K1': (4, ()),
    'K4': (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    'C4': (4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    '2K2': (4, ((0, 1), (2, 3))),
    'P4': (4, ((0, 1), (1, 2), (2, 3))),
    'P3+P1': (4, ((0, 1), (1, 2))),
    'claw': (4, ((0, 1), (0, 2), (0, 3))),
    'co-claw': (4, ((1, 2), (1, 3), (2, 3))),
    'diamond': (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3))),
    'co-diamond': (4, ((2, 3),)),
    'paw': (4, ((0, 1), (0, 2), (1, 2), (0, 3))),
    'P5': (5, ((0, 1), (1, 2), (2, 3), (3, 4))),
    'C5': (5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))),
    'house': (5, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4))),
    'banner': (5, ((0, 1), (1, 2), (2, 3), (0, 3), (2, 4))),
    'co-banner': (5, ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4))),
    'fork': (5, ((0, 1), (1, 2), (2, 3), (2, 4))),
    'co-fork': (5, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4))),
    'graph_F': (8, GRAPH_F_EDGES),
    'prism3': (6, PRISM3_STAR_EDGES[:9]),
    'prism3_star': (9, PRISM3_STAR_EDGES),
    'frozen_gadget': (16, GADGET_EDGES),
}

ALIASES = {
    'k3': 'triangle',
    'co-paw': 'P3+P1',
    'chair': 'fork',
    'figure4_graph': 'frozen_gadget',
}


@dataclass
class NamedGraph:
    name: str
    params: tuple
    graph: Graph
    labels: Optional[tuple[str, ...]] = None
    colorings: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def edges_checksum(edges) -> str:
    text = ';'.join(f'{u}-{v}' for u, v in sorted(edges))
    return hashlib.sha256(text.encode()).hexdigest()


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f'path needs at least one vertex, got {n}')
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f'cycle needs at least three vertices, got {n}')
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f'complete graph needs at least one vertex, got {n}')
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_multipartite(*sizes: int) -> Graph:
    if len(sizes) == 0 or any(size < 1 for size in sizes):
        raise ValueError(f'part sizes must be positive, got {sizes}')
    part_of = [i for i, size in enumerate(sizes) for _ in range(size)]
    n = len(part_of)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if part_of[u] != part_of[v]])


def complete_bipartite(n: int, m: Optional[int] = None) -> Graph:
    return complete_multipartite(n, n if m is None else m)


def k_ll_minus_matching(ell: int) -> Graph:
    # left side 0..ell-1, right side ell..2ell-1; i and ell+i are the removed matching
    if ell < 1:
        raise ValueError(f'ell must be positive, got {ell}')
    return build_graph(2 * ell, [(i, ell + j) for i in range(ell) for j in range(ell) if i != j])


def kll_frozen_coloring(ell: int) -> tuple[int, ...]:
    return tuple(list(range(1, ell + 1)) * 2)


BUILDERS: dict[str, Callable[..., Graph]] = {
    'path': path_graph,
    'cycle': cycle_graph,
    'complete': complete_graph,
    'complete_bipartite': complete_bipartite,
    'complete_multipartite': complete_multipartite,
    'k_ll_minus_matching': k_ll_minus_matching,
}

PATTERNS = (
    (re.compile(r'^P(\d+)$'), 'path'),
    (re.compile(r'^C(\d+)$'), 'cycle'),
    (re.compile(r'^K(\d+)$'), 'complete'),
    (re.compile(r'^K(\d+),(\d+)$'), 'complete_bipartite'),
    (re.compile(r'^(\d+)K1$'), 'empty'),
)


def resolve_name(name: str) -> tuple[str, tuple[int, ...]]:
    '''Map names such as "C6", "K3,3" or "co-diamond" to a builder name and parameters.'''
    if name in SMALL_GRAPHS or name in BUILDERS:
        return name, ()
    lowered = name.lower()
    if lowered in ALIASES:
        return ALIASES[lowered], ()
    for small_name in SMALL_GRAPHS:
        if small_name.lower() == lowered:
            return small_name, ()
    for pattern, builder in PATTERNS:
        match = pattern.match(name)
        if match is not None:
            return builder, tuple(int(group) for group in match.groups())
    raise ValueError(f'{name} is not supported.')


def catalog_entry(name: str, *params: int) -> NamedGraph:
    base, implied = resolve_name(name)
    params = tuple(implied) + tuple(params)

    if base in SMALL_GRAPHS:
        if len(params) > 0:
            raise ValueError(f'{name} takes no parameters, got {params}')
        n, edges = SMALL_GRAPHS[base]
        entry = NamedGraph(base, (), build_graph(n, edges))
        if base == 'graph_F':
            entry.labels = tuple(GRAPH_F_ID_TO_LABEL[v] for v in range(n))
        elif base in ('prism3', 'prism3_star'):
            entry.labels = tuple(PRISM_STAR_ID_TO_LABEL[v] for v in range(n))
        elif base == 'frozen_gadget':
            assert edges_checksum(edges) == GADGET_CHECKSUM, 'frozen_gadget edge list was modified'
            entry.colorings = dict(GADGET_COLORINGS)
        return entry

    if base == 'empty':
        return NamedGraph(f'{params[0]}K1', (), build_graph(params[0], []))

    builder = BUILDERS[base]
    try:
        graph = builder(*params)
    except TypeError as e:
        raise ValueError(f'invalid parameters {params} for {base}') from e
    entry = NamedGraph(base, params, graph)
    if base == 'k_ll_minus_matching':
        entry.colorings = {'frozen': kll_frozen_coloring(params[0])}
    return entry


def catalog(name: str, *params: int) -> Graph:
    return catalog_entry(name, *params).graph


def catalog_names() -> list[str]:
    return list(SMALL_GRAPHS) + list(BUILDERS)
