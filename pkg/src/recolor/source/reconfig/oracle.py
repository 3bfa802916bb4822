from typing import Iterator, Optional
from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path
from tqdm import tqdm

from source.errors import BudgetExceededError, ColoringError, DisconnectedError, InfeasibleColoringError
from source.graph_core import Graph
from source.coloring import Coloring, is_frozen, is_proper, iter_color_vectors
from source.reconfig.path import RecoloringPath

DEFAULT_BUDGET = 1_000_000


def recoloring_moves(G: Graph, colors: tuple[int, ...], ell: int) -> Iterator[tuple[int, int]]:
    '''Every single-vertex recolouring (v, c) that keeps the colouring proper.'''
    for v in range(G.n):
        blocked = {colors[u] for u in G.adj[v]}
        blocked.add(colors[v])
        for c in range(1, ell + 1):
            if c not in blocked:
                yield v, c


def _apply(colors: tuple[int, ...], v: int, c: int) -> tuple[int, ...]:
    return colors[:v] + (c,) + colors[v + 1:]


def collect_colorings(G: Graph, ell: int, budget: Optional[int] = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    '''All proper ell-colourings in lexicographic order, refusing more than budget of them.'''
    states = []
    for colors in iter_color_vectors(G, ell):
        states.append(colors)
        if budget is not None and len(states) > budget:
            raise BudgetExceededError(len(states), budget)
    if len(states) == 0:
        raise InfeasibleColoringError(f'graph has no proper {ell}-coloring')
    return states


def _bfs(G: Graph, source: tuple[int, ...], ell: int, budget: Optional[int] = None) -> dict:
    parents = {source: None}
    queue = deque([source])
    while queue:
        colors = queue.popleft()
        for v, c in recoloring_moves(G, colors, ell):
            following = _apply(colors, v, c)
            if following not in parents:
                parents[following] = (colors, v, c)
                if budget is not None and len(parents) > budget:
                    raise BudgetExceededError(len(parents), budget)
                queue.append(following)
    return parents


@dataclass(frozen=True)
class ConnectivityResult:
    connected: bool
    count: int
    witness: Optional[tuple[Coloring, Coloring]] = None

    def __bool__(self) -> bool:
        return self.connected

    def to_dict(self) -> dict:
        return {
            'connected': self.connected,
            'colorings': self.count,
            'witness': None if self.witness is None else [list(c.colors) for c in self.witness],
        }


def reconfig_connected(G: Graph, ell: int, budget: Optional[int] = DEFAULT_BUDGET) -> ConnectivityResult:
    '''
    Breadth-first search from the lexicographically least colouring; R_ell(G)
    is connected iff the search reaches every proper colouring. A disconnected
    verdict carries the start and the least colouring that was not reached.
    '''
    states = collect_colorings(G, ell, budget)
    reached = _bfs(G, states[0], ell)
    if len(reached) == len(states):
        return ConnectivityResult(True, len(states))
    other = next(colors for colors in states if colors not in reached)
    return ConnectivityResult(False, len(states), (Coloring(states[0], ell), Coloring(other, ell)))


@dataclass(frozen=True)
class ReconfigComponent:
    representative: Coloring
    size: int
    frozen: bool

    def to_dict(self) -> dict:
        return {'representative': list(self.representative.colors), 'size': self.size, 'frozen': self.frozen}


@dataclass(frozen=True)
class ComponentCensus:
    ell: int
    count: int
    components: tuple[ReconfigComponent, ...]

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    def frozen_colorings(self) -> list[Coloring]:
        return [component.representative for component in self.components if component.frozen]

    def to_dict(self) -> dict:
        return {
            'ell': self.ell,
            'colorings': self.count,
            'components': [component.to_dict() for component in self.components],
        }


def reconfig_components(G: Graph, ell: int, budget: Optional[int] = DEFAULT_BUDGET) -> ComponentCensus:
    '''Components of R_ell(G), each represented by its lexicographically least colouring.'''
    states = collect_colorings(G, ell, budget)
    seen: set[tuple[int, ...]] = set()
    found = []
    for colors in states:
        if colors in seen:
            continue
        reached = _bfs(G, colors, ell)
        seen.update(reached)
        representative = Coloring(colors, ell)
        frozen = len(reached) == 1 and is_frozen(G, representative)
        found.append(ReconfigComponent(representative, len(reached), frozen))
    return ComponentCensus(ell, len(states), tuple(found))


def reconfiguration_graph(G: Graph, ell: int, budget: Optional[int] = DEFAULT_BUDGET) -> tuple[list[tuple[int, ...]], csr_matrix]:
    '''Materialises R_ell(G) as a sparse adjacency matrix over the lexicographic list of colourings.'''
    states = collect_colorings(G, ell, budget)
    index = {colors: i for i, colors in enumerate(states)}
    rows, cols = [], []
    for i, colors in enumerate(states):
        for v, c in recoloring_moves(G, colors, ell):
            rows.append(i)
            cols.append(index[_apply(colors, v, c)])
    data = np.ones(len(rows), dtype=np.int8)
    matrix = csr_matrix((data, (rows, cols)), shape=(len(states), len(states)))
    return states, matrix


def _is_canonical(colors: tuple[int, ...]) -> bool:
    # colours appear for the first time in the order 1, 2, 3, ...
    top = 0
    for c in colors:
        if c > top + 1:
            return False
        top = max(top, c)
    return True


def reconfig_diameter(G: Graph, ell: int, budget: Optional[int] = DEFAULT_BUDGET,
                      chunk_cells: int = 1 << 24, progress: bool = False) -> int:
    '''
    Exact diameter of R_ell(G). Permuting colour names is an automorphism of
    R_ell(G), so only colourings whose colours first appear as 1, 2, 3, ...
    are used as breadth-first sources.
    '''
    states, matrix = reconfiguration_graph(G, ell, budget)
    n_components, _ = connected_components(matrix, directed=False)
    if n_components > 1:
        raise DisconnectedError(f'R_{ell} has {n_components} components')
    if len(states) == 1:
        return 0

    sources = np.array([i for i, colors in enumerate(states) if _is_canonical(colors)])
    chunk = max(1, chunk_cells // len(states))
    diameter = 0
    for begin in tqdm(range(0, len(sources), chunk), disable=not progress, leave=False):
        distances = shortest_path(matrix, directed=False, unweighted=True, indices=sources[begin:begin + chunk])
        diameter = max(diameter, int(distances.max()))
    return diameter


def _check_endpoints(G: Graph, a: Coloring, b: Coloring, ell: int):
    for name, c in (('a', a), ('b', b)):
        if not is_proper(G, c):
            raise ColoringError(f'coloring {name} is not proper')
        if max(c.colors, default=1) > ell:
            raise ColoringError(f'coloring {name} uses a color outside 1..{ell}')


def _unwind(parents: dict, target: tuple[int, ...]) -> list[tuple[int, int]]:
    steps = []
    colors = target
    while parents[colors] is not None:
        previous, v, c = parents[colors]
        steps.append((v, c))
        colors = previous
    return list(reversed(steps))


def shortest_recoloring_path(G: Graph, a: Coloring, b: Coloring, ell: int,
                             budget: Optional[int] = DEFAULT_BUDGET) -> Optional[RecoloringPath]:
    _check_endpoints(G, a, b, ell)
    source, target = a.colors, b.colors
    parents = {source: None}
    queue = deque([source])
    while queue and target not in parents:
        colors = queue.popleft()
        for v, c in recoloring_moves(G, colors, ell):
            following = _apply(colors, v, c)
            if following in parents:
                continue
            parents[following] = (colors, v, c)
            if budget is not None and len(parents) > budget:
                raise BudgetExceededError(len(parents), budget)
            queue.append(following)
    if target not in parents:
        return None
    return RecoloringPath(a.with_ell(ell), tuple(_unwind(parents, target)))


def bounded_recoloring_path(G: Graph, a: Coloring, b: Coloring, ell: int, max_per_vertex: int,
                            budget: Optional[int] = DEFAULT_BUDGET) -> Optional[RecoloringPath]:
    '''A shortest path from a to b among those recolouring no vertex more than max_per_vertex times.'''
    path = shortest_recoloring_path(G, a, b, ell, budget)
    if path is None:
        return None
    if path.max_count() <= max_per_vertex:
        return path

    # search over (colouring, per-vertex counts)
    source = (a.colors, (0,) * G.n)
    parents = {source: None}
    queue = deque([source])
    while queue:
        colors, counts = queue.popleft()
        if colors == b.colors:
            steps = []
            state = (colors, counts)
            while parents[state] is not None:
                state, v, c = parents[state]
                steps.append((v, c))
            return RecoloringPath(a.with_ell(ell), tuple(reversed(steps)))
        for v, c in recoloring_moves(G, colors, ell):
            if counts[v] == max_per_vertex:
                continue
            state = (_apply(colors, v, c), _apply(counts, v, counts[v] + 1))
            if state in parents:
                continue
            parents[state] = ((colors, counts), v, c)
            if budget is not None and len(parents) > budget:
                raise BudgetExceededError(len(parents), budget)
            queue.append(state)
    return None
