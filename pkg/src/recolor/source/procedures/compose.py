from typing import Callable, Optional, Sequence

from source.errors import BoundViolationError, PreconditionError
from source.graph_core import Graph
from source.coloring import Coloring, chromatic_number, is_proper, palette_map, remap_colors
from source.reconfig import PathBuilder, RecoloringPath
from source.procedures.renaming import renaming_walk

# solve(index, local_coloring, palette_size) -> path on part `index` to its good colouring on 1..chi
Solver = Callable[[int, Coloring, int], RecoloringPath]


def join_order(parts: Sequence[Sequence[int]]) -> list[int]:
    '''Order in which the two parts of a join take their colour blocks; a single vertex goes last.'''
    if len(parts[0]) == 1 and len(parts[1]) > 1:
        return [1, 0]
    return [0, 1]


def join_target(parts: Sequence[Sequence[int]], goods: Sequence[Sequence[int]], n: int) -> tuple[int, ...]:
    '''Good colouring of a join: the parts' good colourings stacked in join order.'''
    target = [0] * n
    offset = 0
    for i in join_order(parts):
        for v, c in zip(parts[i], goods[i]):
            target[v] = c + offset
        offset += max(goods[i])
    return tuple(target)


def union_target(parts: Sequence[Sequence[int]], goods: Sequence[Sequence[int]], n: int) -> tuple[int, ...]:
    target = [0] * n
    for part, good in zip(parts, goods):
        for v, c in zip(part, good):
            target[v] = c
    return tuple(target)


class _Recorder:
    '''Keeps the part paths returned by a solver.'''

    def __init__(self, solve: Solver):
        self._solve = solve
        self.paths: dict[int, RecoloringPath] = {}

    def __call__(self, index: int, local: Coloring, m: int) -> RecoloringPath:
        path = self._solve(index, local, m)
        self.paths[index] = path
        return path


def _local(colors: Sequence[int], part: Sequence[int], ell: int) -> Coloring:
    return Coloring(tuple(colors[v] for v in part), ell)


def _solve_in_palette(solve: Solver, index: int, local: Coloring, palette: list[int]) -> RecoloringPath:
    '''Solves a part on 1..len(palette) and maps the path onto palette, which must hold the part's colours.'''
    m = len(palette)
    into = palette_map(palette, range(1, m + 1))
    back = {c: p for p, c in into.items()}
    renamed = Coloring(tuple(into.get(c, c) for c in local.colors), m)
    path = solve(index, renamed, m)
    return remap_colors(path, range(1, m + 1), palette, back, ell=local.ell)


def _compose_join_single(parts: Sequence[Sequence[int]], a: Coloring, ell: int,
                         solve: Solver, chis: Sequence[int]) -> RecoloringPath:
    big, single = join_order(parts)
    X = list(parts[big])
    (v,) = parts[single]
    d = a[v]

    # X keeps away from d; palette_map only swaps d and ell
    palette = [c for c in range(1, ell + 1) if c != d]
    builder = PathBuilder(a, ell)
    builder.follow(_solve_in_palette(solve, big, _local(a, X, ell), palette), X)

    builder.recolor(v, chis[big] + 1)
    if d <= chis[big]:
        builder.recolor_all([x for x in X if builder.color(x) == ell], d)
    return builder.build()


def _compose_join(G: Graph, parts: Sequence[Sequence[int]], a: Coloring, ell: int,
                  solve: _Recorder, chis: Sequence[int]) -> RecoloringPath:
    colors_used = [set(a[v] for v in part) for part in parts]
    first = None
    for i in (0, 1):
        if ell - len(colors_used[1 - i]) >= chis[i] + 1:
            first = i
            break
    if first is None:
        raise PreconditionError('no part of the join has a spare color')
    second = 1 - first

    builder = PathBuilder(a, ell)
    palette = [c for c in range(1, ell + 1) if c not in colors_used[second]]
    builder.follow(_solve_in_palette(solve, first, _local(a, parts[first], ell), palette), parts[first])

    taken = set(builder.color(v) for v in parts[first])
    palette = [c for c in range(1, ell + 1) if c not in taken]
    builder.follow(_solve_in_palette(solve, second, _local(builder.current, parts[second], ell), palette), parts[second])

    current = builder.build()
    goods = [solve.paths[i].end.colors for i in (0, 1)]
    target = Coloring(join_target(parts, goods, G.n), ell)
    return current.then(renaming_walk(G, current.end, target, ell))


def _check_relative_bound(path: RecoloringPath, parts: Sequence[Sequence[int]],
                          recorder: _Recorder, extra: int):
    counts = path.counts()
    for i, part in enumerate(parts):
        part_counts = recorder.paths[i].counts() if i in recorder.paths else [0] * len(part)
        for v, c in zip(part, part_counts):
            if counts[v] > c + extra:
                raise BoundViolationError(
                    f'vertex {v} recolored {counts[v]} times, its part path used {c} (+{extra} allowed)')


def compose(mode: str, G: Graph, parts: Sequence[Sequence[int]], a: Coloring, ell: int,
            solve: Solver, chis: Optional[Sequence[int]] = None) -> RecoloringPath:
    '''
    Recolours G, a disjoint union or a join of parts, part by part.

    Args:
        parts: sorted vertex lists of G.
        solve: returns a path on one part (in local labels) to the part's good
            colouring on 1..chi of the part. The join may call it with a
            smaller palette than ell.
        chis: chromatic numbers of the parts, computed when omitted.

    Returns:
        A path ending at union_target or join_target of the part good colourings.
        A vertex is recoloured at most twice more than in its part path.
    '''
    if not is_proper(G, a):
        raise PreconditionError('coloring is not proper')
    parts = [list(part) for part in parts]
    if sorted(v for part in parts for v in part) != list(range(G.n)):
        raise PreconditionError('parts do not partition the vertex set')
    recorder = _Recorder(solve)

    if mode == 'disjoint_union':
        for i, part in enumerate(parts):
            rest = set(v for j, other in enumerate(parts) if j != i for v in other)
            if any(G.adj[v] & rest for v in part):
                raise PreconditionError(f'part {i} is adjacent to another part')
        builder = PathBuilder(a, ell)
        for i, part in enumerate(parts):
            builder.follow(recorder(i, _local(a, part, ell), ell), part)
        path = builder.build()
        _check_relative_bound(path, parts, recorder, 0)
        return path

    if mode != 'join':
        raise ValueError(f'{mode} is not supported.')
    if len(parts) != 2:
        raise PreconditionError('join takes exactly two parts')
    if any(not set(parts[1]) <= G.adj[v] for v in parts[0]):
        raise PreconditionError('parts are not complete to each other')
    if chis is None:
        chis = [chromatic_number(G.induced_subgraph(part)) for part in parts]
    if ell < chis[0] + chis[1] + 1:
        raise PreconditionError(f'join needs at least {chis[0] + chis[1] + 1} colors, got {ell}')

    if min(len(part) for part in parts) == 1:
        path = _compose_join_single(parts, a, ell, recorder, chis)
        _check_relative_bound(path, parts, recorder, 1)
    else:
        path = _compose_join(G, parts, a, ell, recorder, chis)
        _check_relative_bound(path, parts, recorder, 2)
    return path
