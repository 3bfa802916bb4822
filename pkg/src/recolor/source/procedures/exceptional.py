from typing import Optional, Sequence
from dataclasses import dataclass

from source.errors import BoundViolationError, ColoringError, PreconditionError
from source.graph_core import Graph, catalog, triangles
from source.coloring import Coloring, is_proper
from source.reconfig import PathBuilder, RecoloringPath
from source.procedures.renaming import renaming_walk
from source.utils.labels import (
    GRAPH_F_CLASSES,
    GRAPH_F_LABEL_TO_ID,
    PRISM_STAR_CLASSES,
    PRISM_STAR_LABEL_TO_ID,
    class_ids,
)


def _classes_target(n: int, classes: Sequence[Sequence[int]]) -> tuple[int, ...]:
    colors = [0] * n
    for color, block in enumerate(classes, start=1):
        for v in block:
            colors[v] = color
    return tuple(colors)


def graph_F_target() -> tuple[int, ...]:
    return _classes_target(8, class_ids(GRAPH_F_CLASSES, GRAPH_F_LABEL_TO_ID))


def prism_star_target() -> tuple[int, ...]:
    return _classes_target(9, class_ids(PRISM_STAR_CLASSES, PRISM_STAR_LABEL_TO_ID))


def _spare(ell: int, used: Sequence[int], count: int = 1) -> list[int]:
    return [c for c in range(1, ell + 1) if c not in used][:count]


def _check(G: Graph, a: Coloring, ell: int, name: str):
    if ell < 4:
        raise PreconditionError(f'{name} recoloring needs at least 4 colors, got {ell}')
    if a.n != G.n or not is_proper(G, a):
        raise ColoringError(f'coloring is not a proper coloring of {name}')


def _finish(G: Graph, builder: PathBuilder, target: tuple[int, ...], ell: int, bound: int, name: str) -> RecoloringPath:
    head = builder.build()
    path = head.then(renaming_walk(G, head.end, Coloring(target, ell), ell))
    if path.max_count() > bound:
        raise BoundViolationError(f'{name} schedule recolored a vertex {path.max_count()} times')
    return path


def graph_F_recolor(a: Coloring, ell: int) -> RecoloringPath:
    '''
    Recolours graph F into the classes {a, x, c}, {b, y, d}, {w, z} and then
    renames them to 1, 2, 3 (vertex order z, y, x, w, d, c, b, a).
    '''
    G = catalog('graph_F')
    _check(G, a, ell, 'graph F')
    z, y, x, w, d, c, b, a_ = (GRAPH_F_LABEL_TO_ID[label] for label in 'zyxwdcba')
    builder = PathBuilder(a, ell)
    col = builder.color

    if col(w) != col(z):
        if col(d) != col(w):
            builder.recolor(z, col(w))
        elif col(a_) != col(z):
            builder.recolor(w, col(z))

    if col(w) == col(z):
        A, D = col(a_), col(d)
        builder.recolor(x, A)
        builder.recolor(y, D)
        builder.recolor(c, A)
        builder.recolor(b, D)
    else:
        # z and a share c1, w and d share c2
        c1, c2 = col(z), col(w)
        c3, c4 = _spare(ell, (c1, c2), 2)
        builder.recolor(b, c2)
        builder.recolor(c, c1)
        builder.recolor(x, c4)
        builder.recolor(y, c4)
        builder.recolor(z, c3)
        builder.recolor(w, c3)
        builder.recolor(y, c2)
        builder.recolor(x, c1)

    return _finish(G, builder, graph_F_target(), ell, 4, 'graph F')


def prism_star_recolor(a: Coloring, ell: int) -> RecoloringPath:
    '''
    Recolours the 3-prism star into the classes {v1, z1, z2}, {v2, x1, x2},
    {v3, y1, y2}, recolouring every vertex at most twice, then renames them
    to 1, 2, 3.
    '''
    G = catalog('prism3_star')
    _check(G, a, ell, 'the prism star')
    ids = PRISM_STAR_LABEL_TO_ID
    v1, v2, v3 = ids['v1'], ids['v2'], ids['v3']
    x1, y1, z1 = ids['x1'], ids['y1'], ids['z1']
    x2, y2, z2 = ids['x2'], ids['y2'], ids['z2']
    builder = PathBuilder(a, ell)
    col = builder.color
    c1, c2, c3 = col(v1), col(v2), col(v3)
    (c4,) = _spare(ell, (c1, c2, c3))

    if col(x1) == c3:
        builder.recolor(x2, c3)
        builder.recolor_all((z1, z2), c2)
        builder.recolor_all((y1, y2), c4)
        builder.recolor_all((z1, z2), c1)
        builder.recolor_all((x1, x2), c2)
        builder.recolor_all((y1, y2), c3)
    else:
        builder.recolor(y1, c3)
        builder.recolor(z1, c1)
        builder.recolor(x1, c2)
        if col(x2) == c3:
            builder.recolor(z2, c2)
            builder.recolor(y2, c4)
            builder.recolor(z2, c1)
            builder.recolor(x2, c2)
            builder.recolor(y2, c3)
        else:
            builder.recolor(y2, c3)
            builder.recolor(z2, c1)
            builder.recolor(x2, c2)

    if builder.build().max_count() > 2:
        raise BoundViolationError('prism star schedule recolored a vertex more than twice')
    return _finish(G, builder, prism_star_target(), ell, 4, 'prism star')


@dataclass(frozen=True)
class CliqueThreeStructure:
    '''
    A triangle q with every other vertex adjacent to exactly one of its
    vertices; attached[i] are the vertices hanging off q[i], each set
    independent, and attached[0] is a single vertex.
    '''
    q: tuple[int, int, int]
    attached: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def target(self, n: int) -> tuple[int, ...]:
        q1, q2, q3 = self.q
        B1, B2, B3 = self.attached
        return _classes_target(n, (sorted((q1,) + B3), sorted((q2,) + B1), sorted((q3,) + B2)))

    def to_dict(self) -> dict:
        return {'q': list(self.q), 'attached': [list(block) for block in self.attached]}

    @classmethod
    def from_dict(cls, data: dict) -> 'CliqueThreeStructure':
        return cls(tuple(data['q']), tuple(tuple(block) for block in data['attached']))


def find_clique3_structure(G: Graph) -> Optional[CliqueThreeStructure]:
    for triangle in triangles(G):
        rest = [v for v in range(G.n) if v not in triangle]
        if len(rest) == 0:
            continue
        attached = [[], [], []]
        for v in rest:
            hits = [i for i, q in enumerate(triangle) if q in G.adj[v]]
            if len(hits) != 1:
                break
            attached[hits[0]].append(v)
        else:
            if not all(G.is_independent(block) for block in attached):
                continue
            for i in range(3):
                if len(attached[i]) == 1:
                    order = (i, (i + 1) % 3, (i + 2) % 3)
                    return CliqueThreeStructure(
                        tuple(triangle[j] for j in order),
                        tuple(tuple(attached[j]) for j in order),
                    )
    return None


def clique3_recolor(G: Graph, a: Coloring, ell: int,
                    structure: Optional[CliqueThreeStructure] = None) -> RecoloringPath:
    '''
    Recolours a graph with a CliqueThreeStructure into the classes
    {q1} + B3, {q2} + B1, {q3} + B2, then renames them to 1, 2, 3.
    The schedule depends on the colour of the single vertex b1 of B1.
    '''
    if structure is None:
        structure = find_clique3_structure(G)
        if structure is None:
            raise PreconditionError('graph has no triangle with the required attachments')
    _check(G, a, ell, 'the clique-three graph')
    (q1, q2, q3) = structure.q
    (b1,), B2, B3 = structure.attached
    builder = PathBuilder(a, ell)
    c1, c2, c3 = builder.color(q1), builder.color(q2), builder.color(q3)
    (c4,) = _spare(ell, (c1, c2, c3))
    r = builder.color(b1)

    if r == c2:
        builder.recolor_all(B2, c3)
        builder.recolor_all(B3, c1)
    elif r == c3:
        builder.recolor_all(B3, c2)
        builder.recolor_all(B2, c4)
        builder.recolor_all(B3, c1)
        builder.recolor(b1, c2)
        builder.recolor_all(B2, c3)
    else:
        builder.recolor_all(B2, c3)
        builder.recolor_all(B3, c1)
        builder.recolor(b1, c2)

    return _finish(G, builder, structure.target(G.n), ell, 4, 'clique-three')
