import json
from typing import Iterable, Iterator, Optional, Sequence, Union
from dataclasses import dataclass

from source.errors import ColoringError
from source.graph_core import Graph


@dataclass(frozen=True)
class Coloring:
    '''Colour of every vertex, in 1..ell. Properness is relative to a graph, see is_proper.'''
    colors: tuple[int, ...]
    ell: int

    def __post_init__(self):
        object.__setattr__(self, 'colors', tuple(int(c) for c in self.colors))
        if self.ell < 1:
            raise ColoringError(f'palette size must be positive, got {self.ell}')
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.ell:
                raise ColoringError(f'vertex {v} has color {c} outside 1..{self.ell}')

    @property
    def n(self) -> int:
        return len(self.colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.colors)

    def used_colors(self) -> set[int]:
        return set(self.colors)

    def recolor(self, v: int, color: int) -> 'Coloring':
        colors = list(self.colors)
        colors[v] = color
        return Coloring(tuple(colors), self.ell)

    def restrict(self, vertices: Iterable[int]) -> 'Coloring':
        return Coloring(tuple(self.colors[v] for v in sorted(vertices)), self.ell)

    def with_ell(self, ell: int) -> 'Coloring':
        return Coloring(self.colors, ell)

    def to_dict(self) -> dict:
        return {'ell': self.ell, 'colors': list(self.colors)}

    @classmethod
    def from_dict(cls, data: dict) -> 'Coloring':
        return cls(tuple(data['colors']), int(data['ell']))


@dataclass(frozen=True)
class ColorPartition:
    classes: frozenset[frozenset[int]]

    @classmethod
    def of(cls, coloring: Union[Coloring, Sequence[int]]) -> 'ColorPartition':
        blocks: dict[int, set[int]] = {}
        for v, c in enumerate(coloring):
            blocks.setdefault(c, set()).add(v)
        return cls(frozenset(frozenset(block) for block in blocks.values()))

    def __len__(self) -> int:
        return len(self.classes)

    def sorted_classes(self) -> list[list[int]]:
        return sorted(sorted(block) for block in self.classes)


def _colors_of(c: Union[Coloring, Sequence[int]]) -> tuple[int, ...]:
    return c.colors if isinstance(c, Coloring) else tuple(c)


def is_proper(G: Graph, c: Union[Coloring, Sequence[int]]) -> bool:
    colors = _colors_of(c)
    if len(colors) != G.n:
        raise ColoringError(f'coloring has {len(colors)} entries for {G.n} vertices')
    return all(colors[u] != colors[v] for u, v in G.edges())


def check_proper(G: Graph, c: Union[Coloring, Sequence[int]]):
    if not is_proper(G, c):
        raise ColoringError('coloring is not proper')


def partition_isomorphic(c1: Union[Coloring, Sequence[int]], c2: Union[Coloring, Sequence[int]]) -> bool:
    colors1, colors2 = _colors_of(c1), _colors_of(c2)
    if len(colors1) != len(colors2):
        raise ColoringError(f'colorings have different sizes: {len(colors1)} and {len(colors2)}')
    return ColorPartition.of(colors1) == ColorPartition.of(colors2)


def iter_color_vectors(G: Graph, ell: int) -> Iterator[tuple[int, ...]]:
    '''Proper ell-colourings as plain tuples, in lexicographic order.'''
    n = G.n
    if n == 0:
        yield ()
        return
    earlier = [[u for u in G.adj[v] if u < v] for v in range(n)]
    colors = [0] * n
    v = 0
    while v >= 0:
        c = colors[v] + 1
        while c <= ell and any(colors[u] == c for u in earlier[v]):
            c += 1
        if c > ell:
            colors[v] = 0
            v -= 1
            continue
        colors[v] = c
        if v == n - 1:
            yield tuple(colors)
        else:
            v += 1


def enumerate_colorings(G: Graph, ell: int) -> Iterator[Coloring]:
    if ell < 1:
        raise ColoringError(f'palette size must be positive, got {ell}')
    for colors in iter_color_vectors(G, ell):
        yield Coloring(colors, ell)


def count_colorings(G: Graph, ell: int) -> int:
    return sum(1 for _ in iter_color_vectors(G, ell))


def first_coloring(G: Graph, ell: int) -> Optional[Coloring]:
    for colors in iter_color_vectors(G, ell):
        return Coloring(colors, ell)
    return None


def parse_coloring_text(text: str, ell: Optional[int] = None) -> Coloring:
    text = text.strip()
    if text.startswith('{'):
        data = json.loads(text)
        coloring = Coloring.from_dict(data)
        return coloring if ell is None else coloring.with_ell(ell)
    try:
        colors = tuple(int(token) for token in text.split())
    except ValueError as e:
        raise ColoringError(f'coloring must be whitespace-separated integers: {e}') from None
    return Coloring(colors, ell if ell is not None else max(colors, default=1))


def format_coloring(coloring: Coloring, as_json: bool = False) -> str:
    if as_json:
        return json.dumps(coloring.to_dict(), sort_keys=True)
    return ' '.join(str(c) for c in coloring.colors)
