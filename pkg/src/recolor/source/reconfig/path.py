import json
from typing import Iterable, Iterator, Optional, Sequence
from dataclasses import dataclass, field

from source.errors import ColoringError, ImproperStepError, NoOpStepError, PathValidationError
from source.graph_core import Graph
from source.coloring import Coloring, is_proper


@dataclass(frozen=True)
class RecoloringPath:
    '''
    A walk in the reconfiguration graph: a start colouring followed by
    single-vertex steps (vertex, new colour).
    '''
    start: Coloring
    steps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'steps', tuple((int(v), int(c)) for v, c in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def ell(self) -> int:
        return self.start.ell

    def colorings(self) -> Iterator[Coloring]:
        colors = list(self.start.colors)
        yield self.start
        for v, c in self.steps:
            colors[v] = c
            yield Coloring(tuple(colors), self.ell)

    @property
    def end(self) -> Coloring:
        colors = list(self.start.colors)
        for v, c in self.steps:
            colors[v] = c
        return Coloring(tuple(colors), self.ell)

    def counts(self) -> list[int]:
        counts = [0] * self.start.n
        for v, _ in self.steps:
            counts[v] += 1
        return counts

    def max_count(self) -> int:
        return max(self.counts(), default=0)

    def colors_used(self) -> set[int]:
        return set(self.start.colors) | {c for _, c in self.steps}

    def then(self, other: 'RecoloringPath') -> 'RecoloringPath':
        if other.start.colors != self.end.colors:
            raise PathValidationError('paths do not meet: the second one starts elsewhere')
        return RecoloringPath(self.start.with_ell(max(self.ell, other.ell)), self.steps + other.steps)

    def reversed(self) -> 'RecoloringPath':
        colors = list(self.start.colors)
        undo = []
        for v, c in self.steps:
            undo.append((v, colors[v]))
            colors[v] = c
        return RecoloringPath(Coloring(tuple(colors), self.ell), tuple(reversed(undo)))

    def with_ell(self, ell: int) -> 'RecoloringPath':
        return RecoloringPath(self.start.with_ell(ell), self.steps)

    def to_dict(self) -> dict:
        return {'start': self.start.to_dict(), 'steps': [[v, c] for v, c in self.steps]}

    @classmethod
    def from_dict(cls, data: dict) -> 'RecoloringPath':
        return cls(Coloring.from_dict(data['start']), tuple(tuple(step) for step in data['steps']))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> 'RecoloringPath':
        return cls.from_dict(json.loads(text))


class PathBuilder:
    '''Accumulates steps from a start colouring; recolouring a vertex to its current colour is skipped.'''

    def __init__(self, start: Coloring, ell: Optional[int] = None):
        self._ell = start.ell if ell is None else ell
        self._start = start.with_ell(self._ell)
        self._current = list(start.colors)
        self._steps: list[tuple[int, int]] = []

    @property
    def ell(self) -> int:
        return self._ell

    @property
    def current(self) -> tuple[int, ...]:
        return tuple(self._current)

    def color(self, v: int) -> int:
        return self._current[v]

    def recolor(self, v: int, c: int):
        if self._current[v] == c:
            return
        if not 1 <= c <= self._ell:
            raise ColoringError(f'color {c} outside 1..{self._ell}')
        self._current[v] = c
        self._steps.append((v, c))

    def recolor_all(self, vertices: Iterable[int], c: int):
        for v in vertices:
            self.recolor(v, c)

    def follow(self, path: RecoloringPath, vertices: Optional[Sequence[int]] = None):
        '''Replays a path; vertices[i] is the vertex that local vertex i stands for.'''
        for v, c in path.steps:
            self.recolor(v if vertices is None else vertices[v], c)

    def build(self) -> RecoloringPath:
        return RecoloringPath(self._start, tuple(self._steps))


@dataclass(frozen=True)
class PathAudit:
    counts: tuple[int, ...]
    length: int
    end: Coloring
    max_count: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'max_count', max(self.counts, default=0))

    def to_dict(self) -> dict:
        return {
            'length': self.length,
            'max_count': self.max_count,
            'counts': list(self.counts),
            'end': list(self.end.colors),
        }


def verify_path(G: Graph, p: RecoloringPath, ell: Optional[int] = None) -> PathAudit:
    '''Checks every intermediate colouring is proper and every step changes a colour.'''
    ell = p.ell if ell is None else ell
    if p.start.n != G.n:
        raise PathValidationError(f'start coloring has {p.start.n} entries for {G.n} vertices')
    if not is_proper(G, p.start):
        raise ImproperStepError('start coloring is not proper')

    colors = list(p.start.colors)
    counts = [0] * G.n
    for i, (v, c) in enumerate(p.steps):
        if not 0 <= v < G.n:
            raise PathValidationError(f'vertex {v} is out of range', i)
        if not 1 <= c <= ell:
            raise PathValidationError(f'color {c} outside 1..{ell}', i)
        if colors[v] == c:
            raise NoOpStepError(f'vertex {v} already has color {c}', i)
        clash = [u for u in G.adj[v] if colors[u] == c]
        if clash:
            raise ImproperStepError(f'vertex {v} takes color {c} held by neighbor {min(clash)}', i)
        colors[v] = c
        counts[v] += 1
    return PathAudit(tuple(counts), len(p.steps), Coloring(tuple(colors), ell))
