from typing import Iterable, Optional, Union
from dataclasses import dataclass

from source.graph_core.graph import Graph
from source.graph_core.catalog import catalog


@dataclass(frozen=True)
class Embedding:
    '''mapping[p] is the host vertex that pattern vertex p is sent to.'''
    mapping: tuple[int, ...]

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self.mapping))

    def to_dict(self) -> dict:
        return {'mapping': list(self.mapping)}


@dataclass(frozen=True)
class FamilyCheck:
    free: bool
    pattern: Optional[str] = None
    embedding: Optional[Embedding] = None

    def __bool__(self) -> bool:
        return self.free

    def to_dict(self) -> dict:
        return {
            'free': self.free,
            'pattern': self.pattern,
            'embedding': None if self.embedding is None else list(self.embedding.mapping),
        }


def _search(host: Graph, pattern: Graph, exact_degree: bool) -> Optional[Embedding]:
    k = pattern.n
    if k > host.n:
        return None
    if k == 0:
        return Embedding(())

    order = sorted(range(k), key=lambda p: (-pattern.degree(p), p))
    host_degrees = host.degrees()
    mapping = [-1] * k
    used = [False] * host.n

    def extend(i: int) -> bool:
        if i == k:
            return True
        p = order[i]
        p_degree = pattern.degree(p)
        p_neighbors = pattern.adj[p]
        for h in range(host.n):
            if used[h]:
                continue
            if exact_degree and host_degrees[h] != p_degree:
                continue
            if host_degrees[h] < p_degree:
                continue
            h_neighbors = host.adj[h]
            if any((q in p_neighbors) != (mapping[q] in h_neighbors) for q in order[:i]):
                continue
            mapping[p] = h
            used[h] = True
            if extend(i + 1):
                return True
            used[h] = False
            mapping[p] = -1
        return False

    if extend(0):
        return Embedding(tuple(mapping))
    return None


def contains_induced(G: Graph, H: Graph) -> Optional[Embedding]:
    return _search(G, H, exact_degree=False)


def find_isomorphism(G: Graph, H: Graph) -> Optional[Embedding]:
    '''Returns an embedding of H onto G (a bijection) when the two graphs are isomorphic.'''
    if G.n != H.n or G.m != H.m:
        return None
    if sorted(G.degrees()) != sorted(H.degrees()):
        return None
    return _search(G, H, exact_degree=True)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return find_isomorphism(G, H) is not None


def _as_pattern(member: Union[str, Graph]) -> tuple[str, Graph]:
    if isinstance(member, Graph):
        return repr(member), member
    return member, catalog(member)


def is_family_free(G: Graph, family: Iterable[Union[str, Graph]]) -> FamilyCheck:
    for member in family:
        name, pattern = _as_pattern(member)
        embedding = contains_induced(G, pattern)
        if embedding is not None:
            return FamilyCheck(False, name, embedding)
    return FamilyCheck(True)
