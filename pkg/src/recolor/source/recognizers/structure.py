from typing import Optional
from dataclasses import dataclass

from source.errors import RecolorError
from source.graph_core import (
    Embedding,
    Graph,
    bipartition,
    catalog,
    components,
    contains_induced,
    is_complete_multipartite,
    is_connected,
    is_family_free,
    triangles,
)


def _is_c5_blowup(G: Graph, blocks: list[list[int]]) -> bool:
    if sorted(v for block in blocks for v in block) != list(range(G.n)):
        return False
    for i, block in enumerate(blocks):
        if len(block) == 0 or not G.is_independent(block):
            return False
        neighbors = set(blocks[(i - 1) % 5]) | set(blocks[(i + 1) % 5])
        if any(G.adj[v] != neighbors for v in block):
            return False
    return True


def recognize_c5_blowup(G: Graph) -> Optional[tuple[tuple[int, ...], ...]]:
    '''
    Five non-empty independent sets A1..A5 partitioning V, each complete to
    its two cyclic neighbours and anticomplete to the other two, or None.

    Any induced C5 takes one vertex from every Ai, so the sets grow from such
    a seed: a vertex joins Ai when it is adjacent to exactly the seeds of
    A(i-1) and A(i+1).
    '''
    if G.n < 5:
        return None
    embedding = contains_induced(G, catalog('C5'))
    if embedding is None:
        return None
    seeds = embedding.mapping

    blocks: list[list[int]] = [[seed] for seed in seeds]
    for v in range(G.n):
        if v in seeds:
            continue
        pattern = {i for i, seed in enumerate(seeds) if seed in G.adj[v]}
        homes = [i for i in range(5) if pattern == {(i - 1) % 5, (i + 1) % 5}]
        if len(homes) != 1:
            return None
        blocks[homes[0]].append(v)
    if not _is_c5_blowup(G, blocks):
        return None
    if not (is_family_free(G, ('2K2', 'triangle')) and is_connected(G) and bipartition(G) is None):
        raise RecolorError('C5 blowup is not a connected, non-bipartite (2K2, triangle)-free graph')

    # canonical rotation: A1 holds vertex 0, A2 is the neighbour block with the smaller minimum
    start = next(i for i, block in enumerate(blocks) if 0 in block)
    forward = [blocks[(start + k) % 5] for k in range(5)]
    backward = [blocks[(start - k) % 5] for k in range(5)]
    chosen = forward if min(forward[1]) < min(backward[1]) else backward
    return tuple(tuple(sorted(block)) for block in chosen)


@dataclass(frozen=True)
class ComponentTag:
    vertices: tuple[int, ...]
    tag: str
    triangle_free: bool
    complete_multipartite: bool
    witness: Optional[Embedding] = None

    def to_dict(self) -> dict:
        return {
            'vertices': list(self.vertices),
            'tag': self.tag,
            'triangle_free': self.triangle_free,
            'complete_multipartite': self.complete_multipartite,
            'witness': None if self.witness is None else list(self.witness.mapping),
        }


def paw_free_decompose(G: Graph) -> list[ComponentTag]:
    '''
    Tags every component: a paw-free component is triangle-free or complete
    multipartite (both checks are reported); otherwise an induced paw, in
    labels of G, is attached.
    '''
    paw = catalog('paw')
    tags = []
    for block in components(G):
        H = G.induced_subgraph(block)
        triangle_free = next(triangles(H), None) is None
        multipartite = is_complete_multipartite(H)
        embedding = contains_induced(H, paw)
        if embedding is not None:
            witness = Embedding(tuple(block[p] for p in embedding.mapping))
            tags.append(ComponentTag(block, 'not_paw_free', triangle_free, multipartite, witness))
        elif triangle_free:
            tags.append(ComponentTag(block, 'triangle_free', True, multipartite))
        else:
            tags.append(ComponentTag(block, 'complete_multipartite', False, multipartite))
    return tags
