import json
from typing import Optional, Sequence
from dataclasses import dataclass, field

from source.errors import BoundViolationError, CertificateError, ColoringError, PreconditionError, RecolorError
from source.graph_core import (
    Graph,
    catalog,
    co_components,
    components,
    cycle_order,
    dominated_pairs,
    find_isomorphism,
    recognize_kll_minus_matching,
)
from source.coloring import Coloring, chromatic_number, is_proper, optimal_coloring
from source.reconfig import RecoloringPath, bounded_recoloring_path
from source.procedures.renaming import renaming_walk
from source.procedures.lifts import lift_dominated, lift_low_degree
from source.procedures.compose import compose, join_target, union_target
from source.procedures.cycle import cycle_recolor, cycle_target
from source.procedures.exceptional import (
    CliqueThreeStructure,
    clique3_recolor,
    find_clique3_structure,
    graph_F_recolor,
    graph_F_target,
    prism_star_recolor,
    prism_star_target,
)
from source.procedures.bipartite import bipartite_codiamond_to_target, bipartite_target, check_bipartite_codiamond

RULE_ORDER = (
    'BaseComplete',
    'BaseSmall',
    'BaseGraphF',
    'BasePrismStar',
    'BaseCycle',
    'BaseCliqueThree',
    'DominatedVertex',
    'DisjointUnionSplit',
    'JoinSplit',
    'BaseBipartiteCoDiamond',
    'LowDegree',
)
BASE_MOVES = {'BaseComplete', 'BaseSmall', 'BaseGraphF', 'BasePrismStar', 'BaseCycle', 'BaseCliqueThree',
              'BaseBipartiteCoDiamond'}


@dataclass(frozen=True, eq=False)
class ReductionCertificate:
    '''
    One node of a reduction tree. vertices are labels of the root graph;
    params hold vertex indices local to this node (rank in vertices).
    good is False as soon as a LowDegree move appears in the subtree: the
    node then certifies recolourability only.
    '''
    move: str
    vertices: tuple[int, ...]
    chi: int
    good_coloring: tuple[int, ...]
    good: bool = True
    params: dict = field(default_factory=dict)
    children: tuple['ReductionCertificate', ...] = ()

    @property
    def n(self) -> int:
        return len(self.vertices)

    def trace(self) -> list[str]:
        '''Moves in pre-order.'''
        out = [self.move]
        for child in self.children:
            out.extend(child.trace())
        return out

    def describe(self, depth: int = 0) -> str:
        detail = ''
        if self.move == 'DominatedVertex':
            detail = f'(u={self.vertices[self.params["u"]]}, v={self.vertices[self.params["v"]]})'
        elif self.move == 'LowDegree':
            detail = f'(v={self.vertices[self.params["v"]]})'
        lines = [f'{"  " * depth}{self.move}{detail} on {list(self.vertices)} chi={self.chi}']
        for child in self.children:
            lines.append(child.describe(depth + 1))
        return '\n'.join(lines)

    def to_dict(self) -> dict:
        return {
            'move': self.move,
            'vertices': list(self.vertices),
            'chi': self.chi,
            'good': self.good,
            'good_coloring': list(self.good_coloring),
            'params': self.params,
            'children': [child.to_dict() for child in self.children],
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'ReductionCertificate':
        if data['move'] not in RULE_ORDER:
            raise CertificateError(f'{data["move"]} is not supported.')
        return cls(
            data['move'],
            tuple(data['vertices']),
            int(data['chi']),
            tuple(data['good_coloring']),
            bool(data['good']),
            dict(data.get('params', {})),
            tuple(cls.from_dict(child) for child in data.get('children', [])),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> 'ReductionCertificate':
        return cls.from_dict(json.loads(text))


def _positions(parent: Sequence[int], child: Sequence[int]) -> list[int]:
    index = {v: i for i, v in enumerate(parent)}
    return [index[v] for v in child]


class CertificateSearch:
    '''Memoised search for a reduction tree over the induced subgraphs of G.'''

    def __init__(self, G: Graph):
        self._G = G
        self._memo: dict[frozenset, Optional[ReductionCertificate]] = {}
        self._F = catalog('graph_F')
        self._prism_star = catalog('prism3_star')

    def __call__(self, vertices: Optional[Sequence[int]] = None) -> Optional[ReductionCertificate]:
        if vertices is None:
            vertices = range(self._G.n)
        return self._search(tuple(sorted(vertices)))

    def _search(self, vertices: tuple[int, ...]) -> Optional[ReductionCertificate]:
        key = frozenset(vertices)
        if key in self._memo:
            return self._memo[key]
        H = self._G.induced_subgraph(vertices)
        cert = None
        for move in RULE_ORDER:
            cert = getattr(self, f'_rule_{_snake(move)}')(vertices, H)
            if cert is not None:
                break
        self._memo[key] = cert
        return cert

    def _rule_base_complete(self, vertices, H):
        if not H.is_complete():
            return None
        return ReductionCertificate('BaseComplete', vertices, H.n, tuple(range(1, H.n + 1)))

    def _rule_base_small(self, vertices, H):
        if H.n > 3:
            return None
        good = tuple(optimal_coloring(H))
        return ReductionCertificate('BaseSmall', vertices, max(good), good)

    def _base_named(self, move, vertices, H, pattern, target):
        if H.n != pattern.n:
            return None
        embedding = find_isomorphism(H, pattern)
        if embedding is None:
            return None
        good = [0] * H.n
        for p, host in enumerate(embedding.mapping):
            good[host] = target[p]
        return ReductionCertificate(move, vertices, 3, tuple(good), params={'mapping': list(embedding.mapping)})

    def _rule_base_graph_f(self, vertices, H):
        return self._base_named('BaseGraphF', vertices, H, self._F, graph_F_target())

    def _rule_base_prism_star(self, vertices, H):
        return self._base_named('BasePrismStar', vertices, H, self._prism_star, prism_star_target())

    def _rule_base_cycle(self, vertices, H):
        order = cycle_order(H)
        if order is None or H.n % 2 == 0 or H.n < 5:
            return None
        good = [0] * H.n
        for v, c in zip(order, cycle_target(H.n)):
            good[v] = c
        return ReductionCertificate('BaseCycle', vertices, 3, tuple(good), params={'order': order})

    def _rule_base_clique_three(self, vertices, H):
        structure = find_clique3_structure(H)
        if structure is None:
            return None
        return ReductionCertificate('BaseCliqueThree', vertices, 3, structure.target(H.n),
                                    params=structure.to_dict())

    def _rule_dominated_vertex(self, vertices, H):
        tried = set()
        for u, v in dominated_pairs(H):
            if u in tried:
                continue
            tried.add(u)
            child = self._search(tuple(w for i, w in enumerate(vertices) if i != u))
            if child is None:
                continue
            good = list(child.good_coloring)
            good.insert(u, good[v if v < u else v - 1])
            return ReductionCertificate('DominatedVertex', vertices, child.chi, tuple(good), child.good,
                                        {'u': u, 'v': v}, (child,))
        return None

    def _split(self, move, vertices, H, parts, target):
        children = []
        for part in parts:
            child = self._search(tuple(vertices[i] for i in part))
            if child is None:
                return None
            children.append(child)
        goods = [child.good_coloring for child in children]
        good = target(parts, goods, H.n)
        return ReductionCertificate(move, vertices, max(good), good, all(child.good for child in children),
                                    {'parts': [list(part) for part in parts]}, tuple(children))

    def _rule_disjoint_union_split(self, vertices, H):
        blocks = components(H)
        if len(blocks) < 2:
            return None
        return self._split('DisjointUnionSplit', vertices, H, blocks, union_target)

    def _rule_join_split(self, vertices, H):
        blocks = co_components(H)
        if len(blocks) < 2:
            return None
        rest = tuple(sorted(v for block in blocks[1:] for v in block))
        return self._split('JoinSplit', vertices, H, [blocks[0], rest], join_target)

    def _rule_base_bipartite_co_diamond(self, vertices, H):
        if H.n < 4:
            return None
        try:
            check_bipartite_codiamond(H)
        except RecolorError:
            return None
        ell = recognize_kll_minus_matching(H)
        if ell is not None and ell >= 3:
            return None
        return ReductionCertificate('BaseBipartiteCoDiamond', vertices, 2, bipartite_target(H))

    def _rule_low_degree(self, vertices, H):
        chi = chromatic_number(H)
        for v in range(H.n):
            if H.degree(v) > chi - 1:
                continue
            child = self._search(tuple(w for i, w in enumerate(vertices) if i != v))
            if child is None:
                continue
            good = list(child.good_coloring)
            good.insert(v, 0)
            taken = {good[w] for w in H.adj[v]}
            good[v] = min(c for c in range(1, chi + 1) if c not in taken)
            return ReductionCertificate('LowDegree', vertices, chi, tuple(good), False, {'v': v}, (child,))
        return None


def _snake(move: str) -> str:
    out = []
    for i, ch in enumerate(move):
        if ch.isupper() and i > 0:
            out.append('_')
        out.append(ch.lower())
    return ''.join(out)


def good_certificate(G: Graph) -> Optional[ReductionCertificate]:
    '''A reduction tree showing G is recolourable (good unless it uses LowDegree), or None.'''
    return CertificateSearch(G)()


def validate_certificate(G: Graph, cert: ReductionCertificate):
    '''Checks the tree against G; raises CertificateError at the first mismatch.'''
    if cert.vertices != tuple(range(G.n)):
        raise CertificateError(f'certificate covers {cert.n} vertices, graph has {G.n}')
    _validate(G, cert)


def _validate(G: Graph, node: ReductionCertificate):
    if list(node.vertices) != sorted(set(node.vertices)):
        raise CertificateError(f'{node.move}: vertex list is not sorted')
    H = G.induced_subgraph(node.vertices)
    if len(node.good_coloring) != H.n or not is_proper(H, node.good_coloring):
        raise CertificateError(f'{node.move}: good coloring is not a proper coloring of its graph')
    if H.n > 0 and max(node.good_coloring) > node.chi:
        raise CertificateError(f'{node.move}: good coloring uses more than {node.chi} colors')
    if node.move in BASE_MOVES and len(node.children) > 0:
        raise CertificateError(f'{node.move}: base move with children')
    if node.move not in BASE_MOVES and len(node.children) == 0:
        raise CertificateError(f'{node.move}: reduction without children')

    ok = True
    if node.move == 'BaseComplete':
        ok = H.is_complete()
    elif node.move == 'BaseSmall':
        ok = H.n <= 3
    elif node.move in ('BaseGraphF', 'BasePrismStar'):
        pattern = catalog('graph_F' if node.move == 'BaseGraphF' else 'prism3_star')
        mapping = node.params.get('mapping', [])
        ok = (sorted(mapping) == list(range(H.n)) and H.n == pattern.n
              and all(H.has_edge(mapping[p], mapping[q]) for p, q in pattern.edges()) and H.m == pattern.m)
    elif node.move == 'BaseCycle':
        order = node.params.get('order', [])
        ok = (sorted(order) == list(range(H.n)) and H.n >= 3 and H.m == H.n
              and all(H.has_edge(order[i], order[(i + 1) % H.n]) for i in range(H.n)))
    elif node.move == 'BaseCliqueThree':
        ok = _clique3_valid(H, CliqueThreeStructure.from_dict(node.params))
    elif node.move == 'BaseBipartiteCoDiamond':
        try:
            check_bipartite_codiamond(H)
        except RecolorError as e:
            raise CertificateError(f'{node.move}: {e}') from e
    elif node.move in ('DominatedVertex', 'LowDegree'):
        removed = node.params['u'] if node.move == 'DominatedVertex' else node.params['v']
        expected = tuple(w for i, w in enumerate(node.vertices) if i != removed)
        ok = node.children[0].vertices == expected
        if node.move == 'DominatedVertex':
            u, v = node.params['u'], node.params['v']
            ok = ok and u != v and not H.has_edge(u, v) and H.adj[u] <= H.adj[v]
        else:
            ok = ok and H.degree(removed) <= node.chi - 1
    elif node.move in ('DisjointUnionSplit', 'JoinSplit'):
        parts = node.params.get('parts', [])
        ok = len(parts) == len(node.children) and sorted(v for part in parts for v in part) == list(range(H.n))
        ok = ok and all(child.vertices == tuple(node.vertices[i] for i in part)
                        for child, part in zip(node.children, parts))
        if ok and node.move == 'JoinSplit':
            ok = len(parts) == 2 and all(set(parts[1]) <= H.adj[v] for v in parts[0])
        elif ok:
            ok = all(not (H.adj[v] & set(other)) for i, part in enumerate(parts)
                     for j, other in enumerate(parts) if i != j for v in part)
    else:
        raise CertificateError(f'{node.move} is not supported.')
    if not ok:
        raise CertificateError(f'{node.move}: precondition does not hold on vertices {list(node.vertices)}')
    for child in node.children:
        _validate(G, child)


def _clique3_valid(H: Graph, structure: CliqueThreeStructure) -> bool:
    q = structure.q
    if not all(H.has_edge(q[i], q[j]) for i in range(3) for j in range(i + 1, 3)):
        return False
    if len(structure.attached[0]) != 1:
        return False
    for i, block in enumerate(structure.attached):
        if not H.is_independent(block):
            return False
        for v in block:
            if [k for k in range(3) if H.has_edge(v, q[k])] != [i]:
                return False
    covered = sorted(list(q) + [v for block in structure.attached for v in block])
    return covered == list(range(H.n))


def _replay_named(local: Coloring, m: int, mapping: Sequence[int], recolor) -> RecoloringPath:
    named = Coloring(tuple(local[host] for host in mapping), m)
    path = recolor(named, m)
    return RecoloringPath(local, tuple((mapping[p], c) for p, c in path.steps))


def _replay(G: Graph, node: ReductionCertificate, local: Coloring, m: int) -> RecoloringPath:
    H = G.induced_subgraph(node.vertices)
    good = Coloring(node.good_coloring, m) if H.n > 0 else None
    local = local.with_ell(m)

    def solve_child(i: int, child_local: Coloring, palette: int) -> RecoloringPath:
        return _replay(G, node.children[i], child_local, palette)

    def restrict(removed: int) -> Coloring:
        return Coloring(tuple(c for i, c in enumerate(local.colors) if i != removed), m)

    if H.n == 0:
        path = RecoloringPath(local)
    elif node.move == 'BaseComplete':
        path = renaming_walk(H, local, good, m)
    elif node.move == 'BaseSmall':
        path = bounded_recoloring_path(H, local, good, m, max(H.n, 1))
        if path is None:
            raise BoundViolationError(f'no path to the good coloring within {H.n} recolorings per vertex')
    elif node.move == 'BaseGraphF':
        path = _replay_named(local, m, node.params['mapping'], graph_F_recolor)
    elif node.move == 'BasePrismStar':
        path = _replay_named(local, m, node.params['mapping'], prism_star_recolor)
    elif node.move == 'BaseCycle':
        path = _replay_named(local, m, node.params['order'], lambda c, ell: cycle_recolor(H.n, c, ell))
    elif node.move == 'BaseCliqueThree':
        path = clique3_recolor(H, local, m, CliqueThreeStructure.from_dict(node.params))
    elif node.move == 'BaseBipartiteCoDiamond':
        path = bipartite_codiamond_to_target(H, local, m)
    elif node.move == 'DominatedVertex':
        u, v = node.params['u'], node.params['v']
        sub = _replay(G, node.children[0], restrict(u), m)
        path = lift_dominated(H, u, v, local, sub)
    elif node.move == 'LowDegree':
        v = node.params['v']
        sub = _replay(G, node.children[0], restrict(v), m)
        path = lift_low_degree(H, v, sub, local, good)
    elif node.move == 'DisjointUnionSplit':
        path = compose('disjoint_union', H, node.params['parts'], local, m, solve_child)
    elif node.move == 'JoinSplit':
        path = compose('join', H, node.params['parts'], local, m, solve_child,
                       chis=[child.chi for child in node.children])
    else:
        raise CertificateError(f'{node.move} is not supported.')

    path = path.with_ell(m)
    if path.end.colors != node.good_coloring:
        raise BoundViolationError(f'{node.move} ended away from its good coloring')
    if node.good and path.max_count() > max(H.n, 1):
        raise BoundViolationError(f'{node.move} recolored a vertex {path.max_count()} times on {H.n} vertices')
    return path


def recolor_via_certificate(G: Graph, cert: ReductionCertificate, a: Coloring, ell: int,
                            target: Optional[Coloring] = None) -> RecoloringPath:
    '''
    Replays the reduction tree bottom-up into a path from a to the good
    colouring of the certificate. When the tree is good, no vertex is
    recoloured more than n times.
    '''
    validate_certificate(G, cert)
    if target is not None and tuple(target) != cert.good_coloring:
        raise CertificateError('target is not the good coloring of the certificate')
    if ell < cert.chi + 1:
        raise PreconditionError(f'certificate replay needs at least {cert.chi + 1} colors, got {ell}')
    if a.n != G.n or not is_proper(G, a):
        raise ColoringError('coloring is not a proper coloring of the graph')
    return _replay(G, cert, a.with_ell(ell), ell)


def connect_via(G: Graph, cert: ReductionCertificate, a: Coloring, b: Coloring, ell: int) -> RecoloringPath:
    '''Joins a and b through the good colouring; at most 2n^2 steps when the certificate is good.'''
    forward = recolor_via_certificate(G, cert, a, ell)
    backward = recolor_via_certificate(G, cert, b, ell)
    path = forward.then(backward.reversed())
    if cert.good and len(path) > 2 * G.n * G.n:
        raise BoundViolationError(f'connecting path has {len(path)} steps, more than 2n^2 = {2 * G.n * G.n}')
    return path
