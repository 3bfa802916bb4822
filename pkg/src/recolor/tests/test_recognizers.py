import pytest

from source.errors import ClassMembershipError, PreconditionError
from source.graph_core import bipartition, build_graph, catalog, combine, is_connected, is_family_free
from source.coloring import chromatic_number, is_frozen
from source.recognizers import (
    THEOREMS,
    classify_3regular_triangle_4k1,
    classify_theorem,
    classify_triangle_claw_free,
    frozen_family_generator,
    paw_free_decompose,
    recognize_c5_blowup,
    smallest_frozen_coloring,
)
from source.reconfig import reconfig_connected
from source.utils.atlas import atlas_graphs


def test_c5_blowup():
    assert recognize_c5_blowup(catalog('C5')) == ((0,), (1,), (2,), (3,), (4,))
    # vertex 5 is a twin of vertex 0
    G = build_graph(6, catalog('C5').edges() + [(5, 1), (5, 4)])
    assert recognize_c5_blowup(G) == ((0, 5), (1,), (2,), (3,), (4,))


@pytest.mark.parametrize('name', ['C6', 'P5', 'K5', 'house'])
def test_not_a_c5_blowup(name):
    assert recognize_c5_blowup(catalog(name)) is None


def test_c5_with_a_pendant_is_not_a_blowup():
    G = build_graph(6, catalog('C5').edges() + [(5, 0)])
    assert recognize_c5_blowup(G) is None


def test_paw_free_decompose():
    (tag,) = paw_free_decompose(catalog('C5'))
    assert tag.tag == 'triangle_free'
    assert not tag.complete_multipartite

    (tag,) = paw_free_decompose(catalog('complete_multipartite', 2, 2, 2))
    assert tag.tag == 'complete_multipartite'
    assert not tag.triangle_free

    (tag,) = paw_free_decompose(catalog('paw'))
    assert tag.tag == 'not_paw_free'
    assert tag.witness.image() == (0, 1, 2, 3)

    tags = paw_free_decompose(combine('disjoint_union', catalog('C5'), catalog('K3')))
    assert [t.tag for t in tags] == ['triangle_free', 'complete_multipartite']
    assert tags[1].vertices == (5, 6, 7)
    assert tags[1].to_dict()['witness'] is None


@pytest.mark.parametrize('name, kind, recolorable, text', [
    ('P7', 'path', True, 'path'),
    ('C4', 'cycle', True, 'cycle(4)'),
    ('C5', 'cycle', True, 'cycle(5)'),
    ('C8', 'cycle', False, 'cycle(8)'),
    ('claw', 'not_in_class', False, 'not_in_class'),
])
def test_classify_triangle_claw_free(name, kind, recolorable, text):
    tag = classify_triangle_claw_free(catalog(name))
    assert tag.kind == kind
    assert tag.recolorable == recolorable
    assert str(tag) == text


def test_classify_triangle_claw_free_needs_a_connected_graph():
    with pytest.raises(PreconditionError):
        classify_triangle_claw_free(catalog('2K2'))


def test_classify_3regular(graph_F):
    result = classify_3regular_triangle_4k1(graph_F)
    assert result.kind == 'graph_F'
    assert result.embedding.image() == tuple(range(8))

    result = classify_3regular_triangle_4k1(catalog('K3,3'))
    assert result.kind == 'dominated_pair'
    assert result.pair == (0, 1)
    assert not result.has_p3_p1
    assert result.to_dict()['pair'] == [0, 1]


def test_classify_3regular_preconditions():
    with pytest.raises(PreconditionError):
        classify_3regular_triangle_4k1(catalog('C6'))
    with pytest.raises(ClassMembershipError) as info:
        classify_3regular_triangle_4k1(catalog('K4'))
    assert info.value.pattern == 'triangle'


def test_smallest_frozen_coloring(C6):
    ell, coloring = smallest_frozen_coloring(C6)
    assert ell == 3
    assert is_frozen(C6, coloring, 3)
    assert smallest_frozen_coloring(catalog('C8')) is None


def test_classify_exceptional_cycle(C6):
    verdict = classify_theorem(C6, 'triangle_4k1')
    assert verdict.verdict == 'exceptional'
    assert verdict.witness_type == 'frozen_coloring'
    assert verdict.witness['structure'] == 'C6'
    assert verdict.witness['ell'] == 3
    assert verdict.to_dict()['class'] == 'triangle_4k1'


def test_classify_separated_pair():
    verdict = classify_theorem(catalog('C8'), 'triangle_claw')
    assert verdict.verdict == 'exceptional'
    assert verdict.witness_type == 'separated_pair'
    assert verdict.witness['structure'] == 'C8'
    assert verdict.witness['ell'] == 3
    assert len(verdict.witness['pair']) == 2


@pytest.mark.parametrize('name, theorem', [
    ('C5', 'triangle_codiamond'),
    ('C5', '2k2_diamond'),
    ('P4', 'triangle_claw'),
    ('prism3', '2k2_diamond'),
])
def test_classify_recolorable(name, theorem):
    verdict = classify_theorem(catalog(name), theorem)
    assert verdict.verdict == 'recolorable'
    assert verdict.witness_type == 'certificate'
    assert verdict.witness['good']
    assert verdict.certificate is not None


def test_paw_free_classes_look_at_triangle_free_components(C6):
    verdict = classify_theorem(C6, 'paw_4k1')
    assert verdict.verdict == 'exceptional'
    assert verdict.witness['structure'] == 'C6'

    verdict = classify_theorem(catalog('complete_multipartite', 2, 2, 2), 'paw_4k1')
    assert verdict.verdict == 'recolorable'


def test_classify_rejects_non_members():
    with pytest.raises(ClassMembershipError) as info:
        classify_theorem(catalog('claw'), 'triangle_claw')
    assert info.value.pattern == 'claw'
    with pytest.raises(ValueError):
        classify_theorem(catalog('C5'), 'planar')


def test_every_theorem_names_known_patterns():
    G = catalog('K1')
    for theorem in THEOREMS.values():
        assert is_family_free(G, theorem.family)
        if theorem.triangle_free_case is not None:
            assert theorem.triangle_free_case in THEOREMS


def test_frozen_family_single_copy():
    G, frozen = frozen_family_generator(1)
    assert G.n == 16 and frozen.ell == 8
    assert is_frozen(G, frozen, 8)
    assert is_family_free(G, ['2K2', '4K1', 'co-diamond', 'co-claw'])


def test_frozen_family_two_copies():
    G, frozen = frozen_family_generator(2)
    assert G.n == 32 and frozen.ell == 16
    assert frozen.colors[16:] == tuple(c + 8 for c in frozen.colors[:16])
    assert is_frozen(G, frozen, 16)
    with pytest.raises(PreconditionError):
        frozen_family_generator(0)


@pytest.mark.parametrize('n', range(1, 7))
def test_every_small_graph_lands_on_one_side(n):
    for G in atlas_graphs(n, n):
        mixing = None
        for name, theorem in THEOREMS.items():
            if not is_family_free(G, theorem.family):
                continue
            verdict = classify_theorem(G, name)
            assert verdict.verdict in ('recolorable', 'exceptional'), (name, G.edges(), verdict.witness)
            if verdict.verdict == 'recolorable':
                if mixing is None:
                    mixing = reconfig_connected(G, chromatic_number(G) + 1).connected
                assert mixing, (name, G.edges())
                continue
            H = G.induced_subgraph(verdict.witness['component'])
            if verdict.witness_type == 'frozen_coloring':
                assert is_frozen(H, verdict.witness['coloring'], verdict.witness['ell'])
            else:
                assert not reconfig_connected(H, verdict.witness['ell']).connected


def test_every_small_c5_blowup_is_connected_and_not_bipartite():
    found = 0
    for G in atlas_graphs(1, 7):
        blocks = recognize_c5_blowup(G)
        if blocks is None:
            continue
        found += 1
        assert sorted(v for block in blocks for v in block) == list(G.vertices())
        assert is_family_free(G, ['2K2', 'triangle'])
        assert is_connected(G) and bipartition(G) is None
    assert found >= 5
