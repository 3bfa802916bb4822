import pytest

from source.errors import ClassMembershipError, FrozenObstructionError, PreconditionError
from source.graph_core import catalog, catalog_entry
from source.coloring import Coloring, enumerate_colorings
from source.reconfig import verify_path
from source.procedures import (
    bipartite_codiamond_connect,
    bipartite_codiamond_recolor,
    bipartite_codiamond_to_target,
    bipartite_target,
    check_bipartite_codiamond,
)


@pytest.mark.parametrize('name, ell', [('P4', 3), ('C4', 3), ('C4', 4), ('C6', 4), ('P5', 3), ('claw', 3)])
def test_flood_every_coloring(name, ell):
    G = catalog(name)
    for a in enumerate_colorings(G, ell):
        audit = verify_path(G, bipartite_codiamond_recolor(G, a, ell))
        assert audit.max_count <= 2
        assert len(audit.end.used_colors()) == 2


def test_to_target_and_connect():
    G = catalog('C6')
    target = bipartite_target(G)
    assert target == (1, 2, 1, 2, 1, 2)
    colorings = list(enumerate_colorings(G, 4))
    for a in colorings:
        assert verify_path(G, bipartite_codiamond_to_target(G, a, 4)).end.colors == target
    for a, b in zip(colorings, reversed(colorings)):
        path = bipartite_codiamond_connect(G, a, b, 4)
        assert verify_path(G, path).end == b
        assert len(path) <= 6 * G.n


@pytest.mark.parametrize('ell', [3, 4, 5])
def test_k_ll_minus_matching_is_rejected(ell):
    entry = catalog_entry('k_ll_minus_matching', ell)
    a = Coloring(entry.colorings['frozen'], ell)
    with pytest.raises(FrozenObstructionError) as info:
        bipartite_codiamond_recolor(entry.graph, a, ell)
    assert info.value.ell == ell


def test_class_checks():
    assert check_bipartite_codiamond(catalog('P4')) == ((0, 2), (1, 3))
    with pytest.raises(ClassMembershipError):
        check_bipartite_codiamond(catalog('C5'))
    with pytest.raises(ClassMembershipError) as info:
        check_bipartite_codiamond(catalog('P6'))
    assert info.value.pattern == 'co-diamond'
    with pytest.raises(PreconditionError):
        check_bipartite_codiamond(catalog('2K2'))
    with pytest.raises(PreconditionError):
        bipartite_codiamond_recolor(catalog('P4'), Coloring((1, 2, 1, 2), 2), 2)
