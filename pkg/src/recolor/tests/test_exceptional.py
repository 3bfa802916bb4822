import pytest

from source.errors import ColoringError, PreconditionError
from source.graph_core import catalog
from source.coloring import Coloring, enumerate_colorings, is_proper
from source.reconfig import reconfig_connected, verify_path
from source.procedures import (
    clique3_recolor,
    find_clique3_structure,
    graph_F_recolor,
    graph_F_target,
    prism_star_recolor,
    prism_star_target,
)


def test_targets_are_proper_three_colorings(graph_F, prism_star):
    assert graph_F_target() == (3, 2, 1, 3, 2, 1, 2, 1)
    assert prism_star_target() == (1, 2, 3, 2, 3, 1, 3, 1, 2)
    assert is_proper(graph_F, graph_F_target())
    assert is_proper(prism_star, prism_star_target())


def test_graph_F_recolor_every_coloring(graph_F):
    colorings = list(enumerate_colorings(graph_F, 4))
    assert len(colorings) > 0
    for a in colorings:
        audit = verify_path(graph_F, graph_F_recolor(a, 4))
        assert audit.end.colors == graph_F_target()
        assert audit.max_count <= 4


def test_graph_F_is_recolorable_with_four_colors(graph_F):
    assert reconfig_connected(graph_F, 4).connected


def test_prism_star_recolor_every_coloring(prism_star):
    for a in enumerate_colorings(prism_star, 4):
        audit = verify_path(prism_star, prism_star_recolor(a, 4))
        assert audit.end.colors == prism_star_target()
        assert audit.max_count <= 4


def test_exceptional_preconditions(graph_F):
    a = Coloring(graph_F_target(), 3)
    with pytest.raises(PreconditionError):
        graph_F_recolor(a, 3)
    with pytest.raises(ColoringError):
        graph_F_recolor(Coloring((1,) * 8, 4), 4)


def test_clique3_structure_on_the_prism():
    G = catalog('prism3')
    structure = find_clique3_structure(G)
    assert structure.q == (0, 1, 2)
    assert structure.attached == ((3,), (4,), (5,))
    assert structure.target(6) == (1, 2, 3, 2, 3, 1)
    assert find_clique3_structure(catalog('C5')) is None
    assert find_clique3_structure(catalog('K3')) is None


@pytest.mark.parametrize('ell', [4, 5])
def test_clique3_recolor_every_coloring(ell):
    G = catalog('prism3')
    for a in enumerate_colorings(G, ell):
        audit = verify_path(G, clique3_recolor(G, a, ell))
        assert audit.end.colors == (1, 2, 3, 2, 3, 1)
        assert audit.max_count <= 4


def test_clique3_needs_the_structure():
    G = catalog('C5')
    with pytest.raises(PreconditionError):
        clique3_recolor(G, Coloring((1, 2, 1, 2, 3), 4), 4)
