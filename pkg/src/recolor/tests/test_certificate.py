import pytest

from source.errors import CertificateError, ColoringError, PreconditionError
from source.graph_core import catalog, combine, is_family_free
from source.coloring import Coloring, chromatic_number, enumerate_colorings, is_proper
from source.reconfig import reconfig_connected, verify_path
from source.procedures import (
    ReductionCertificate,
    connect_via,
    good_certificate,
    recolor_via_certificate,
    validate_certificate,
)
from source.utils.atlas import atlas_graphs


def _replay_all(G, cert, ell):
    worst = 0
    for a in enumerate_colorings(G, ell):
        audit = verify_path(G, recolor_via_certificate(G, cert, a, ell))
        assert audit.end.colors == cert.good_coloring
        worst = max(worst, audit.max_count)
    return worst


def test_p4_reduces_through_a_dominated_vertex(P4):
    cert = good_certificate(P4)
    assert cert.trace() == ['DominatedVertex', 'BaseSmall']
    assert cert.params == {'u': 0, 'v': 2}
    assert cert.children[0].vertices == (1, 2, 3)
    assert cert.good and cert.chi == 2
    assert is_proper(P4, cert.good_coloring)
    assert cert.good_coloring[0] == cert.good_coloring[2]
    assert _replay_all(P4, cert, 3) <= P4.n


@pytest.mark.parametrize('name, trace', [
    ('K4', ['BaseComplete']),
    ('C5', ['BaseCycle']),
    ('C7', ['BaseCycle']),
    ('graph_F', ['BaseGraphF']),
    ('prism3_star', ['BasePrismStar']),
    ('prism3', ['BaseCliqueThree']),
    ('C4', ['DominatedVertex', 'BaseSmall']),
])
def test_base_moves(name, trace):
    G = catalog(name)
    cert = good_certificate(G)
    assert cert.trace() == trace
    validate_certificate(G, cert)
    assert is_proper(G, cert.good_coloring)


@pytest.mark.parametrize('name', ['C5', 'prism3', 'K4', 'paw', 'claw'])
def test_replay_is_good(name):
    G = catalog(name)
    cert = good_certificate(G)
    assert _replay_all(G, cert, cert.chi + 1) <= G.n


def test_graphs_without_certificate():
    assert good_certificate(catalog('C6')) is None
    assert good_certificate(catalog('C8')) is None


def test_every_small_p4_free_graph_is_good():
    graphs = [G for G in atlas_graphs(1, 5) if is_family_free(G, ['P4'])]
    assert len(graphs) > 10
    for G in graphs:
        cert = good_certificate(G)
        assert cert is not None and cert.good
        assert 'LowDegree' not in cert.trace()
        assert _replay_all(G, cert, cert.chi + 1) <= G.n


def test_join_certificate_on_the_wheel():
    G = combine('join', catalog('C5'), catalog('K1'))
    cert = good_certificate(G)
    assert cert.trace() == ['JoinSplit', 'BaseCycle', 'BaseComplete']
    assert cert.params['parts'] == [[0, 1, 2, 3, 4], [5]]
    assert cert.chi == 4
    assert cert.good_coloring[5] == 4
    assert _replay_all(G, cert, 5) <= 3


def test_clique_three_fires_before_the_join():
    # the paw is a join, but its triangle with one pendant already fits the clique-three schedule
    assert good_certificate(catalog('paw')).trace() == ['BaseCliqueThree']


def test_low_degree_certificate():
    G = catalog('P3')
    child = ReductionCertificate('BaseSmall', (1, 2), 2, (1, 2))
    cert = ReductionCertificate('LowDegree', (0, 1, 2), 2, (2, 1, 2), False, {'v': 0}, (child,))
    validate_certificate(G, cert)
    assert cert.describe() == 'LowDegree(v=0) on [0, 1, 2] chi=2\n  BaseSmall on [1, 2] chi=2'
    for a in enumerate_colorings(G, 3):
        assert verify_path(G, recolor_via_certificate(G, cert, a, 3)).end.colors == (2, 1, 2)


def test_validate_rejects_mismatches(P4):
    cert = good_certificate(P4)
    with pytest.raises(CertificateError):
        validate_certificate(catalog('P3'), cert)
    with pytest.raises(CertificateError):
        validate_certificate(catalog('K4'), cert)

    data = cert.to_dict()
    data['move'] = 'LowDegree'
    data['params'] = {'v': 2}
    with pytest.raises(CertificateError):
        validate_certificate(P4, ReductionCertificate.from_dict(data))

    data = cert.to_dict()
    data['move'] = 'Guess'
    with pytest.raises(CertificateError):
        ReductionCertificate.from_dict(data)


def test_json_round_trip(graph_F):
    for G in (catalog('P4'), catalog('paw'), graph_F):
        cert = good_certificate(G)
        again = ReductionCertificate.from_json(cert.to_json())
        assert again.to_dict() == cert.to_dict()
        validate_certificate(G, again)


def test_replay_preconditions(P4):
    cert = good_certificate(P4)
    with pytest.raises(PreconditionError):
        recolor_via_certificate(P4, cert, Coloring((1, 2, 1, 2), 2), 2)
    with pytest.raises(ColoringError):
        recolor_via_certificate(P4, cert, Coloring((1, 1, 2, 1), 3), 3)
    with pytest.raises(CertificateError):
        recolor_via_certificate(P4, cert, Coloring((1, 2, 1, 2), 3), 3, target=Coloring((3, 2, 3, 2), 3))


def test_connect_via_stays_within_two_n_squared(P4):
    cert = good_certificate(P4)
    colorings = list(enumerate_colorings(P4, 3))
    for a in colorings[:6]:
        for b in colorings:
            path = connect_via(P4, cert, a, b, 3)
            assert verify_path(P4, path).end == b
            assert len(path) <= 2 * P4.n * P4.n


@pytest.mark.parametrize('n', range(1, 7))
def test_certified_graphs_are_mixing_above_chi(n):
    for G in atlas_graphs(n, n):
        cert = good_certificate(G)
        if cert is None:
            continue
        chi = chromatic_number(G)
        # ell >= max degree + 2 always mixes; the smaller graphs cover it
        top = G.max_degree() + (2 if n <= 5 else 1)
        for ell in range(chi + 1, top + 1):
            assert reconfig_connected(G, ell), (G.edges(), cert.trace(), ell)
