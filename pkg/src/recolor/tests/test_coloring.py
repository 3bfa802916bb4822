import numpy as np
import pytest

from source.errors import ColoringError
from source.graph_core import catalog, catalog_entry, combine
from source.coloring import (
    Coloring,
    ColorPartition,
    chromatic_number,
    chromatic_polynomial,
    count_colorings,
    enumerate_colorings,
    evaluate_chromatic_polynomial,
    find_coloring,
    find_frozen_coloring,
    first_coloring,
    format_coloring,
    greedy_coloring,
    check_proper,
    is_frozen,
    is_proper,
    optimal_coloring,
    palette_map,
    parse_coloring_text,
    partition_isomorphic,
    remap_colors,
)
from source.reconfig import RecoloringPath
from source.recognizers import frozen_family_generator


def test_coloring_validates_palette():
    with pytest.raises(ColoringError):
        Coloring((1, 4), 3)
    with pytest.raises(ColoringError):
        Coloring((1,), 0)
    c = Coloring((1, 2, 1), 3)
    assert c.recolor(1, 3).colors == (1, 3, 1)
    assert c.restrict([2, 0]).colors == (1, 1)
    assert c.used_colors() == {1, 2}
    assert Coloring.from_dict(c.to_dict()) == c


def test_is_proper():
    P3 = catalog('P3')
    assert is_proper(P3, (1, 2, 1))
    assert not is_proper(P3, (1, 1, 2))
    with pytest.raises(ColoringError):
        is_proper(P3, (1, 2))
    check_proper(P3, (1, 2, 3))
    with pytest.raises(ColoringError, match='not proper'):
        check_proper(P3, (2, 2, 1))


def test_partitions():
    assert partition_isomorphic((1, 2, 1), (3, 1, 3))
    assert not partition_isomorphic((1, 2, 1), (1, 1, 2))
    assert ColorPartition.of((2, 1, 2, 3)).sorted_classes() == [[0, 2], [1], [3]]


def test_enumeration_is_lexicographic():
    colorings = [c.colors for c in enumerate_colorings(catalog('P3'), 2)]
    assert colorings == [(1, 2, 1), (2, 1, 2)]
    assert first_coloring(catalog('K3'), 3).colors == (1, 2, 3)
    assert first_coloring(catalog('K3'), 2) is None
    assert count_colorings(catalog('K1').induced_subgraph([]), 3) == 1


@pytest.mark.parametrize('name, ell, expected', [
    ('C5', 3, 30),
    ('C6', 3, 66),
    ('K4', 4, 24),
    ('P4', 3, 24),
    ('4K1', 2, 16),
    ('K3,3', 3, 42),
])
def test_counts_match_polynomial(name, ell, expected):
    G = catalog(name)
    assert count_colorings(G, ell) == expected
    assert evaluate_chromatic_polynomial(G, ell) == expected


def test_chromatic_polynomial_coefficients():
    assert chromatic_polynomial(catalog('K3')).tolist() == [0, 2, -3, 1]
    assert chromatic_polynomial(catalog('P4')).tolist() == [0, -1, 3, -3, 1]
    assert chromatic_polynomial(catalog('4K1')).dtype == np.int64


@pytest.mark.parametrize('name, chi', [
    ('K1', 1),
    ('4K1', 1),
    ('P4', 2),
    ('C5', 3),
    ('C6', 2),
    ('graph_F', 3),
    ('prism3_star', 3),
    ('K4', 4),
    ('frozen_gadget', 7),
])
def test_chromatic_number(name, chi):
    G = catalog(name)
    assert chromatic_number(G) == chi
    colors = optimal_coloring(G)
    assert is_proper(G, colors)
    assert sorted(set(colors)) == list(range(1, chi + 1))


def test_chromatic_number_of_joins_adds_up():
    G = combine('join', catalog('C5'), catalog('C5'))
    assert chromatic_number(G) == 6
    assert chromatic_number(combine('disjoint_union', catalog('K4'), catalog('C5'))) == 4


def test_find_coloring_and_greedy():
    assert find_coloring(catalog('C5'), 2) is None
    colors = find_coloring(catalog('C5'), 3)
    assert is_proper(catalog('C5'), colors)
    G = catalog('frozen_gadget')
    assert is_proper(G, greedy_coloring(G))


@pytest.mark.parametrize('k', [3, 4, 5, 6])
def test_complete_graph_coloring_is_frozen(k):
    assert is_frozen(catalog('complete', k), Coloring(tuple(range(1, k + 1)), k))


@pytest.mark.parametrize('ell', [3, 4, 5])
def test_kll_coloring_is_frozen(ell):
    entry = catalog_entry('k_ll_minus_matching', ell)
    assert is_frozen(entry.graph, Coloring(entry.colorings['frozen'], ell))
    assert find_frozen_coloring(entry.graph, ell) is not None


def test_frozen_gadget_frozen_coloring():
    entry = catalog_entry('frozen_gadget')
    assert is_frozen(entry.graph, Coloring(entry.colorings['frozen8'], 8))
    assert is_proper(entry.graph, entry.colorings['proper7'])
    assert not is_frozen(entry.graph, Coloring(entry.colorings['proper7'], 8))


def test_frozen_family_coloring():
    G, frozen = frozen_family_generator(2)
    assert (G.n, frozen.ell) == (32, 16)
    assert is_frozen(G, frozen)


def test_find_frozen_coloring_on_cycles():
    frozen = find_frozen_coloring(catalog('C6'), 3)
    assert frozen is not None and is_frozen(catalog('C6'), frozen)
    assert find_frozen_coloring(catalog('C8'), 3) is None
    assert find_frozen_coloring(catalog('C9'), 3) is not None
    assert find_frozen_coloring(catalog('P4'), 3) is None
    assert find_frozen_coloring(catalog('C6'), 4) is None


def test_is_frozen_rejects_improper():
    with pytest.raises(ColoringError):
        is_frozen(catalog('K2'), (1, 1))
    assert not is_frozen(catalog('C6'), Coloring((1, 2, 1, 2, 1, 2), 3))


def test_palette_map_and_remap():
    assert palette_map({1, 2, 3}, {2, 3, 5}) == {1: 5}
    assert palette_map([1, 2], [3, 4]) == {1: 3, 2: 4}
    path = RecoloringPath(Coloring((1, 2, 1), 3), ((1, 3), (0, 2)))
    moved = remap_colors(path, {1, 2, 3}, {2, 3, 5}, ell=5)
    assert isinstance(moved, RecoloringPath)
    assert moved.start.colors == (5, 2, 5)
    assert moved.steps == ((1, 3), (0, 2))
    assert moved.counts() == path.counts()


def test_remap_rejects_bad_input():
    path = RecoloringPath(Coloring((1, 4), 4), ())
    with pytest.raises(ColoringError, match='outside S'):
        remap_colors(path, {1, 2}, {3, 4})
    with pytest.raises(ColoringError):
        remap_colors(path, {1, 2, 4}, {3, 4})
    with pytest.raises(ColoringError, match='bijection'):
        remap_colors(RecoloringPath(Coloring((1, 2), 4), ()), {1, 2}, {3, 4}, f={1: 3, 2: 3})


def test_parse_and_format_coloring():
    c = parse_coloring_text('1 2 1\n')
    assert (c.colors, c.ell) == ((1, 2, 1), 2)
    assert parse_coloring_text('1 2 1', ell=4).ell == 4
    d = parse_coloring_text('{"colors": [3, 1], "ell": 5}')
    assert (d.colors, d.ell) == ((3, 1), 5)
    assert format_coloring(c) == '1 2 1'
    assert parse_coloring_text(format_coloring(d, as_json=True)) == d
    with pytest.raises(ColoringError):
        parse_coloring_text('1 two 3')
