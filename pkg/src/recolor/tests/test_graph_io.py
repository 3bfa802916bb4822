import pytest

from source.errors import GraphFormatError
from source.graph_core import catalog, format_graph, parse_graph, parse_graph_text, write_graph


def test_edgelist_k2():
    G = parse_graph_text('2 1\n0 1')
    assert G == catalog('K2')


def test_dimacs_k3():
    G = parse_graph_text('c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n', 'dimacs')
    assert G == catalog('triangle')


def test_duplicate_edges_warn_and_deduplicate():
    with pytest.warns(UserWarning, match='duplicate edge'):
        G = parse_graph_text('3 3\n0 1\n1 0\n1 2\n')
    assert G.m == 2
    with pytest.warns(UserWarning):
        H = parse_graph_text('p edge 2 2\ne 1 2\ne 2 1\n', 'dimacs')
    assert H == catalog('K2')


@pytest.mark.parametrize('text, line_number', [
    ('2 1\n0 x\n', 2),
    ('2\n0 1\n', 1),
    ('2 2\n0 1\n', 1),
    ('2 1\n0 2\n', 2),
    ('2 1\n1 1\n', 2),
])
def test_edgelist_errors_carry_line_numbers(text, line_number):
    with pytest.raises(GraphFormatError) as info:
        parse_graph_text(text)
    assert info.value.line_number == line_number


def test_dimacs_errors():
    with pytest.raises(GraphFormatError, match='before the problem line'):
        parse_graph_text('e 1 2\np edge 2 1\n', 'dimacs')
    with pytest.raises(GraphFormatError) as info:
        parse_graph_text('p edge 2 1\nx 1 2\n', 'dimacs')
    assert info.value.line_number == 2


def test_comments_and_blank_lines_are_skipped():
    G = parse_graph_text('# path\n3 2\n\n0 1\n# middle\n1 2\n')
    assert G == catalog('P3')


@pytest.mark.parametrize('fmt', ['edgelist', 'dimacs'])
@pytest.mark.parametrize('name', ['P4', 'C6', 'graph_F', 'frozen_gadget', '4K1'])
def test_writer_reader_agree(tmp_path, fmt, name):
    G = catalog(name)
    path = tmp_path / f'{name}.{"col" if fmt == "dimacs" else "txt"}'
    write_graph(G, path, fmt)
    assert parse_graph(path) == G
    assert format_graph(parse_graph(path), fmt) == format_graph(G, fmt)


def test_unknown_format():
    with pytest.raises(ValueError, match='is not supported'):
        parse_graph_text('2 1\n0 1\n', 'graph6')
