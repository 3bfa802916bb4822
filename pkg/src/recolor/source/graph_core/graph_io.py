import warnings
from pathlib import Path
from typing import Union

from source.errors import GraphFormatError, InvalidGraphError
from source.graph_core.graph import Graph, build_graph


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f'expected an integer, got {token!r}', line_number) from None


def _collect_edge(edges: list, seen: set, u: int, v: int, n: int, line_number: int):
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(f'edge ({u}, {v}) has an endpoint outside the vertex range', line_number)
    if u == v:
        raise GraphFormatError(f'self-loop at vertex {u}', line_number)
    key = (min(u, v), max(u, v))
    if key in seen:
        warnings.warn(f'line {line_number}: duplicate edge {key} ignored', stacklevel=3)
        return
    seen.add(key)
    edges.append(key)


def parse_edgelist(text: str) -> Graph:
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(i, line) for i, line in lines if line and not line.startswith('#')]
    if len(lines) == 0:
        raise GraphFormatError('empty input', 1)

    header_line, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2:
        raise GraphFormatError(f'header must be "n m", got {header!r}', header_line)
    n, m = (_parse_int(token, header_line) for token in tokens)
    if n < 0 or m < 0:
        raise GraphFormatError('header values must be non-negative', header_line)
    if len(lines) - 1 != m:
        raise GraphFormatError(f'header announces {m} edges but {len(lines) - 1} edge lines follow', header_line)

    edges, seen = [], set()
    for line_number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f'edge line must be "u v", got {line!r}', line_number)
        u, v = (_parse_int(token, line_number) for token in tokens)
        _collect_edge(edges, seen, u, v, n, line_number)
    return build_graph(n, edges)


def parse_dimacs(text: str) -> Graph:
    n = None
    edges, seen = [], set()
    for i, line in enumerate(text.splitlines()):
        line_number = i + 1
        tokens = line.split()
        if len(tokens) == 0 or tokens[0] == 'c':
            continue
        if tokens[0] == 'p':
            if n is not None:
                raise GraphFormatError('second problem line', line_number)
            if len(tokens) != 4 or tokens[1] not in ('edge', 'col'):
                raise GraphFormatError(f'problem line must be "p edge n m", got {line.strip()!r}', line_number)
            n = _parse_int(tokens[2], line_number)
        elif tokens[0] == 'e':
            if n is None:
                raise GraphFormatError('edge line before the problem line', line_number)
            if len(tokens) != 3:
                raise GraphFormatError(f'edge line must be "e u v", got {line.strip()!r}', line_number)
            u, v = (_parse_int(token, line_number) - 1 for token in tokens[1:])
            _collect_edge(edges, seen, u, v, n, line_number)
        else:
            raise GraphFormatError(f'unknown line type {tokens[0]!r}', line_number)
    if n is None:
        raise GraphFormatError('missing problem line', 1)
    return build_graph(n, edges)


def detect_format(path: Path, text: str) -> str:
    if path.suffix in ('.col', '.dimacs'):
        return 'dimacs'
    for line in text.splitlines():
        tokens = line.split()
        if len(tokens) > 0:
            return 'dimacs' if tokens[0] in ('c', 'p') else 'edgelist'
    return 'edgelist'


def parse_graph(source: Union[str, Path], fmt: str = 'auto') -> Graph:
    path = Path(source)
    text = path.read_text()
    if fmt == 'auto':
        fmt = detect_format(path, text)
    return parse_graph_text(text, fmt)


def parse_graph_text(text: str, fmt: str = 'edgelist') -> Graph:
    try:
        if fmt == 'edgelist':
            return parse_edgelist(text)
        elif fmt == 'dimacs':
            return parse_dimacs(text)
    except InvalidGraphError as e:
        raise GraphFormatError(str(e)) from e
    raise ValueError(f'{fmt} is not supported.')


def format_graph(G: Graph, fmt: str = 'edgelist') -> str:
    edges = G.edges()
    if fmt == 'edgelist':
        lines = [f'{G.n} {len(edges)}'] + [f'{u} {v}' for u, v in edges]
    elif fmt == 'dimacs':
        lines = [f'p edge {G.n} {len(edges)}'] + [f'e {u + 1} {v + 1}' for u, v in edges]
    else:
        raise ValueError(f'{fmt} is not supported.')
    return '\n'.join(lines) + '\n'


def write_graph(G: Graph, path: Union[str, Path], fmt: str = 'edgelist'):
    Path(path).write_text(format_graph(G, fmt))
