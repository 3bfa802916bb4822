from typing import Optional

import sys
import json
import argparse
from pathlib import Path

import yaml

sys.path.append(Path(__file__).parent.as_posix())
sys.path.append(Path(__file__).parents[2].as_posix())

from source.errors import (
    BoundViolationError,
    BudgetExceededError,
    CertificateError,
    ClassMembershipError,
    ColoringError,
    DisconnectedError,
    GraphFormatError,
    InfeasibleColoringError,
    PathValidationError,
    PreconditionError,
)
from source.graph_core import (
    Graph,
    catalog_entry,
    clique_number,
    components,
    format_graph,
    is_family_free,
    parse_graph,
)
from source.coloring import (
    Coloring,
    chromatic_number,
    find_frozen_coloring,
    first_coloring,
    is_frozen,
    is_proper,
    parse_coloring_text,
)
from source.reconfig import (
    RecoloringPath,
    mixing_report,
    reconfig_diameter,
    shortest_recoloring_path,
    verify_path,
)
from source.procedures import connect_via, good_certificate, recolor_via_certificate
from source.recognizers import THEOREMS, classify_theorem, frozen_family_generator

from source.utils.config import get_config
from source.utils.seed import fix_seed

EXIT_OK = 0
EXIT_PATH = 1
EXIT_PARSE = 2
EXIT_CLASS = 3
EXIT_INFEASIBLE = 4
EXIT_BUDGET = 5

DEFAULT_CONFIG = Path(__file__).parent / 'config' / 'default.yaml'


class CommandFailed(Exception):
    '''A command finished with a report but a non-zero status.'''

    def __init__(self, status: int, report: dict):
        super().__init__(report.get('error', ''))
        self.status = status
        self.report = report


def emit(report: dict, as_json: bool):
    if as_json:
        print(json.dumps(report, sort_keys=True))
        return
    print(yaml.dump(report, sort_keys=False, default_flow_style=None).rstrip())


def load_coloring(value: str, ell: Optional[int] = None) -> Coloring:
    '''A colouring file (JSON or whitespace integers) or the integers themselves.'''
    path = Path(value)
    text = path.read_text() if path.is_file() else value
    return parse_coloring_text(text, ell)


def check_coloring(G: Graph, coloring: Coloring, name: str):
    if coloring.n != G.n:
        raise ColoringError(f'{name} has {coloring.n} entries for {G.n} vertices')
    if not is_proper(G, coloring):
        raise ColoringError(f'{name} is not proper')


def cmd_info(G: Graph, args: argparse.Namespace, config: dict) -> dict:
    return {
        'n': G.n,
        'm': G.m,
        'degrees': G.degrees(),
        'min_degree': G.min_degree(),
        'max_degree': G.max_degree(),
        'components': [list(block) for block in components(G)],
        'chi': chromatic_number(G),
        'omega': clique_number(G),
    }


def cmd_free(G: Graph, args: argparse.Namespace, config: dict) -> dict:
    family = [name for token in args.family for name in token.split(',') if name]
    check = is_family_free(G, family)
    report = {'family': family, **check.to_dict()}
    if not check:
        raise CommandFailed(EXIT_CLASS, report)
    return report


def cmd_frozen(G: Graph, args: argparse.Namespace, config: dict) -> dict:
    if args.coloring is not None and not args.search:
        coloring = load_coloring(args.coloring, args.ell)
        check_coloring(G, coloring, 'coloring')
        return {'ell': args.ell, 'frozen': is_frozen(G, coloring, args.ell), 'coloring': list(coloring.colors)}
    if chromatic_number(G) > args.ell:
        raise InfeasibleColoringError(f'graph has no {args.ell}-coloring')
    frozen = find_frozen_coloring(G, args.ell)
    return {
        'ell': args.ell,
        'frozen': frozen is not None,
        'coloring': None if frozen is None else list(frozen.colors),
    }


def cmd_mixing(G: Graph, args: argparse.Namespace, config: dict) -> dict:
    with_diameter = args.with_diameter or config['mixing']['with_diameter']
    report = mixing_report(G, args.ell_max, with_diameter, config['budget'])
    return report.to_dict()


def cmd_diameter(G: Graph, args: argparse.Namespace, config: dict) -> dict:
    try:
        diameter = reconfig_diameter(G, args.ell, config['budget'], progress=config['progress'])
    except DisconnectedError as e:
        return {'ell': args.ell, 'connected': False, 'diameter': None, 'reason': str(e)}
    return {'ell': args.ell, 'connected': True, 'diameter': diameter}


def cmd_path(G: Graph, args: argparse.Namespace, config: dict) -> dict:
    a = load_coloring(args.source, args.ell)
    b = load_coloring(args.target, args.ell)
    check_coloring(G, a, '--from')
    check_coloring(G, b, '--to')

    if args.constructive:
        cert = good_certificate(G)
        if cert is None:
            raise PreconditionError('no reduction certificate covers this graph')
        path = connect_via(G, cert, a, b, args.ell)
        route = 'certificate'
    else:
        path = shortest_recoloring_path(G, a, b, args.ell, config['budget'])
        route = 'shortest'
        if path is None:
            raise CommandFailed(EXIT_PATH, {'ell': args.ell, 'reachable': False, 'route': route})

    audit = verify_path(G, path, args.ell)
    if args.out is not None:
        Path(args.out).write_text(path.to_json() + '\n')
    return {'ell': args.ell, 'reachable': True, 'route': route, **audit.to_dict(), 'path': path.to_dict()}


def cmd_certify(G: Graph, args: argparse.Namespace, config: dict) -> dict:
    cert = good_certificate(G)
    if cert is None:
        raise CommandFailed(EXIT_CLASS, {'certified': False, 'error': 'no reduction certificate found'})
    ell = cert.chi + 1 if args.ell is None else args.ell
    if args.source is not None:
        start = load_coloring(args.source, ell)
        check_coloring(G, start, '--from')
    else:
        start = first_coloring(G, ell)
        if start is None:
            raise InfeasibleColoringError(f'graph has no {ell}-coloring')
    path = recolor_via_certificate(G, cert, start, ell)
    audit = verify_path(G, path, ell)
    if args.out is not None:
        Path(args.out).write_text(cert.to_json() + '\n')
    report = {
        'certified': True,
        'good': cert.good,
        'chi': cert.chi,
        'ell': ell,
        'trace': cert.trace(),
        'replay': audit.to_dict(),
        'bound': G.n if cert.good else None,
        'tree': cert.describe().splitlines(),
    }
    if args.json or config['output'] == 'json':
        report['certificate'] = cert.to_dict()
    return report


def cmd_classify(G: Graph, args: argparse.Namespace, config: dict) -> dict:
    verdict = classify_theorem(G, args.theorem, config['budget'])
    return verdict.to_dict()


def cmd_generate(args: argparse.Namespace, config: dict) -> tuple[Graph, dict]:
    if args.name == 'frozen-family':
        p = args.param[0] if args.param else 1
        G, frozen = frozen_family_generator(p)
        colorings = {f'frozen{8 * p}': list(frozen.colors)}
    else:
        entry = catalog_entry(args.name, *args.param)
        G = entry.graph
        colorings = {key: list(colors) for key, colors in entry.colorings.items()}
    return G, colorings


def cmd_verify_path(G: Graph, args: argparse.Namespace, config: dict) -> dict:
    path = RecoloringPath.from_json(Path(args.path).read_text())
    ell = path.ell if args.ell is None else args.ell
    audit = verify_path(G, path, ell)
    return {'valid': True, 'ell': ell, **audit.to_dict()}


COMMANDS = {
    'info': cmd_info,
    'free': cmd_free,
    'frozen': cmd_frozen,
    'mixing': cmd_mixing,
    'diameter': cmd_diameter,
    'path': cmd_path,
    'certify': cmd_certify,
    'classify': cmd_classify,
    'verify-path': cmd_verify_path,
}


def run_generate(args: argparse.Namespace, config: dict, as_json: bool) -> int:
    G, colorings = cmd_generate(args, config)
    fmt = 'edgelist' if args.format in (None, 'auto') else args.format
    text = format_graph(G, fmt)
    if args.out is not None:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
        for key, colors in colorings.items():
            coloring = Coloring(tuple(colors), max(colors))
            out.with_suffix(f'.{key}.json').write_text(json.dumps(coloring.to_dict(), sort_keys=True) + '\n')
    if as_json:
        emit({'n': G.n, 'm': G.m, 'edges': [list(e) for e in G.edges()], 'colorings': colorings}, True)
    elif args.out is None:
        print(text, end='')
    else:
        emit({'n': G.n, 'm': G.m, 'out': str(args.out), 'colorings': sorted(colorings)}, False)
    return EXIT_OK


def main(args: argparse.Namespace) -> int:
    config = get_config(args.config, args.options, args.budget)
    as_json = args.json or config['output'] == 'json'
    if args.verbose or config['verbose']:
        print(yaml.dump(config))
    fix_seed(config['seed'])

    try:
        if args.command == 'generate':
            return run_generate(args, config, as_json)
        fmt = config['format'] if args.format is None else args.format
        G = parse_graph(args.graph, fmt)
        report = COMMANDS[args.command](G, args, config)
        emit(report, as_json)
        return EXIT_OK
    except CommandFailed as e:
        emit(e.report, as_json)
        return e.status
    except (GraphFormatError, ColoringError, FileNotFoundError, ValueError) as e:
        emit({'error': str(e), 'kind': type(e).__name__}, as_json)
        return EXIT_PARSE
    except PathValidationError as e:
        emit({'valid': False, 'error': str(e), 'step': e.step_index}, as_json)
        return EXIT_PATH
    except BoundViolationError as e:
        emit({'error': str(e), 'kind': type(e).__name__}, as_json)
        return EXIT_PATH
    except ClassMembershipError as e:
        embedding = None if e.embedding is None else list(e.embedding.mapping)
        emit({'error': str(e), 'pattern': e.pattern, 'embedding': embedding}, as_json)
        return EXIT_CLASS
    except (PreconditionError, CertificateError) as e:
        emit({'error': str(e), 'kind': type(e).__name__}, as_json)
        return EXIT_CLASS
    except InfeasibleColoringError as e:
        emit({'error': str(e)}, as_json)
        return EXIT_INFEASIBLE
    except BudgetExceededError as e:
        emit({'error': str(e), 'count': e.count, 'budget': e.budget}, as_json)
        return EXIT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true')
    common.add_argument('--budget', type=int, default=None)
    common.add_argument('--config', type=str, default=DEFAULT_CONFIG.as_posix())
    common.add_argument('--options', type=str, nargs='*', default=list())
    common.add_argument('--format', type=str, choices=['auto', 'edgelist', 'dimacs'], default=None)
    common.add_argument('--verbose', action='store_true')

    parser = argparse.ArgumentParser(description='Colouring reconfiguration toolkit')
    subparsers = parser.add_subparsers(dest='command', required=True)

    def graph_command(name: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common])
        sub.add_argument('graph', type=str)
        return sub

    graph_command('info')

    sub = graph_command('free')
    sub.add_argument('--family', type=str, nargs='+', required=True)

    sub = graph_command('frozen')
    sub.add_argument('--ell', type=int, required=True)
    sub.add_argument('--coloring', type=str, default=None)
    sub.add_argument('--search', action='store_true')

    sub = graph_command('mixing')
    sub.add_argument('--ell-max', dest='ell_max', type=int, required=True)
    sub.add_argument('--with-diameter', dest='with_diameter', action='store_true')

    sub = graph_command('diameter')
    sub.add_argument('--ell', type=int, required=True)

    sub = graph_command('path')
    sub.add_argument('--from', dest='source', type=str, required=True)
    sub.add_argument('--to', dest='target', type=str, required=True)
    sub.add_argument('--ell', type=int, required=True)
    sub.add_argument('--constructive', action='store_true')
    sub.add_argument('--out', type=str, default=None)

    sub = graph_command('certify')
    sub.add_argument('--ell', type=int, default=None)
    sub.add_argument('--from', dest='source', type=str, default=None)
    sub.add_argument('--out', type=str, default=None)

    sub = graph_command('classify')
    sub.add_argument('--theorem', type=str, choices=sorted(THEOREMS), required=True)

    sub = subparsers.add_parser('generate', parents=[common])
    sub.add_argument('--name', type=str, required=True)
    sub.add_argument('--param', type=int, nargs='*', default=list())
    sub.add_argument('--out', type=str, default=None)

    sub = graph_command('verify-path')
    sub.add_argument('--path', type=str, required=True)
    sub.add_argument('--ell', type=int, default=None)
    return parser


if __name__ == '__main__':
    parser = build_parser()
    args = parser.parse_args()
    sys.exit(main(args))
