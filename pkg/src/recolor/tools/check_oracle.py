import sys
import random
import argparse
from pathlib import Path

import networkx as nx
import pandas as pd
from tqdm import tqdm

sys.path.append(Path(__file__).parents[1].as_posix())
sys.path.append(Path(__file__).parents[3].as_posix())

from source.errors import InfeasibleColoringError
from source.graph_core import build_graph, format_graph
from source.coloring import count_colorings, evaluate_chromatic_polynomial
from source.reconfig import reconfig_connected, reconfiguration_graph
from source.utils.config import get_config
from source.utils.seed import fix_seed

from src.utils import load_settings


def random_graph(n: int, p: float):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if random.random() < p]
    return build_graph(n, edges)


def main(args: argparse.Namespace):
    settings = load_settings()
    config = get_config(args.config, args.options)
    sweep = config['sweep']['oracle']
    fix_seed(config['seed'])
    dst_root = settings.report_dir / 'oracle'
    dst_root.mkdir(parents=True, exist_ok=True)

    rows = []
    for _ in tqdm(range(sweep['samples']), desc='oracle'):
        G = random_graph(random.randint(1, sweep['n_max']), random.random())
        ell = random.randint(1, sweep['ell_max'])
        count = count_colorings(G, ell)
        polynomial = evaluate_chromatic_polynomial(G, ell)
        row = {'graph': format_graph(G).strip(), 'ell': ell, 'count': count, 'polynomial': polynomial}
        try:
            implicit = reconfig_connected(G, ell, config['budget']).connected
            _, matrix = reconfiguration_graph(G, ell, config['budget'])
            explicit = nx.is_connected(nx.from_scipy_sparse_array(matrix))
        except InfeasibleColoringError:
            implicit = explicit = None
        row.update(implicit=implicit, explicit=explicit, ok=count == polynomial and implicit == explicit)
        rows.append(row)

    df = pd.DataFrame(rows)
    df.to_csv(dst_root / 'oracle.csv', index=False)
    bad = df[~df['ok']]
    print(f'{len(df) - len(bad)}/{len(df)} samples consistent')
    if len(bad) > 0:
        print(bad.to_string(index=False))
    return 0 if len(bad) == 0 else 1


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    parser.add_argument('--config', type=str, default=(Path(__file__).parents[1] / 'config' / 'default.yaml').as_posix())
    parser.add_argument('--options', type=str, nargs='*', default=list())
    args = parser.parse_args()
    sys.exit(main(args))
