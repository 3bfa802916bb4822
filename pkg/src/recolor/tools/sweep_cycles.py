import sys
import argparse
from pathlib import Path

import pandas as pd
from tqdm import tqdm

sys.path.append(Path(__file__).parents[1].as_posix())
sys.path.append(Path(__file__).parents[3].as_posix())

from source.graph_core import catalog
from source.coloring import enumerate_colorings
from source.reconfig import reconfig_connected, reconfig_diameter, verify_path
from source.procedures import cycle_recolor
from source.utils.config import get_config

from src.utils import load_settings


def main(args: argparse.Namespace):
    settings = load_settings()
    config = get_config(args.config, args.options)
    sweep = config['sweep']['cycle']
    budget = config['budget']
    dst_root = settings.report_dir / 'cycles'
    dst_root.mkdir(parents=True, exist_ok=True)

    rows = []
    for n in tqdm(range(sweep['n_min'], sweep['n_max'] + 1), desc='cycle'):
        G = catalog('cycle', n)
        for ell in sweep['ells']:
            worst, paths = 0, 0
            for a in enumerate_colorings(G, ell):
                audit = verify_path(G, cycle_recolor(n, a, ell), ell)
                worst = max(worst, audit.max_count)
                paths += 1
            row = {'n': n, 'ell': ell, 'paths': paths, 'max_count': worst, 'diameter': None}
            if ell == 4 and n <= sweep['diameter_n_max']:
                row['diameter'] = reconfig_diameter(G, ell, budget)
            row['ok'] = worst <= 2 and (row['diameter'] is None or row['diameter'] <= 4 * n)
            rows.append(row)
            tqdm.write(f'C{n} ell={ell}: {paths} paths, max per vertex {worst}, diameter {row["diameter"]}')

    three = []
    for n in (4, 6, 8):
        result = reconfig_connected(catalog('cycle', n), 3, budget)
        expected = n == 4
        three.append({'n': n, 'ell': 3, 'connected': result.connected, 'ok': result.connected == expected})

    df = pd.DataFrame(rows)
    df.to_csv(dst_root / 'cycle_recolor.csv', index=False)
    df_three = pd.DataFrame(three)
    df_three.to_csv(dst_root / 'three_colorings.csv', index=False)
    print(df.to_string(index=False))
    print(df_three.to_string(index=False))
    ok = bool(df['ok'].all() and df_three['ok'].all())
    print('all checks passed' if ok else 'some checks failed')
    return 0 if ok else 1


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    parser.add_argument('--config', type=str, default=(Path(__file__).parents[1] / 'config' / 'default.yaml').as_posix())
    parser.add_argument('--options', type=str, nargs='*', default=list())
    args = parser.parse_args()
    sys.exit(main(args))
