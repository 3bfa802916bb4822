import sys
import time
import argparse
from pathlib import Path

import pandas as pd
from tqdm import tqdm

sys.path.append(Path(__file__).parents[1].as_posix())
sys.path.append(Path(__file__).parents[3].as_posix())

from source.graph_core import catalog, catalog_entry, is_family_free
from source.coloring import (
    Coloring,
    chromatic_number,
    enumerate_colorings,
    find_frozen_coloring,
    is_frozen,
    is_proper,
    optimal_coloring,
)
from source.reconfig import reconfig_connected, reconfig_diameter, verify_path
from source.procedures import graph_F_recolor, graph_F_target, prism_star_recolor
from source.recognizers import frozen_family_generator
from source.utils.config import get_config

from src.utils import load_settings


def frozen_rows(budget: int) -> list[dict]:
    '''Frozen colourings: complete graphs, K_{l,l}-M, C6, the frozen gadget.'''
    cases = []
    for k in range(3, 7):
        G = catalog('complete', k)
        cases.append((f'K{k}', G, Coloring(tuple(range(1, k + 1)), k)))
    for ell in (3, 4, 5):
        entry = catalog_entry('k_ll_minus_matching', ell)
        cases.append((f'K{ell},{ell}-M', entry.graph, Coloring(entry.colorings['frozen'], ell)))
    C6 = catalog('C6')
    cases.append(('C6', C6, find_frozen_coloring(C6, 3)))
    frozen_gadget = catalog_entry('frozen_gadget')
    cases.append(('frozen_gadget', frozen_gadget.graph, Coloring(frozen_gadget.colorings['frozen8'], 8)))

    rows = []
    for name, G, coloring in tqdm(cases, desc='frozen'):
        begin = time.perf_counter()
        frozen = coloring is not None and is_frozen(G, coloring)
        elapsed = time.perf_counter() - begin
        # the gadget state space is far beyond any budget: frozen alone is the disconnection witness
        connected = None
        if G.n <= 10 and coloring is not None:
            connected = reconfig_connected(G, coloring.ell, budget).connected
        rows.append({
            'check': 'frozen', 'case': name, 'ell': None if coloring is None else coloring.ell,
            'frozen': frozen, 'connected': connected, 'seconds': elapsed,
            'ok': frozen and connected is not True and elapsed < 1.0,
        })
    return rows


def gadget_rows() -> list[dict]:
    entry = catalog_entry('frozen_gadget')
    G = entry.graph
    rows = [
        {'check': 'frozen_gadget', 'case': 'family_free',
         'ok': bool(is_family_free(G, ['2K2', '4K1', 'co-diamond', 'co-claw']))},
        {'check': 'frozen_gadget', 'case': 'chi', 'value': chromatic_number(G), 'ok': chromatic_number(G) == 7},
        {'check': 'frozen_gadget', 'case': 'proper7', 'ok': is_proper(G, entry.colorings['proper7'])},
    ]
    G2, frozen = frozen_family_generator(2)
    chi2 = max(optimal_coloring(G2), default=0)
    rows.append({'check': 'frozen_gadget', 'case': 'family_p2_chi', 'value': chi2, 'ok': chi2 == 14})
    rows.append({'check': 'frozen_gadget', 'case': 'family_p2_frozen16', 'ok': is_frozen(G2, frozen, 16)})
    return rows


def exceptional_rows(budget: int) -> list[dict]:
    rows = []
    F = catalog('graph_F')
    target = graph_F_target()
    failures = 0
    colorings = list(enumerate_colorings(F, 4))
    for a in tqdm(colorings, desc='graph F'):
        path = graph_F_recolor(a, 4)
        audit = verify_path(F, path, 4)
        if audit.end.colors != target:
            failures += 1
    rows.append({'check': 'graph_F', 'case': 'all 4-colorings', 'value': len(colorings), 'ok': failures == 0})
    rows.append({'check': 'graph_F', 'case': 'R_4 connected', 'ok': reconfig_connected(F, 4, budget).connected})

    P = catalog('prism3_star')
    worst = 0
    colorings = list(enumerate_colorings(P, 4))
    for a in tqdm(colorings, desc='prism star'):
        audit = verify_path(P, prism_star_recolor(a, 4), 4)
        worst = max(worst, audit.max_count)
    rows.append({'check': 'prism_star', 'case': 'max per vertex', 'value': worst, 'ok': worst <= 4})
    diameter = reconfig_diameter(P, 4, budget, progress=True)
    rows.append({'check': 'prism_star', 'case': 'diameter R_4', 'value': diameter, 'ok': diameter <= 2 * 9 * 9})
    return rows


def main(args: argparse.Namespace):
    settings = load_settings()
    config = get_config(args.config, args.options)
    dst_root = settings.report_dir / 'witnesses'
    dst_root.mkdir(parents=True, exist_ok=True)

    rows = frozen_rows(config['budget']) + gadget_rows() + exceptional_rows(config['budget'])
    df = pd.DataFrame(rows)
    df.to_csv(dst_root / 'witnesses.csv', index=False)
    print(df.to_string(index=False))
    failed = df[~df['ok']]
    print(f'{len(df) - len(failed)}/{len(df)} checks passed')
    return 0 if len(failed) == 0 else 1


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    parser.add_argument('--config', type=str, default=(Path(__file__).parents[1] / 'config' / 'default.yaml').as_posix())
    parser.add_argument('--options', type=str, nargs='*', default=list())
    args = parser.parse_args()
    sys.exit(main(args))
