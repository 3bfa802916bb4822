import sys
import argparse
from pathlib import Path

import pandas as pd
from tqdm import tqdm

sys.path.append(Path(__file__).parents[1].as_posix())
sys.path.append(Path(__file__).parents[3].as_posix())

from source.errors import FrozenObstructionError
from source.graph_core import (
    catalog_entry,
    catalog,
    contains_induced,
    find_dominated_pair,
    format_graph,
    is_family_free,
    recognize_kll_minus_matching,
)
from source.coloring import Coloring, chromatic_number, enumerate_colorings
from source.reconfig import reconfig_connected, reconfig_diameter, verify_path
from source.procedures import (
    bipartite_codiamond_connect,
    bipartite_codiamond_recolor,
    good_certificate,
    recolor_via_certificate,
)
from source.recognizers import THEOREMS, classify_theorem
from source.utils.atlas import atlas_graphs, connected_bipartite_graphs
from source.utils.config import get_config

from src.utils import load_settings


def sweep_p4_free(config: dict) -> list[dict]:
    rows = []
    graphs = [G for G in atlas_graphs(1, config['sweep']['p4_free']['n_max'])
              if is_family_free(G, ['P4'])]
    for G in tqdm(graphs, desc='P4-free'):
        cert = good_certificate(G)
        row = {'sweep': 'p4_free', 'graph': format_graph(G).strip(), 'n': G.n, 'certificate': cert is not None}
        if cert is not None:
            ell = cert.chi + 1
            worst = 0
            for a in enumerate_colorings(G, ell):
                audit = verify_path(G, recolor_via_certificate(G, cert, a, ell), ell)
                worst = max(worst, audit.max_count)
            row.update(ell=ell, max_count=worst, diameter=reconfig_diameter(G, ell, config['budget']))
            row['ok'] = worst <= G.n and row['diameter'] <= 4 * G.n
        else:
            row['ok'] = False
        rows.append(row)
    return rows


def sweep_two_k2(config: dict) -> list[dict]:
    rows = []
    graphs = list(atlas_graphs(1, config['sweep']['two_k2']['n_max']))
    for theorem in config['sweep']['two_k2']['classes']:
        members = [G for G in graphs if is_family_free(G, THEOREMS[theorem].family)]
        for G in tqdm(members, desc=theorem):
            verdict = classify_theorem(G, theorem, config['budget'])
            chi = chromatic_number(G)
            for ell in (chi + 1, chi + 2):
                connected = reconfig_connected(G, ell, config['budget']).connected
                diameter = reconfig_diameter(G, ell, config['budget']) if connected else None
                rows.append({
                    'sweep': theorem, 'graph': format_graph(G).strip(), 'n': G.n, 'ell': ell,
                    'verdict': verdict.verdict, 'connected': connected, 'diameter': diameter,
                    'ok': verdict.verdict == 'recolorable' and connected and diameter <= 2 * G.n * G.n,
                })
    return rows


def sweep_bipartite(config: dict) -> list[dict]:
    rows = []
    for n in range(2, config['sweep']['bipartite']['n_max'] + 1):
        graphs = [G for G in connected_bipartite_graphs(n) if is_family_free(G, ['co-diamond'])]
        for G in tqdm(graphs, desc=f'bipartite n={n}'):
            kll = recognize_kll_minus_matching(G)
            if kll is not None and kll >= 3:
                continue
            ell = 3
            flood, route, two_colors = 0, 0, True
            colorings = list(enumerate_colorings(G, ell))
            for a in colorings:
                audit = verify_path(G, bipartite_codiamond_recolor(G, a, ell), ell)
                flood = max(flood, audit.max_count)
                two_colors = two_colors and len(set(audit.end.colors)) <= 2
            for a, b in zip(colorings, reversed(colorings)):
                route = max(route, len(bipartite_codiamond_connect(G, a, b, ell)))
            rows.append({
                'sweep': 'bipartite_codiamond', 'graph': format_graph(G).strip(), 'n': n, 'ell': ell,
                'max_count': flood, 'two_colors': two_colors, 'route': route,
                'ok': flood <= 2 and two_colors and route <= 6 * n,
            })

    for ell in (3, 4):
        entry = catalog_entry('k_ll_minus_matching', ell)
        a = Coloring(entry.colorings['frozen'], ell)
        try:
            bipartite_codiamond_recolor(entry.graph, a, ell)
            rejected = False
        except FrozenObstructionError:
            rejected = True
        rows.append({'sweep': 'bipartite_codiamond', 'graph': f'K{ell},{ell}-M', 'n': 2 * ell, 'ell': ell,
                     'ok': rejected})
    return rows


def sweep_p5_c5(config: dict) -> list[dict]:
    rows = []
    family = THEOREMS['p5_c5_house_cobanner'].family
    P4 = catalog('P4')
    graphs = [G for G in atlas_graphs(1, config['sweep']['p5_c5_house_cobanner']['n_max'])
              if is_family_free(G, family) and contains_induced(G, P4) is not None]
    for G in tqdm(graphs, desc='P5,C5,house,co-banner'):
        pair = find_dominated_pair(G)
        cert = good_certificate(G)
        connected = reconfig_connected(G, chromatic_number(G) + 1, config['budget']).connected
        rows.append({
            'sweep': 'p5_c5_house_cobanner', 'graph': format_graph(G).strip(), 'n': G.n,
            'dominated_pair': pair, 'certificate': cert is not None, 'connected': connected,
            'ok': pair is not None and cert is not None and connected,
        })
    return rows


SWEEPS = {
    'p4_free': sweep_p4_free,
    'two_k2': sweep_two_k2,
    'bipartite': sweep_bipartite,
    'p5_c5_house_cobanner': sweep_p5_c5,
}


def main(args: argparse.Namespace):
    settings = load_settings()
    config = get_config(args.config, args.options)
    dst_root = settings.report_dir / 'classes'
    dst_root.mkdir(parents=True, exist_ok=True)

    names = list(SWEEPS) if args.sweep == 'all' else [args.sweep]
    failed = 0
    for name in names:
        df = pd.DataFrame(SWEEPS[name](config))
        df.to_csv(dst_root / f'{name}.csv', index=False)
        bad = df[~df['ok']]
        failed += len(bad)
        print(f'{name}: {len(df) - len(bad)}/{len(df)} rows passed')
        if len(bad) > 0:
            print(bad.to_string(index=False))
    return 0 if failed == 0 else 1


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    parser.add_argument('sweep', type=str, choices=['all'] + list(SWEEPS))
    parser.add_argument('--config', type=str, default=(Path(__file__).parents[1] / 'config' / 'default.yaml').as_posix())
    parser.add_argument('--options', type=str, nargs='*', default=list())
    args = parser.parse_args()
    sys.exit(main(args))
