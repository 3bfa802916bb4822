from typing import Optional
from dataclasses import dataclass, field

import pandas as pd

from source.errors import BudgetExceededError
from source.graph_core import Graph
from source.coloring import Coloring, chromatic_number, find_frozen_coloring
from source.reconfig.oracle import DEFAULT_BUDGET, collect_colorings, reconfig_connected, reconfig_diameter


@dataclass(frozen=True)
class MixingEntry:
    ell: int
    connected: bool
    colorings: Optional[int] = None
    diameter: Optional[int] = None
    witness: Optional[dict] = None
    # ell >= max degree + 2 is always mixing; sizes are still filled in when they fit the budget
    implied: bool = False

    def to_dict(self) -> dict:
        out = {'ell': self.ell, 'colorings': self.colorings, 'connected': self.connected}
        if self.diameter is not None:
            out['diameter'] = self.diameter
        if self.witness is not None:
            out['witness'] = self.witness
        if self.implied:
            out['implied'] = True
        return out


@dataclass(frozen=True)
class MixingReport:
    chi: int
    max_degree: int
    entries: tuple[MixingEntry, ...] = field(default_factory=tuple)

    def entry(self, ell: int) -> MixingEntry:
        for entry in self.entries:
            if entry.ell == ell:
                return entry
        raise KeyError(ell)

    def to_dict(self) -> dict:
        return {
            'chi': self.chi,
            'max_degree': self.max_degree,
            'entries': [entry.to_dict() for entry in self.entries],
        }

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([
            {
                'ell': entry.ell,
                'colorings': entry.colorings,
                'connected': entry.connected,
                'diameter': entry.diameter,
                'implied': entry.implied,
                'frozen_witness': entry.witness is not None and 'frozen' in entry.witness,
            }
            for entry in self.entries
        ])


def _witness(G: Graph, ell: int, pair: tuple[Coloring, Coloring]) -> dict:
    frozen = find_frozen_coloring(G, ell)
    if frozen is not None:
        return {'frozen': list(frozen.colors)}
    return {'pair': [list(c.colors) for c in pair]}


def _implied_entry(G: Graph, ell: int, with_diameter: bool, budget: Optional[int]) -> MixingEntry:
    try:
        count = len(collect_colorings(G, ell, budget))
        diameter = reconfig_diameter(G, ell, budget) if with_diameter else None
    except BudgetExceededError:
        return MixingEntry(ell, True, implied=True)
    return MixingEntry(ell, True, count, diameter, implied=True)


def mixing_report(G: Graph, ell_max: int, with_diameter: bool = False,
                  budget: Optional[int] = DEFAULT_BUDGET) -> MixingReport:
    '''Connectivity of R_ell(G) for every ell from chi(G)+1 up to ell_max.'''
    chi = chromatic_number(G)
    max_degree = G.max_degree()
    entries = []
    for ell in range(chi + 1, ell_max + 1):
        if ell >= max_degree + 2:
            entries.append(_implied_entry(G, ell, with_diameter, budget))
            continue
        result = reconfig_connected(G, ell, budget)
        if result.connected:
            diameter = reconfig_diameter(G, ell, budget) if with_diameter else None
            entries.append(MixingEntry(ell, True, result.count, diameter))
        else:
            entries.append(MixingEntry(ell, False, result.count, witness=_witness(G, ell, result.witness)))
    return MixingReport(chi, max_degree, tuple(entries))
