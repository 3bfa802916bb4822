from .path import RecoloringPath, PathBuilder, PathAudit, verify_path
from .oracle import (
    DEFAULT_BUDGET,
    recoloring_moves,
    collect_colorings,
    ConnectivityResult,
    reconfig_connected,
    ReconfigComponent,
    ComponentCensus,
    reconfig_components,
    reconfiguration_graph,
    reconfig_diameter,
    shortest_recoloring_path,
    bounded_recoloring_path,
)
from .mixing import MixingEntry, MixingReport, mixing_report

__all__ = ['RecoloringPath', 'PathBuilder', 'PathAudit', 'verify_path',
           'DEFAULT_BUDGET', 'recoloring_moves', 'collect_colorings',
           'ConnectivityResult', 'reconfig_connected', 'ReconfigComponent', 'ComponentCensus',
           'reconfig_components', 'reconfiguration_graph', 'reconfig_diameter',
           'shortest_recoloring_path', 'bounded_recoloring_path',
           'MixingEntry', 'MixingReport', 'mixing_report']
