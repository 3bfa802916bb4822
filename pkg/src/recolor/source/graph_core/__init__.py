from .graph import Graph, build_graph, combine, join_all
from .catalog import (
    NamedGraph,
    catalog,
    catalog_entry,
    catalog_names,
    resolve_name,
    kll_frozen_coloring,
)
from .induced import Embedding, FamilyCheck, contains_induced, find_isomorphism, is_isomorphic, is_family_free
from .probes import (
    components,
    co_components,
    is_connected,
    bipartition,
    is_bipartite,
    cycle_order,
    is_path_graph,
    find_dominated_pair,
    dominated_pairs,
    cliques,
    max_clique,
    clique_number,
    triangles,
    find_tight_clique_cutset,
    is_complete_multipartite,
    recognize_kll_minus_matching,
)
from .graph_io import parse_graph, parse_graph_text, format_graph, write_graph

__all__ = ['Graph', 'build_graph', 'combine', 'join_all',
           'NamedGraph', 'catalog', 'catalog_entry', 'catalog_names', 'resolve_name', 'kll_frozen_coloring',
           'Embedding', 'FamilyCheck', 'contains_induced', 'find_isomorphism', 'is_isomorphic', 'is_family_free',
           'components', 'co_components', 'is_connected', 'bipartition', 'is_bipartite', 'cycle_order',
           'is_path_graph', 'find_dominated_pair', 'dominated_pairs', 'cliques', 'max_clique', 'clique_number',
           'triangles', 'find_tight_clique_cutset', 'is_complete_multipartite', 'recognize_kll_minus_matching',
           'parse_graph', 'parse_graph_text', 'format_graph', 'write_graph']
