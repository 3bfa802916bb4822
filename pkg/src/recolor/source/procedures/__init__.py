from .renaming import renaming_walk
from .lifts import lift_dominated, lift_low_degree
from .compose import compose, join_order, join_target, union_target
from .cycle import cycle_recolor, cycle_target
from .exceptional import (
    CliqueThreeStructure,
    find_clique3_structure,
    clique3_recolor,
    graph_F_recolor,
    graph_F_target,
    prism_star_recolor,
    prism_star_target,
)
from .bipartite import (
    check_bipartite_codiamond,
    bipartite_target,
    bipartite_codiamond_recolor,
    bipartite_codiamond_to_target,
    bipartite_codiamond_connect,
)
from .certificate import (
    RULE_ORDER,
    ReductionCertificate,
    CertificateSearch,
    good_certificate,
    validate_certificate,
    recolor_via_certificate,
    connect_via,
)

__all__ = ['renaming_walk', 'lift_dominated', 'lift_low_degree',
           'compose', 'join_order', 'join_target', 'union_target',
           'cycle_recolor', 'cycle_target',
           'CliqueThreeStructure', 'find_clique3_structure', 'clique3_recolor',
           'graph_F_recolor', 'graph_F_target', 'prism_star_recolor', 'prism_star_target',
           'check_bipartite_codiamond', 'bipartite_target', 'bipartite_codiamond_recolor',
           'bipartite_codiamond_to_target', 'bipartite_codiamond_connect',
           'RULE_ORDER', 'ReductionCertificate', 'CertificateSearch', 'good_certificate',
           'validate_certificate', 'recolor_via_certificate', 'connect_via']
