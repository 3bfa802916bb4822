from .coloring import (
    Coloring,
    ColorPartition,
    is_proper,
    check_proper,
    partition_isomorphic,
    iter_color_vectors,
    enumerate_colorings,
    count_colorings,
    first_coloring,
    parse_coloring_text,
    format_coloring,
)
from .chromatic import greedy_coloring, find_coloring, optimal_coloring, chromatic_number
from .frozen import is_frozen, find_frozen_coloring
from .polynomial import chromatic_polynomial, evaluate_chromatic_polynomial
from .remap import palette_map, remap_colors

__all__ = ['Coloring', 'ColorPartition', 'is_proper', 'check_proper', 'partition_isomorphic',
           'iter_color_vectors', 'enumerate_colorings', 'count_colorings', 'first_coloring',
           'parse_coloring_text', 'format_coloring',
           'greedy_coloring', 'find_coloring', 'optimal_coloring', 'chromatic_number',
           'is_frozen', 'find_frozen_coloring',
           'chromatic_polynomial', 'evaluate_chromatic_polynomial',
           'palette_map', 'remap_colors']
