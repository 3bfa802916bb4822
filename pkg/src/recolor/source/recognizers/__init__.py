from source.graph_core import recognize_kll_minus_matching
from .structure import ComponentTag, recognize_c5_blowup, paw_free_decompose
from .classify import (
    ClawFreeTag,
    RegularDichotomy,
    THEOREMS,
    Theorem,
    Verdict,
    classify_triangle_claw_free,
    classify_3regular_triangle_4k1,
    classify_theorem,
    smallest_frozen_coloring,
)
from .families import frozen_family_generator

__all__ = ['recognize_kll_minus_matching', 'ComponentTag', 'recognize_c5_blowup', 'paw_free_decompose',
           'ClawFreeTag', 'RegularDichotomy', 'THEOREMS', 'Theorem', 'Verdict',
           'classify_triangle_claw_free', 'classify_3regular_triangle_4k1', 'classify_theorem',
           'smallest_frozen_coloring', 'frozen_family_generator']
