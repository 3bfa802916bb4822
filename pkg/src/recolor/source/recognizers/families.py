from source.errors import PreconditionError
from source.graph_core import Graph, catalog_entry, join_all
from source.coloring import Coloring


def frozen_family_generator(p: int) -> tuple[Graph, Coloring]:
    '''
    Pairwise join of p copies of the frozen gadget. Copy k takes the frozen
    8-colouring shifted to colours 8k+1..8k+8, so the result is 7p-colourable
    and carries a frozen 8p-colouring.
    '''
    if p < 1:
        raise PreconditionError(f'p must be at least 1, got {p}')
    entry = catalog_entry('frozen_gadget')
    frozen = entry.colorings['frozen8']
    G = join_all([entry.graph] * p)
    colors = tuple(color + 8 * k for k in range(p) for color in frozen)
    return G, Coloring(colors, 8 * p)
