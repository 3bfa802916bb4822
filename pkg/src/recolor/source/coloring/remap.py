from typing import Iterable, Optional

from source.errors import ColoringError
from source.coloring.coloring import Coloring


def palette_map(S: Iterable[int], S_star: Iterable[int]) -> dict[int, int]:
    '''Pairs S\\S* with S*\\S in increasing order; colours in both sets stay put.'''
    S, S_star = set(S), set(S_star)
    if len(S) != len(S_star):
        raise ColoringError(f'palettes differ in size: {len(S)} and {len(S_star)}')
    return dict(zip(sorted(S - S_star), sorted(S_star - S)))


def remap_colors(path, S: Iterable[int], S_star: Iterable[int],
                 f: Optional[dict[int, int]] = None, ell: Optional[int] = None):
    '''
    Rewrites a recoloring path that only uses colours in S so that it only uses
    colours in S_star. Colours of S that are also in S_star are kept, every
    other colour c becomes f[c]. Per-vertex step counts do not change.

    Args:
        path: a RecoloringPath (anything with start and steps).
        f: bijection S\\S* -> S*\\S, palette_map(S, S_star) when omitted.
        ell: palette size of the result, at least max(S_star).
    '''
    S, S_star = set(S), set(S_star)
    if f is None:
        f = palette_map(S, S_star)
    if len(S) != len(S_star):
        raise ColoringError(f'palettes differ in size: {len(S)} and {len(S_star)}')
    if set(f.keys()) != S - S_star or set(f.values()) != S_star - S:
        raise ColoringError('f must be a bijection from S\\S* onto S*\\S')

    used = set(path.start.colors) | {c for _, c in path.steps}
    outside = used - S
    if outside:
        raise ColoringError(f'path uses colors {sorted(outside)} outside S')

    table = {c: f.get(c, c) for c in S}
    if ell is None:
        ell = max([path.start.ell] + list(S_star))
    start = Coloring(tuple(table[c] for c in path.start.colors), ell)
    steps = tuple((v, table[c]) for v, c in path.steps)
    return type(path)(start, steps)
