"""Shared helpers for the test modules."""

import random

from gridcds.construct import build_cds
from gridcds.grid import is_cds
from gridcds.solver import normalize_origin

# A minimum CDS of the 4x5 grid lacking (1,3), (2,3) and (2,4).
NO_CORNER_4x5 = """\
....
####
..#.
..#.
###.
"""


def random_mcds(m, n, rng: random.Random, steps=2000):
    """A minimum CDS reached by random one-for-one swaps from the built witness."""
    D = build_cds(m, n)[0]
    verts = list(D.dims.vertices())
    for _ in range(steps):
        out, into = rng.choice(list(D)), rng.choice(verts)
        if into in D:
            continue
        Dp = D.remove(out).add(into)
        if is_cds(Dp):
            D = Dp
    return normalize_origin(D)
