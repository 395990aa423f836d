import itertools

import pytest

from rppcrystal.shapes import skew
from rppcrystal.tableaux import Filling

FIG3_SHAPE = skew((4, 4, 4, 4, 3, 3, 2), (2, 1))
FIG3_ROWS = ((1, 2), (1, 1, 4), (1, 1, 1, 4), (1, 3, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4))

# Figure 1: three {1,2}-tableaux on (3,3,3,3,1)/(2), read off the drawing
FIG1_SHAPE = skew((3, 3, 3, 3, 1), (2,))
FIG1 = {
    "a": ((1,), (1, 2, 1), (2, 2, 1), (2, 2, 2), (2,)),
    "b": ((1,), (2, 1, 1), (2, 1, 2), (2, 2, 2), (2,)),
    "c": ((2,), (1, 1, 2), (1, 2, 2), (2, 2, 2), (2,)),
}


@pytest.fixture
def fig3():
    return Filling(FIG3_SHAPE, FIG3_ROWS, 5)


@pytest.fixture
def fig1():
    return {k: Filling(FIG1_SHAPE, rows, 2) for k, rows in FIG1.items()}


def grid(shape, rows, m):
    return Filling(shape, tuple(tuple(r) for r in rows), m)


def brute_fillings(shape, m, strict_columns=False):
    """Every filling in [m]^cells, filtered by direct neighbour checks."""
    cells = shape.cells
    out = []
    for values in itertools.product(range(1, m + 1), repeat=len(cells)):
        ent = dict(zip(cells, values))
        ok = True
        for (r, c), v in ent.items():
            left, above = ent.get((r, c - 1)), ent.get((r - 1, c))
            if left is not None and left > v:
                ok = False
            if above is not None and (above >= v if strict_columns else above > v):
                ok = False
        if ok:
            out.append(values)
    return out
