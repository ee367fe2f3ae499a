"""Shared parameter grids for the test suite.

The canonical grid runs over 3 <= g <= GMAX, every speciality allowed by the
existence condition (g >= 4*h1, plus the single (g, h1) = (3, 1) case), every
admissible section degree, and five degrees per (g, h1): the threshold, two
offsets above it, and the two splitting-range degrees 6g-5 and 6g.
"""

from __future__ import annotations

from scrollhilb import ScrollParams, admissible_m_range, min_degree_threshold

GMAX = 40


def speciality_values(g: int) -> list[int]:
    out = [1]
    h1 = 2
    while 4 * h1 <= g:
        out.append(h1)
        h1 += 1
    return out


def degree_values(g: int, h1: int) -> list[int]:
    thr = min_degree_threshold(g, h1)
    return sorted({thr, thr + 1, thr + 7, 6 * g - 5, 6 * g})


def scroll_grid(gmax: int = GMAX):
    """Yield (params, m) over the canonical grid."""
    for g in range(3, gmax + 1):
        for h1 in speciality_values(g):
            mrange = admissible_m_range(g, h1)
            for d in degree_values(g, h1):
                p = ScrollParams(d, g, h1)
                for m in mrange:
                    yield p, m


def scroll_tuples(gmax: int = GMAX):
    for p, m in scroll_grid(gmax):
        yield p.d, p.g, p.h1, m
