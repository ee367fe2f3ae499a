"""Dimension accounting for families of projected scrolls.

A general scroll of speciality ``l`` in its natural ambient space can be
projected to the smaller space P^r, r = d - 2g + 1 + k with 0 <= k < l, in
which linearly normal scrolls have speciality ``k``.  The projected family
Y(k, l) at section degree ``m`` has a dimension *lower bound* from a
parameter count; comparing it against the speciality-``k`` components shows
that, except in the single divisor case (l, k, m) = (1, 0, 2g-2), the
projections fill components of their own.  Only the divisor case carries an
exact dimension (one less than the non-special component containing it).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameters
from .scroll import ScrollParams, min_degree_threshold, require_admissible


@dataclass(frozen=True)
class ProjectionParams:
    """Source component (d, g, l, m) plus target speciality k < l.

    ``r = d - 2g + 1 + k`` is the target ambient dimension.  The source
    tuple must be a valid general-moduli component tuple of speciality l.
    """

    d: int
    g: int
    l: int
    k: int
    m: int

    def __post_init__(self):
        if not 0 <= self.k < self.l:
            raise InvalidParameters(
                "k-out-of-range", f"k = {self.k} not in [0, l) with l = {self.l}"
            )
        require_admissible(ScrollParams(self.d, self.g, self.l), self.m)
        if self.r < 3:
            raise InvalidParameters("ambient-too-small", f"r = {self.r} < 3")

    @property
    def r(self) -> int:
        return self.d - 2 * self.g + 1 + self.k


@dataclass(frozen=True)
class DivisorCaseDims:
    h_dim: int
    y_dim: int


def make_projection_params(d: int, g: int, l: int, k: int, m: int) -> ProjectionParams:
    return ProjectionParams(d=d, g=g, l=l, k=k, m=m)


def y_dim_lower_bound(pp: ProjectionParams) -> int:
    """Parameter-count lower bound for the projected family:

        5g-5 + (r+1)^2 - chi(N (x) L^dual) - l(m-g+l+1) + (l-k)(r+1)

    with chi(N (x) L^dual) = d - 2m + 1 - g.  This is a lower bound, not an
    asserted dimension, except in the divisor case where it is attained.
    """
    r1 = pp.r + 1
    chi_NL = pp.d - 2 * pp.m + 1 - pp.g
    return (
        5 * pp.g
        - 5
        + r1 * r1
        - chi_NL
        - pp.l * (pp.m - pp.g + pp.l + 1)
        + (pp.l - pp.k) * r1
    )


def y_vs_target_difference(pp: ProjectionParams) -> int:
    """Margin (l-k)(d-m-g+1-k-l) by which the projected family exceeds the
    speciality-k component of the same section degree.

    Positive values certify that the projections fill a component different
    from every speciality-k general-moduli component.  Defined for k > 0, or
    for k = 0 with l > 1; the remaining case (k = 0, l = 1) is the divisor
    case, handled by :func:`divisor_case`.
    """
    if pp.k == 0 and pp.l == 1:
        raise InvalidParameters(
            "projection-case-out-of-scope",
            "(k, l) = (0, 1) is the divisor case; no new-component comparison",
        )
    return (pp.l - pp.k) * (pp.d - pp.m - pp.g + 1 - pp.k - pp.l)


def y_vs_nonspecial_difference(pp: ProjectionParams) -> int:
    """Margin l(d-g-l+1-m) - (g-1+d-2m) by which the projected family
    exceeds the non-special component of P^r (the k = 0 comparison).

    Non-negative values certify that, for l > 1, the projections do not sit
    inside the non-special component.
    """
    if pp.k != 0 or pp.l < 2:
        raise InvalidParameters(
            "projection-case-out-of-scope",
            f"non-special comparison requires k = 0 and l > 1, got (k, l) = ({pp.k}, {pp.l})",
        )
    return pp.l * (pp.d - pp.g - pp.l + 1 - pp.m) - (pp.g - 1 + pp.d - 2 * pp.m)


def divisor_case(d: int, g: int) -> DivisorCaseDims:
    """The (l, k, m) = (1, 0, 2g-2) projection.

    The projected canonical-section scrolls fill a *divisor* inside the
    non-special component, which has dimension 7(g-1) + (r+1)^2 with
    r = d - 2g + 1; here the parameter-count bound is attained:
    y_dim = h_dim - 1 exactly.
    """
    threshold = min_degree_threshold(g, 1)
    if d < threshold:
        raise InvalidParameters(
            "degree-below-threshold", f"d = {d} < {threshold} for (g, h1) = ({g}, 1)"
        )
    r1 = d - 2 * g + 2
    h_dim = 7 * (g - 1) + r1 * r1
    return DivisorCaseDims(h_dim=h_dim, y_dim=h_dim - 1)
