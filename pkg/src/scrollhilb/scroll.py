"""Invariants of a single smooth, linearly normal, special scroll.

A scroll here is determined by its degree ``d``, sectional genus ``g`` and
speciality ``h1``; it spans a projective space of dimension
``R = d - 2g + 1 + h1``.  In the working range (``g >= 3``, ``0 < h1 < g``,
``d >= 2g + 2``) the scroll carries a unique special section, of some degree
``m``, whose self-intersection is ``2m - d``; the rank-two bundle defining the
scroll is always unstable, and decomposable for large degree.

Two modelling conventions used throughout (the "general-N convention"):
the complementary line bundle ``N`` of degree ``d - m`` and the twist
``N (-section)`` of degree ``d - 2m`` are treated as *general* line bundles of
their degrees, so a degree-``e`` bundle has ``h0 = max(0, e - g + 1)`` and
``h1 = max(0, g - 1 - e)``.  Residual base points default to zero and are
opted into explicitly where they matter.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidParameters
from .series import clifford_index_general, special_series_degree_bounds


class BundleClass(enum.Enum):
    """Stability class of the rank-two bundle underlying a special scroll."""

    UNSTABLE = "unstable"
    UNSTABLE_DECOMPOSABLE = "unstable-decomposable"


@dataclass(frozen=True)
class ScrollParams:
    """Validated (degree, genus, speciality) triple of a special scroll.

    Validation rejects the first violated inequality, in the order
    genus, speciality, degree, ambient dimension.
    """

    d: int
    g: int
    h1: int

    def __post_init__(self):
        if self.g < 3:
            raise InvalidParameters("genus-too-small", f"g = {self.g} < 3")
        if self.h1 <= 0 or self.h1 >= self.g:
            raise InvalidParameters(
                "speciality-out-of-range",
                f"h1 = {self.h1} not in (0, g) with g = {self.g}",
            )
        if self.d < 2 * self.g + 2:
            raise InvalidParameters(
                "degree-too-small", f"d = {self.d} < 2g + 2 = {2 * self.g + 2}"
            )
        if self.R < 3:
            raise InvalidParameters("ambient-too-small", f"R = {self.R} < 3")
        # automatic given 0 < h1 <= g, asserted anyway
        assert self.d - 2 * self.g + 1 <= self.R <= self.d - self.g + 1

    @property
    def R(self) -> int:
        """Dimension of the ambient projective space: d - 2g + 1 + h1."""
        return self.d - 2 * self.g + 1 + self.h1


@dataclass(frozen=True)
class SectionData:
    """Numerical data of the unique special section of degree ``m``.

    ``t_ext`` is the rank of the space of extensions of the section's line
    bundle by its complement (None when the general-N convention is not in
    force, in which case it is indeterminate); ``basepoints_residual`` counts
    base points of the residual series of the section.
    """

    m: int
    h: int
    gamma_sq: int
    degN: int
    t_ext: int | None
    basepoints_residual: int = 0


@dataclass(frozen=True)
class CohomologyTriple:
    """Cohomology of the normal bundle of a scroll in its ambient space."""

    h0: int
    h1n: int
    h2: int
    chi: int

    def __post_init__(self):
        assert self.h2 == 0
        assert self.chi == self.h0 - self.h1n


def make_scroll(d: int, g: int, h1: int) -> ScrollParams:
    """Validate (d, g, h1) and return the scroll parameter record."""
    return ScrollParams(d, g, h1)


def cone_speciality_bound(g: int, detF_special: bool = False) -> int:
    """Upper bound ``g`` for the speciality of a scroll with non-special
    determinant; equality forces a cone once ``d >= 2g + 2``.

    Scrolls with special determinant (degree <= 2g - 2) are outside the
    working range and rejected.
    """
    if detF_special:
        raise InvalidParameters(
            "strongly-special-out-of-scope",
            "special determinant (d <= 2g - 2) is not supported",
        )
    return g


def section_uniqueness_threshold(g: int, h1: int) -> int:
    """Degree bound 4g - 2*h1 - Cliff + 1 (Clifford-index form) above which
    the special section of the scroll is unique."""
    return 4 * g - 2 * h1 - clifford_index_general(g) + 1


def general_moduli_threshold(g: int, h1: int) -> int:
    """Degree bound (7g - eps)/2 - 2*h1 + 2 with eps = g mod 2.

    Equals :func:`section_uniqueness_threshold` for every (g, h1); both are
    implemented and their equality is a consistency check of the test suite.
    """
    if g < 3:
        raise InvalidParameters("genus-too-small", f"g = {g} < 3")
    eps = g % 2
    return (7 * g - eps) // 2 - 2 * h1 + 2


def min_degree_threshold(g: int, h1: int) -> int:
    """Minimal degree for the component classification to apply.

    4g - 3 when h1 = 2, otherwise the general-moduli bound
    (7g - eps)/2 - 2*h1 + 2.
    """
    if h1 <= 0 or h1 >= g:
        raise InvalidParameters(
            "speciality-out-of-range", f"h1 = {h1} not in (0, g) with g = {g}"
        )
    if h1 == 2:
        return 4 * g - 3
    return general_moduli_threshold(g, h1)


def h0_general_line_bundle(g: int, e: int) -> int:
    """h0 of a general line bundle of degree ``e`` on a genus-``g`` curve."""
    return max(0, e - g + 1)


def h1_general_line_bundle(g: int, e: int) -> int:
    """h1 of a general line bundle of degree ``e`` on a genus-``g`` curve."""
    return max(0, g - 1 - e)


def require_admissible(p: ScrollParams, m: int) -> None:
    """Check d against the degree threshold and m against the admissible
    section-degree range; reject the first violated inequality."""
    threshold = min_degree_threshold(p.g, p.h1)
    if p.d < threshold:
        raise InvalidParameters(
            "degree-below-threshold", f"d = {p.d} < {threshold} for (g, h1) = ({p.g}, {p.h1})"
        )
    lo, hi = special_series_degree_bounds(p.g, p.h1)  # may raise BN1-violated
    if not lo <= m <= hi:
        raise InvalidParameters(
            "m-out-of-range", f"m = {m} not in [{lo}, {hi}] for (g, h1) = ({p.g}, {p.h1})"
        )


def section_data(p: ScrollParams, m: int, general_N: bool = True) -> SectionData:
    """Numerical data of the special section of degree ``m`` on the scroll.

    The section spans a P^h with ``h = m - g + h1``, has self-intersection
    ``2m - d`` (required to be negative) and complement of degree ``d - m``.
    Under the general-N convention the extension-space rank is
    ``max(0, g - 1 - (d - 2m))``.
    """
    require_admissible(p, m)
    h = m - p.g + p.h1
    if h < 2:
        raise InvalidParameters("not-a-section", f"h = m - g + h1 = {h} < 2")
    gamma_sq = 2 * m - p.d
    if gamma_sq >= 0:
        raise InvalidParameters(
            "nonnegative-self-intersection", f"2m - d = {gamma_sq} >= 0"
        )
    t_ext = h1_general_line_bundle(p.g, p.d - 2 * m) if general_N else None
    return SectionData(m=m, h=h, gamma_sq=gamma_sq, degN=p.d - m, t_ext=t_ext)


def stability_class(p: ScrollParams, m: int) -> BundleClass:
    """Stability of the rank-two bundle of a scroll with special section of
    degree ``m``.

    The complement degree d - m exceeds the slope d/2, so the bundle is
    always unstable; it splits when d >= 6g - 5 (the extension space
    vanishes), or when the general-N convention already gives extension
    rank 0.

    Unlike :func:`section_data` this does not restrict ``m`` to the
    general-moduli range: sections of scrolls over curves with special
    moduli (e.g. gonal ones) are classified by the same argument.
    """
    threshold = min(4 * p.g - 3, min_degree_threshold(p.g, p.h1))
    if p.d < threshold:
        raise InvalidParameters(
            "degree-below-threshold", f"d = {p.d} < {threshold} for (g, h1) = ({p.g}, {p.h1})"
        )
    h = m - p.g + p.h1
    if h < 2:
        raise InvalidParameters("not-a-section", f"h = m - g + h1 = {h} < 2")
    if 2 * m - p.d >= 0:
        raise InvalidParameters(
            "nonnegative-self-intersection", f"2m - d = {2 * m - p.d} >= 0"
        )
    if p.d >= 6 * p.g - 5:
        return BundleClass.UNSTABLE_DECOMPOSABLE
    if h1_general_line_bundle(p.g, p.d - 2 * m) == 0:
        return BundleClass.UNSTABLE_DECOMPOSABLE
    return BundleClass.UNSTABLE


def normal_bundle_cohomology(
    p: ScrollParams, m: int, t_basepoints: int = 0
) -> CohomologyTriple:
    """Cohomology of the normal bundle of the scroll in P^R.

    chi = 7(g-1) + (R+1)(R+1-h1) and
    h1n = h1*(d-m-g+1) - (d-2m+g-1) + t, where ``t`` counts base points of
    the residual series of the special section (0 for a general section).
    h2 vanishes.  A negative h1n signals a hypothesis violation upstream
    (e.g. speciality 1 with a non-canonical section and t = 0).
    """
    require_admissible(p, m)
    if t_basepoints < 0:
        raise InvalidParameters("negative-basepoints", f"t = {t_basepoints} < 0")
    R1 = p.R + 1
    chi = 7 * (p.g - 1) + R1 * (R1 - p.h1)
    h1n = p.h1 * (p.d - m - p.g + 1) - (p.d - 2 * m + p.g - 1) + t_basepoints
    if h1n < 0:
        raise InvalidParameters("negative-h1", f"h1(normal bundle) = {h1n} < 0")
    return CohomologyTriple(h0=chi + h1n, h1n=h1n, h2=0, chi=chi)


def h0_explicit(p: ScrollParams, m: int) -> int:
    """Global sections of the normal bundle, written directly as
    5(g-1) + (R+1)^2 - h1*h0(L) - chi(N (x) L^dual).

    Here h0(L) = m - g + 1 + h1 and chi(N (x) L^dual) = d - 2m + 1 - g.
    Must agree with ``normal_bundle_cohomology(p, m).h0``.
    """
    require_admissible(p, m)
    R1 = p.R + 1
    h0L = m - p.g + 1 + p.h1
    chi_NL = p.d - 2 * m + 1 - p.g
    return 5 * (p.g - 1) + R1 * R1 - p.h1 * h0L - chi_NL


def aut_dimension(p: ScrollParams, m: int, decomposable: bool) -> int:
    """Dimension of the projectivity group fixing the scroll.

    Equals h0 of the general twist of degree d - 2m, plus one when the
    bundle is decomposable.
    """
    return h0_general_line_bundle(p.g, p.d - 2 * m) + (1 if decomposable else 0)
