"""Components of the Hilbert scheme built from general gonal curves.

A general curve with a (unique, base-point-free) pencil of degree ``t``,
``2 < t < gonality of the general curve``, carries special line bundles
obtained by subtracting multiples of the pencil from the canonical bundle.
Twisting a general non-special bundle by such a series produces smooth,
linearly normal special scrolls whose moduli are special: they fill closed
subschemes Z(t, l) of the Hilbert scheme, where ``l`` is the speciality.
This module computes their validity gates, dimensions, and the comparison
against the general-moduli components of the same speciality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameters
from .series import SeriesSpec, gonality_general


def ballico_a(g: int, t: int) -> int:
    """The unique integer ``a >= 3`` with (a-2)(t-1) < g <= (a-1)(t-1).

    Multiples r*D of the degree-``t`` pencil D on a general t-gonal curve
    have dim |rD| = r exactly for r <= a - 2.  Equals ceil(g/(t-1)) + 1.
    """
    if t < 3:
        raise InvalidParameters("gonality-out-of-range", f"t = {t} < 3")
    a = -(-g // (t - 1)) + 1
    if a < 3:
        raise InvalidParameters("no-valid-a", f"no a >= 3 with (a-2)(t-1) < g = {g}")
    assert (a - 2) * (t - 1) < g <= (a - 1) * (t - 1)
    return a


def kk_very_ample(g: int, t: int, l: int) -> bool:
    """Very-ampleness gate for the bundle canonical minus (l-1) pencils:
    l <= 2g/(t(t-1)) - 1/t - 1, checked by cross-multiplication."""
    return l * t * (t - 1) <= 2 * g - (t - 1) - t * (t - 1)


def gonal_locus_dimension(g: int, t: int) -> int:
    """Dimension 2g + 2t - 5 of the locus of t-gonal curves in the moduli
    space of genus-g curves, valid for 3 <= t < gonality of the general
    curve (above that the locus is everything, of dimension 3g - 3)."""
    if t < 3:
        raise InvalidParameters("gonality-out-of-range", f"t = {t} < 3")
    gamma = gonality_general(g)
    if t >= gamma:
        raise InvalidParameters(
            "not-proper-gonal-locus", f"t = {t} >= general gonality {gamma}"
        )
    return 2 * g + 2 * t - 5


def special_residual_series(g: int, t: int, r: int) -> SeriesSpec:
    """The series canonical minus r pencils on a general t-gonal curve.

    Degree 2g - 2 - r*t, speciality r + 1, and h0 = g - r(t-1); defined for
    1 <= r <= a - 2 with ``a`` the Ballico parameter.
    """
    a = ballico_a(g, t)
    if not 1 <= r <= a - 2:
        raise InvalidParameters("r-out-of-range", f"r = {r} not in [1, {a - 2}]")
    m = 2 * g - 2 - r * t
    return SeriesSpec(g=g, m=m, h=g - r * (t - 1) - 1, i=r + 1)


@dataclass(frozen=True)
class GonalParams:
    """Validated parameters of a gonal-curve component Z(t, l).

    ``a`` (the Ballico parameter) and the section degree
    ``m = 2g - 2 - (l-1)t`` are derived, never supplied.  Validation order:
    genus, gonality, Ballico parameter, speciality, very-ampleness, degree.
    """

    g: int
    t: int
    l: int
    d: int
    a: int = 0  # derived
    m: int = 0  # derived

    def __post_init__(self):
        gamma = gonality_general(self.g)  # rejects g < 3
        if not 2 < self.t < gamma:
            raise InvalidParameters(
                "gonality-out-of-range",
                f"t = {self.t} not in (2, {gamma}) for g = {self.g}",
            )
        a = ballico_a(self.g, self.t)
        if not 2 <= self.l <= a - 1:
            raise InvalidParameters(
                "l-out-of-range", f"l = {self.l} not in [2, {a - 1}]"
            )
        if not kk_very_ample(self.g, self.t, self.l):
            raise InvalidParameters(
                "not-very-ample",
                f"l*t*(t-1) = {self.l * self.t * (self.t - 1)} exceeds "
                f"2g - (t-1) - t(t-1) = {2 * self.g - (self.t - 1) - self.t * (self.t - 1)}",
            )
        if self.d < 6 * self.g - 5:
            raise InvalidParameters(
                "degree-too-small", f"d = {self.d} < 6g - 5 = {6 * self.g - 5}"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "m", 2 * self.g - 2 - (self.l - 1) * self.t)

    @property
    def R(self) -> int:
        """Ambient dimension of the scrolls in Z(t, l): d - 2g + 1 + l."""
        return self.d - 2 * self.g + 1 + self.l


def make_gonal_params(g: int, t: int, l: int, d: int) -> GonalParams:
    """Validate (g, t, l, d) and return the gonal component record."""
    return GonalParams(g=g, t=t, l=l, d=d)


def z_component_dimension(gp: GonalParams) -> int:
    """Dimension of Z(t, l): (R+1)^2 + 8(g-1) - 4 - d - 2t(l-2)."""
    R1 = gp.R + 1
    return R1 * R1 + 8 * (gp.g - 1) - 4 - gp.d - 2 * gp.t * (gp.l - 2)


def h_component_dimension_at_gonal_m(gp: GonalParams, require_existence: bool = True) -> int:
    """Dimension formula of the general-moduli component with the same
    speciality, evaluated at the gonal section degree m = 2g - 2 - (l-1)t:

        (10 - l)(g - 1) - d - l^2 + t(l-1)(l-2) + (R+1)^2

    The component itself exists only when g >= 4l; with
    ``require_existence=False`` the formula value is returned regardless,
    which is what the dimension comparison against Z(t, l) uses.
    """
    if require_existence and gp.g < 4 * gp.l:
        raise InvalidParameters(
            "no-general-moduli-component", f"g = {gp.g} < 4l = {4 * gp.l}"
        )
    R1 = gp.R + 1
    return (
        (10 - gp.l) * (gp.g - 1)
        - gp.d
        - gp.l * gp.l
        + gp.t * (gp.l - 1) * (gp.l - 2)
        + R1 * R1
    )


def z_vs_h_difference(gp: GonalParams) -> int:
    """Dimension of Z(t, l) minus the general-moduli formula at the gonal
    section degree: (l-2)(g + 1 + l - t(l+1)).

    Non-negative whenever the very-ampleness gate holds (zero for l = 2);
    this is what certifies that Z(t, l) is not contained in any
    general-moduli component.
    """
    return (gp.l - 2) * (gp.g + 1 + gp.l - gp.t * (gp.l + 1))


def rem19608_family(l: int) -> GonalParams:
    """The family Z(3, l) with g = 3l + 4 and minimal degree d = 6g - 5.

    Defined for l > 4; then g < 4l, so no general-moduli component of
    speciality l exists and the whole classification is special-moduli.
    The very-ampleness gate holds with exact equality for every member.
    """
    if l <= 4:
        raise InvalidParameters("l-out-of-range", f"l = {l} <= 4")
    g = 3 * l + 4
    gp = GonalParams(g=g, t=3, l=l, d=6 * g - 5)
    # equality in the very-ampleness gate: l*6 == 2g - 2 - 6 == 6l
    assert gp.l * gp.t * (gp.t - 1) == 2 * g - (gp.t - 1) - gp.t * (gp.t - 1)
    assert g < 4 * l
    return gp


def enumerate_z_components(d: int, g: int, l: int) -> list[GonalParams]:
    """All valid Z(t, l) for the given degree, genus and speciality,
    ordered by increasing t.  Empty when no gonality passes the gates
    (in particular whenever d < 6g - 5)."""
    out = []
    if g < 3 or l < 2:
        return out
    for t in range(3, gonality_general(g)):
        try:
            out.append(GonalParams(g=g, t=t, l=l, d=d))
        except InvalidParameters:
            continue
    return out
