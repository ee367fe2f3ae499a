"""Enumeration of the irreducible components of the Hilbert scheme of
smooth, linearly normal, special scrolls.

For fixed (d, g, h1) above the degree threshold, the components whose base
curve has general moduli are indexed by the degree ``m`` of the unique
special section of the general scroll.  For speciality 1 there is a single
component (canonical section, m = 2g - 2) and smaller section degrees give
subloci of known codimension inside it; for speciality >= 2 every admissible
``m`` gives one generically smooth component.  The classification report
optionally appends the gonal-curve components of the same speciality, which
makes it complete for speciality 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InvalidParameters
from .gonal import enumerate_z_components, z_component_dimension, z_vs_h_difference
from .scroll import (
    BundleClass,
    ScrollParams,
    min_degree_threshold,
    require_admissible,
    stability_class,
)
from .series import special_series_degree_bounds


class ComponentKind(enum.Enum):
    GENERAL_MODULI = "general-moduli"
    GONAL = "gonal"


@dataclass(frozen=True)
class ComponentRecord:
    """One irreducible component of the Hilbert scheme.

    General-moduli records carry the section degree ``m`` and are always
    generically smooth; gonal records additionally carry (t, l) and leave
    ``generically_smooth`` unasserted (None).
    """

    kind: ComponentKind
    d: int
    g: int
    h1: int
    m: int
    dim: int
    generically_smooth: bool | None
    bundle_class: BundleClass | None
    t: int | None = None
    l: int | None = None


@dataclass(frozen=True)
class ReportNote:
    """Structured annotation attached to a classification report.

    ``m`` (and ``t``, ``l`` for gonal components) anchor the note to a
    component record; unanchored notes apply to the report as a whole.
    """

    code: str
    text: str
    m: int | None = None
    t: int | None = None
    l: int | None = None


@dataclass(frozen=True)
class ClassificationReport:
    params: ScrollParams
    components: list[ComponentRecord]
    reducible: bool
    equidimensional: bool
    complete: bool
    notes: list[ReportNote] = field(default_factory=list)


def admissible_m_range(g: int, h1: int) -> list[int]:
    """Admissible special-section degrees: [4] for (g, h1) = (3, 1), else
    all m with g + 3 - h1 <= m <= mbar.  Requires g >= 4*h1 (or the (3, 1)
    case); otherwise only special-moduli components exist."""
    lo, hi = special_series_degree_bounds(g, h1)
    return list(range(lo, hi + 1))


def component_dimension_formula(d: int, g: int, h1: int, m: int) -> int:
    """Raw dimension formula of the general-moduli component with section
    degree ``m``:

        7(g-1) + (R+1)(R+1-h1) + (d-m-g+1)*h1 - (d-2m+g-1)

    with R = d - 2g + 1 + h1.  No range gates; the gated entry point is
    :func:`component_dimension`.
    """
    R1 = d - 2 * g + 2 + h1
    return (
        7 * (g - 1)
        + R1 * (R1 - h1)
        + (d - m - g + 1) * h1
        - (d - 2 * m + g - 1)
    )


def component_dimension(p: ScrollParams, m: int) -> int:
    """Dimension of the general-moduli component with section degree ``m``."""
    require_admissible(p, m)
    return component_dimension_formula(p.d, p.g, p.h1, m)


def component_dimension_h1_1(d: int, g: int) -> int:
    """Dimension of the unique speciality-1 component:
    7(g-1) + (d-2g+3)^2 - (d-2g+3)."""
    threshold = min_degree_threshold(g, 1)
    if d < threshold:
        raise InvalidParameters(
            "degree-below-threshold", f"d = {d} < {threshold} for (g, h1) = ({g}, 1)"
        )
    s = d - 2 * g + 3
    return 7 * (g - 1) + s * s - s


def sublocus_codim_h1_1(g: int, m: int) -> int:
    """Codimension 2g - 2 - m of the locus of speciality-1 scrolls whose
    special section has degree m < 2g - 2 (inside the canonical-section
    component)."""
    if m >= 2 * g - 2:
        raise InvalidParameters("m-not-below-canonical", f"m = {m} >= 2g - 2 = {2 * g - 2}")
    if m < 4:
        raise InvalidParameters("m-out-of-range", f"m = {m} < 4")
    return 2 * g - 2 - m


def singular_point_predicate(g: int, h1: int, m: int) -> bool:
    """Whether the component with section degree ``m`` contains scrolls whose
    residual series has base points (such scrolls are singular points of the
    Hilbert scheme).

    Exact cross-multiplied form of g >= h1*(m + h1 + 2)/(h1 + 1); equivalent
    to brill_noether_rho(g, h1 - 1, 2g - 3 - m) >= 0.  Degenerate inputs
    (2g - 3 - m < 0, empty Brill-Noether locus) give False.
    """
    if 2 * g - 3 - m < 0:
        return False
    return g * (h1 + 1) >= h1 * (m + h1 + 2)


def singular_by_smaller_section(g: int, h1: int, m_outer: int, m_inner: int) -> bool:
    """Whether a scroll of the component with section degree ``m_outer``
    whose actual minimal special section has degree ``m_inner`` is a singular
    point (it then lies on the ``m_inner`` component as well)."""
    lo, hi = special_series_degree_bounds(g, h1)
    for m in (m_outer, m_inner):
        if not lo <= m <= hi:
            raise InvalidParameters(
                "m-out-of-range", f"m = {m} not in [{lo}, {hi}] for (g, h1) = ({g}, {h1})"
            )
    return m_inner < m_outer


def _bundle_class_or_note(p: ScrollParams, m: int, notes: list[ReportNote]) -> BundleClass | None:
    try:
        return stability_class(p, m)
    except InvalidParameters as exc:
        if exc.code != "nonnegative-self-intersection":
            raise
        notes.append(
            ReportNote(
                code="boundary-self-intersection",
                text=f"section self-intersection 2m - d = {2 * m - p.d} >= 0; "
                "bundle class not asserted",
                m=m,
            )
        )
        return None


def classify(p: ScrollParams, include_gonal: bool = False) -> ClassificationReport:
    """Full component list of the Hilbert scheme at (d, g, h1).

    One general-moduli record per admissible section degree (a single one,
    m = 2g - 2, for speciality 1, with the smaller degrees reported as
    sublocus notes).  With ``include_gonal``, appends every valid gonal
    component Z(t, h1); for speciality 2 this makes the classification
    complete.  Records are ordered by increasing m, then by gonality.
    """
    threshold = min_degree_threshold(p.g, p.h1)
    if p.d < threshold:
        raise InvalidParameters(
            "degree-below-threshold", f"d = {p.d} < {threshold} for (g, h1) = ({p.g}, {p.h1})"
        )
    mrange = admissible_m_range(p.g, p.h1)

    notes: list[ReportNote] = []
    records: list[ComponentRecord] = []

    if p.h1 == 1:
        m_canon = 2 * p.g - 2
        assert mrange[-1] == m_canon
        records.append(
            ComponentRecord(
                kind=ComponentKind.GENERAL_MODULI,
                d=p.d,
                g=p.g,
                h1=1,
                m=m_canon,
                dim=component_dimension(p, m_canon),
                generically_smooth=True,
                bundle_class=_bundle_class_or_note(p, m_canon, notes),
            )
        )
        for m in mrange[:-1]:
            notes.append(
                ReportNote(
                    code="sublocus-codim",
                    text=f"scrolls with special section of degree {m} form a "
                    f"sublocus of codimension {sublocus_codim_h1_1(p.g, m)}",
                    m=m_canon,
                )
            )
        notes.append(
            ReportNote(
                code="closure-containment",
                text="every family with section degree below 2g - 2 lies in the "
                "closure of the canonical-section component",
            )
        )
        notes.append(
            ReportNote(code="connected", text="the Hilbert scheme locus is connected")
        )
    else:
        for m in mrange:
            records.append(
                ComponentRecord(
                    kind=ComponentKind.GENERAL_MODULI,
                    d=p.d,
                    g=p.g,
                    h1=p.h1,
                    m=m,
                    dim=component_dimension(p, m),
                    generically_smooth=True,
                    bundle_class=_bundle_class_or_note(p, m, notes),
                )
            )
            if singular_point_predicate(p.g, p.h1, m):
                notes.append(
                    ReportNote(
                        code="singular-locus",
                        text="scrolls whose residual series has base points are "
                        "singular points of the Hilbert scheme",
                        m=m,
                    )
                )
        for m in mrange[1:]:
            notes.append(
                ReportNote(
                    code="singular-overlap",
                    text=f"scrolls of this component whose minimal special section "
                    f"has admissible degree below {m} lie on two components and "
                    "are singular points",
                    m=m,
                )
            )

    if include_gonal:
        if p.h1 < 2:
            notes.append(
                ReportNote(
                    code="no-gonal-components",
                    text="gonal-curve components require speciality >= 2",
                )
            )
        else:
            for gp in enumerate_z_components(p.d, p.g, p.h1):
                records.append(
                    ComponentRecord(
                        kind=ComponentKind.GONAL,
                        d=p.d,
                        g=p.g,
                        h1=p.h1,
                        m=gp.m,
                        dim=z_component_dimension(gp),
                        generically_smooth=None,
                        bundle_class=BundleClass.UNSTABLE_DECOMPOSABLE,
                        t=gp.t,
                        l=gp.l,
                    )
                )
                if gp.l >= 3:
                    diff = z_vs_h_difference(gp)
                    if diff >= 0:
                        notes.append(
                            ReportNote(
                                code="not-contained",
                                text=f"Z({gp.t},{gp.l}) is not contained in any "
                                f"general-moduli component (dimension excess {diff})",
                                m=gp.m,
                                t=gp.t,
                                l=gp.l,
                            )
                        )
            if p.h1 == 2:
                notes.append(
                    ReportNote(
                        code="complete",
                        text="general-moduli and gonal components exhaust the "
                        "classification for speciality 2",
                    )
                )

    dims = [r.dim for r in records]
    complete = p.h1 == 1 or (p.h1 == 2 and include_gonal)
    return ClassificationReport(
        params=p,
        components=records,
        reducible=len(records) > 1,
        equidimensional=len(set(dims)) <= 1,
        complete=complete,
        notes=notes,
    )
