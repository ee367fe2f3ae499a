"""Component enumeration, dimension formulas, classification reports,
singular-point predicates."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grids import degree_values, scroll_grid, speciality_values
from scrollhilb import (
    BundleClass,
    ComponentKind,
    InvalidParameters,
    ScrollParams,
    admissible_m_range,
    brill_noether_rho,
    classify,
    component_dimension,
    component_dimension_formula,
    component_dimension_h1_1,
    make_scroll,
    rho_of_bundle,
    singular_by_smaller_section,
    singular_point_predicate,
    sublocus_codim_h1_1,
)


def admissible_m_by_enumeration(g: int, h1: int) -> list[int]:
    """Independent oracle: degrees m whose complete series of speciality h1
    exists on the general curve (Brill-Noether number >= 0 in bundle form)
    with section dimension at least 3, or the single (3, 1, h=2) case."""
    out = []
    for m in range(0, 3 * g + 1):
        h = m - g + h1
        floor_ok = h >= 3 or (g, h1, h) == (3, 1, 2)
        if floor_ok and rho_of_bundle(g, h + 1, h1) >= 0:
            out.append(m)
    return out


def test_admissible_m_range_examples():
    assert admissible_m_range(3, 1) == [4]
    assert admissible_m_range(8, 2) == [9]
    with pytest.raises(InvalidParameters) as exc:
        admissible_m_range(6, 2)
    assert exc.value.code == "BN1-violated"


def test_admissible_m_range_against_enumeration():
    for g in range(3, 30):
        for h1 in range(1, g):
            try:
                got = admissible_m_range(g, h1)
            except InvalidParameters as exc:
                assert exc.code == "BN1-violated"
                assert admissible_m_by_enumeration(g, h1) == []
                continue
            assert got == admissible_m_by_enumeration(g, h1)


def test_component_dimension_examples():
    assert component_dimension(make_scroll(10, 3, 1), 4) == 56
    assert component_dimension(make_scroll(29, 8, 2), 9) == 312
    # below the existence gate (g < 4*h1) the gated call rejects but the
    # formula still evaluates; it is the comparison value for gonal components
    assert component_dimension_formula(110, 19, 5, 24) == 6232
    with pytest.raises(InvalidParameters) as exc:
        component_dimension(make_scroll(110, 19, 5), 24)
    assert exc.value.code == "BN1-violated"


def test_component_dimension_h1_1_examples():
    assert component_dimension_h1_1(10, 3) == 56
    # d - 2g + 3 = 15 here; cross-checked against the m = 2g - 2 evaluation
    # of the general formula and the parameter-count oracle
    assert component_dimension_h1_1(28, 8) == 7 * 7 + 15 * 15 - 15 == 259


def test_h1_1_specialization_on_grid():
    for g in range(3, 41):
        for d in degree_values(g, 1):
            want = component_dimension_h1_1(d, g)
            assert component_dimension(ScrollParams(d, g, 1), 2 * g - 2) == want
            s = d - 2 * g + 3
            assert want == 7 * (g - 1) + s * s - s


def test_dimension_step_in_m_is_two_minus_h1():
    for g in range(3, 41):
        for h1 in speciality_values(g):
            mrange = admissible_m_range(g, h1)
            for d in degree_values(g, h1):
                p = ScrollParams(d, g, h1)
                dims = [component_dimension(p, m) for m in mrange]
                for lo, hi in zip(dims, dims[1:]):
                    assert hi - lo == 2 - h1
                # maximal dimension sits at the smallest section degree
                # (constant for h1 = 2, increasing towards 2g-2 for h1 = 1)
                if h1 >= 3:
                    assert dims == sorted(dims, reverse=True)


def test_sublocus_codim():
    assert sublocus_codim_h1_1(8, 12) == 2
    assert sublocus_codim_h1_1(5, 7) == 1
    with pytest.raises(InvalidParameters) as exc:
        sublocus_codim_h1_1(3, 4)  # m = 2g - 2 exactly
    assert exc.value.code == "m-not-below-canonical"


def test_classify_speciality_one():
    report = classify(make_scroll(10, 3, 1))
    assert len(report.components) == 1
    rec = report.components[0]
    assert rec.kind is ComponentKind.GENERAL_MODULI
    assert (rec.m, rec.dim, rec.generically_smooth) == (4, 56, True)
    assert rec.bundle_class is BundleClass.UNSTABLE_DECOMPOSABLE
    assert not report.reducible
    assert report.equidimensional
    assert report.complete


def test_classify_speciality_one_subloci():
    report = classify(make_scroll(40, 9, 1))
    assert [rec.m for rec in report.components] == [16]
    sub = [n for n in report.notes if n.code == "sublocus-codim"]
    assert len(sub) == 5
    for note, (m, codim) in zip(sub, [(11, 5), (12, 4), (13, 3), (14, 2), (15, 1)]):
        assert f"degree {m} " in note.text and f"codimension {codim}" in note.text
    assert any(n.code == "closure-containment" for n in report.notes)
    assert any(n.code == "connected" for n in report.notes)


def test_classify_speciality_two_with_gonal():
    # d = 29 sits below the splitting range 6g - 5 = 43, so no gonal
    # component passes the gates and the single general-moduli component
    # is the whole (complete) classification
    report = classify(make_scroll(29, 8, 2), include_gonal=True)
    assert [rec.m for rec in report.components] == [9]
    assert report.components[0].dim == 312
    assert report.equidimensional
    assert not report.reducible
    assert report.complete


def test_classify_speciality_two_gonal_equidimensional():
    report = classify(make_scroll(55, 10, 2), include_gonal=True)
    kinds = [rec.kind for rec in report.components]
    assert kinds == [
        ComponentKind.GENERAL_MODULI,
        ComponentKind.GENERAL_MODULI,
        ComponentKind.GONAL,
    ]
    assert [rec.m for rec in report.components[:2]] == [11, 12]
    gz = report.components[2]
    assert (gz.t, gz.l, gz.m) == (3, 2, 15)
    assert gz.generically_smooth is None
    assert gz.bundle_class is BundleClass.UNSTABLE_DECOMPOSABLE
    assert len({rec.dim for rec in report.components}) == 1
    assert report.equidimensional and report.reducible and report.complete


def test_classify_without_gonal_is_incomplete_for_h1_2():
    report = classify(make_scroll(55, 10, 2), include_gonal=False)
    assert not report.complete
    assert all(rec.kind is ComponentKind.GENERAL_MODULI for rec in report.components)


def test_classify_high_speciality_never_claims_completeness():
    report = classify(make_scroll(85, 15, 3), include_gonal=True)
    assert not report.complete
    assert report.reducible
    assert not report.equidimensional  # dimensions drop as m grows
    by_kind = {}
    for rec in report.components:
        by_kind.setdefault(rec.kind, []).append(rec)
    assert [rec.m for rec in by_kind[ComponentKind.GENERAL_MODULI]] == [15, 16]
    assert [rec.dim for rec in by_kind[ComponentKind.GENERAL_MODULI]] == [3617, 3616]
    (gz,) = by_kind[ComponentKind.GONAL]
    assert (gz.t, gz.l, gz.m, gz.dim) == (3, 3, 22, 3617)
    assert any(n.code == "not-contained" for n in report.notes)


def test_classify_propagates_validation():
    with pytest.raises(InvalidParameters) as exc:
        classify(make_scroll(28, 8, 2))  # below the 4g - 3 = 29 threshold
    assert exc.value.code == "degree-below-threshold"


def test_singular_point_predicate_examples():
    assert singular_point_predicate(5, 1, 6) is True
    assert singular_point_predicate(3, 1, 4) is False  # degenerate residual degree
    assert singular_point_predicate(12, 2, 9) is True


@settings(derandomize=True, max_examples=400)
@given(g=st.integers(3, 60), h1=st.integers(1, 14), m=st.integers(0, 130))
def test_singular_predicate_matches_brill_noether_form(g, h1, m):
    if h1 >= g or 2 * g - 3 - m < 0:
        return
    want = brill_noether_rho(g, h1 - 1, 2 * g - 3 - m) >= 0
    assert singular_point_predicate(g, h1, m) == want
    # the shifted form with (h+1, m+1) is the same number
    h = m - g + h1
    assert brill_noether_rho(g, h + 1, m + 1) == brill_noether_rho(g, h1 - 1, 2 * g - 3 - m)


def test_singular_by_smaller_section():
    assert singular_by_smaller_section(9, 1, 16, 14) is True
    assert singular_by_smaller_section(9, 1, 16, 16) is False
    assert singular_by_smaller_section(8, 2, 9, 9) is False
    with pytest.raises(InvalidParameters):
        singular_by_smaller_section(8, 2, 9, 8)  # 8 below the admissible range


def test_triple_agreement_spot_grid():
    from scrollhilb import dim_via_parameter_count, h0_explicit

    for p, m in scroll_grid(14):
        a = component_dimension(p, m)
        assert a == h0_explicit(p, m)
        assert a == dim_via_parameter_count(p, m)
