import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from heisenberg_xxx import analysis as A
from heisenberg_xxx.errors import DomainError, FrozenLine

alphas = st.floats(-3, 1)
times = st.floats(0, 10)
phis = st.floats(-20, 20)


# --- predictions ----------------------------------------------------------

def test_phase_examples():
    assert A.phase(0, 1) == 1
    assert A.phase(-1, 5) == 0
    assert A.phase(1, 2.5) == 5


def test_prediction_examples():
    assert A.predicted_fidelity(math.pi / 2) == pytest.approx(0.707106781, abs=5e-10)
    assert A.predicted_fidelity(1.0) == pytest.approx(0.877582562, abs=5e-10)
    assert A.predicted_fidelity(0.0) == 1
    assert A.predicted_coherence(math.pi / 2) == pytest.approx(0.5)
    assert A.predicted_coherence(1.0) == pytest.approx(0.229848, abs=1e-6)
    assert A.predicted_concurrence12(1.0) == pytest.approx(0.770151, abs=1e-6)
    assert A.predicted_concurrence34(math.pi) == pytest.approx(1)


@given(phis)
def test_predictions_periodic(phi):
    for f in (A.predicted_fidelity, A.predicted_coherence, A.predicted_concurrence12,
              A.predicted_concurrence34, A.ef12_simplified, A.ef34_simplified):
        assert f(phi + 2 * math.pi) == pytest.approx(f(phi), abs=1e-9)


@given(phis)
def test_concurrences_complementary(phi):
    assert A.predicted_concurrence12(phi) + A.predicted_concurrence34(phi) == pytest.approx(1)
    assert A.predicted_fidelity(phi) ** 2 == pytest.approx(A.predicted_concurrence12(phi), abs=1e-12)


# --- entanglement of formation --------------------------------------------

def test_ef_limits():
    assert A.ef12_closed_form(0.0) == pytest.approx(1, abs=1e-6)
    assert A.ef12_simplified(0.0) == pytest.approx(1, abs=1e-12)
    assert A.ef12_simplified(math.pi) == 0
    assert A.ef34_simplified(0.0) == 0
    assert A.ef34_closed_form(math.pi) == pytest.approx(1, abs=1e-6)


def test_ef_quarter_turn():
    for f in (A.ef12_closed_form, A.ef12_simplified, A.ef34_closed_form, A.ef34_simplified):
        assert f(math.pi / 2) == pytest.approx(0.35458, abs=5e-6)


@given(phis)
def test_ef_closed_forms_match_simplified(phi):
    # the printed prefactor 0.721348 rounds 1/(2 ln 2)
    assert A.ef12_closed_form(phi) == pytest.approx(A.ef12_simplified(phi), abs=1e-6)
    assert A.ef34_closed_form(phi) == pytest.approx(A.ef34_simplified(phi), abs=1e-6)


@given(phis)
def test_ef_shift_symmetry(phi):
    assert A.ef12_simplified(phi) == pytest.approx(A.ef34_simplified(phi + math.pi), abs=1e-9)


def test_ef_paths_bundle():
    p = A.predicted_ef12(1.0)
    assert p.closed_form == A.ef12_closed_form(1.0) and p.simplified == A.ef12_simplified(1.0)


def test_root_domain():
    with pytest.raises(DomainError):
        A._root(-1e-6)
    assert A._root(-1e-12) == 0


# --- sensitivities --------------------------------------------------------

def test_fidelity_sensitivity_example():
    s = A.sensitivity_fidelity_alpha(0.0, 1.0)
    assert s.printed == pytest.approx(-0.25 * math.sin(1.0))


def test_fidelity_sensitivity_factor_two():
    # printed -t/4 sin(phi) is half the true derivative of cos^2(phi/2)
    s = A.sensitivity_fidelity_alpha(-1.0 + math.pi / 2, 1.0)
    assert s.printed == pytest.approx(-0.25)
    assert s.finite_difference / s.printed == pytest.approx(2, abs=1e-8)


@given(alphas, st.floats(0.1, 10))
def test_fidelity_sensitivity_true_derivative(alpha, t):
    phi = A.phase(alpha, t)
    s = A.sensitivity_fidelity_alpha(alpha, t)
    assert s.finite_difference == pytest.approx(-(t / 2) * math.sin(phi), abs=1e-7)


def test_coherence_sensitivity_example():
    s = A.sensitivity_coherence_alpha(0.0, 1.0)
    assert s.printed == pytest.approx(0.909297, abs=1e-6)
    assert s.finite_difference == pytest.approx(0.420735, abs=1e-6)


@given(alphas, times)
def test_coherence_t_sensitivity_consistent(alpha, t):
    s = A.sensitivity_coherence_t(alpha, t)
    assert s.finite_difference == pytest.approx(0.5 * (alpha + 1) * math.sin(A.phase(alpha, t)), abs=1e-7)


# --- loci -----------------------------------------------------------------

def test_loci_examples():
    ms = A.locus("max_sensitivity", 0.0, (0, 0))
    assert ms.times == pytest.approx((math.pi / 4,))
    assert A.locus("max_sensitivity", 1.0, (0, 0)).times == pytest.approx((math.pi / 8,))
    ex = A.locus("extremum", 0.0, (0, 2))
    assert ex.times == pytest.approx((0, math.pi, 2 * math.pi))
    cons = A.locus("max_sensitivity_consistent", 1.0, (0, 1))
    assert cons.times == pytest.approx((math.pi / 4, 3 * math.pi / 4))


def test_loci_frozen_line():
    with pytest.raises(FrozenLine):
        A.locus("extremum", -1.0, (0, 3))
    with pytest.raises(FrozenLine):
        A.sensitivity_loci(-1.0)
    assert A.frozen_locus().times == ()


def test_loci_unknown_kind():
    with pytest.raises(ValueError):
        A.locus("nope", 0.0, (0, 1))


@given(st.floats(-3, 1).filter(lambda a: abs(a + 1) > 1e-3), st.integers(0, 5))
def test_consistent_loci_maximise_slope(alpha, k):
    t = A.locus("max_sensitivity_consistent", alpha, (k, k)).times[0]
    s = A.sensitivity_coherence_t(alpha, t)
    assert abs(s.finite_difference) == pytest.approx(0.5 * abs(alpha + 1), rel=1e-6)


# --- records, sweeps, table -----------------------------------------------

@pytest.mark.parametrize("row", A.TABLE, ids=lambda r: r.label)
def test_evaluate_point_table_rows(row):
    rec = A.evaluate_point(row.alpha, row.t)
    got = {"F": rec.F_analytic, "Cl1": rec.Cl1_rho34_analytic, "C12": rec.C12_analytic}
    oracle = {"F": rec.F_oracle, "Cl1": rec.Cl1_rho34_oracle, "C12": rec.C12_oracle}
    for name, (closed, printed) in row.published.items():
        assert got[name] == pytest.approx(closed, abs=1e-12)
        assert A.matches_printed(got[name], printed)
        assert A.relative_error(got[name], oracle[name]) < 1e-9


def test_frozen_row_is_initial_state():
    rec = A.evaluate_point(-1.0, 5.0)
    assert rec.phi == 0
    assert (rec.F_oracle, rec.C12_oracle, rec.C34_oracle) == pytest.approx((1, 1, 0), abs=1e-12)
    assert rec.Cl1_full_oracle == pytest.approx(1, abs=1e-12)


def test_record_fields():
    names = A.MeasureRecord.field_names()
    assert len(names) == 18 and names[:3] == ["alpha", "t", "phi"]
    rec = A.evaluate_point(0.3, 1.2, include_oracle=False)
    assert all(getattr(rec, f) is None for f in A.ORACLE_FIELDS)
    assert set(rec.as_dict(include_oracle=False)) == set(A.MeasureRecord.field_names(False))


@pytest.mark.parametrize("a, b", [((0.0, 2.0), (1.0, 1.0)), ((0.0, 2.0), (-0.5, 4.0))])
def test_phase_collapse(a, b):
    ra, rb = A.evaluate_point(*a), A.evaluate_point(*b)
    assert ra.phi == rb.phi
    assert ra.analytic_values() == pytest.approx(rb.analytic_values(), abs=1e-12)
    for f in A.ORACLE_FIELDS:
        assert getattr(ra, f) == pytest.approx(getattr(rb, f), abs=1e-11)


def test_sweep_small_grid():
    grid = A.SweepGrid(-1.0, 0.0, 2, 0.0, 1.0, 2)
    recs = A.sweep(grid)
    assert [(r.alpha, r.t) for r in recs] == [(-1, 0), (-1, 1), (0, 0), (0, 1)]
    assert recs[3].F_oracle == pytest.approx(math.cos(0.5), abs=1e-12)


def test_sweep_workers_match_serial():
    grid = A.SweepGrid(-2.0, 1.0, 3, 0.0, 3.0, 4)
    assert A.sweep(grid, workers=2) == A.sweep(grid)


def test_sweep_grid_validation():
    with pytest.raises(ValueError):
        A.SweepGrid(alpha_steps=1)
    g = A.SweepGrid()
    assert len(g.points()) == 81 * 201 and g.alphas[40] == pytest.approx(-1.0)


@pytest.mark.parametrize("printed, value, ok", [
    ("0.229848", math.sin(0.5) ** 2, True),
    ("0.877582562", math.cos(0.5), True),
    ("1.0", 1.0, True),
    ("0.5", 0.65, False),
])
def test_matches_printed(printed, value, ok):
    assert A.matches_printed(value, printed) is ok


def test_relative_error_floor():
    assert A.relative_error(0.0, 1e-13) == pytest.approx(1e-13)
    assert A.relative_error(2.0, 2.2) == pytest.approx(0.1)


def test_verify_table_passes():
    report = A.verify_table()
    assert report.passed and report.max_rel_error < 1e-9
    assert [r.label for r in report.rows] == [r.label for r in A.TABLE]


def test_verify_table_negative_control():
    report = A.verify_table(oracle_alpha_shift=1e-3)
    assert not report.passed
    assert report.failing_rows()
