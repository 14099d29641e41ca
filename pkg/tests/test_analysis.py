"""Tests for steady-state criteria, the baseline, and compare_rates."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from falaudit import (
    ConvergenceReport,
    CriterionKind,
    EnergyNorm,
    FalParams,
    InvalidConfig,
    RateConfig,
    SteadyStateCriterion,
    baseline_descent,
    compare_rates,
    fal_count_sweep,
    fal_steady_index,
    first_passage_index,
    indeterminate_ratio_probe,
    plateau_index,
    run_fal,
)

S_STAR = 4.2856
S0 = 15.0


def fig2_config(chi, nu=0.25):
    return RateConfig.from_chi(chi=chi, eta=2.0, nu=nu, s_star=S_STAR, s0=S0)


# ---------------------------------------------------------------- criteria


def test_criterion_parse_and_describe():
    c = SteadyStateCriterion.parse("first-passage:7.2e-4")
    assert c.kind is CriterionKind.FIRST_PASSAGE
    assert c.threshold == 7.2e-4

    c = SteadyStateCriterion.parse("plateau:0.00011")
    assert c.kind is CriterionKind.PLATEAU
    assert c.threshold == 1.1e-4
    assert c.describe() == "plateau:0.00011"
    assert SteadyStateCriterion.parse(c.describe()) == c


def test_criterion_parse_rejects_garbage():
    for text in ("nonsense:1", "plateau", "plateau:x", "plateau:-1", ":0.5", "plateau:"):
        with pytest.raises(InvalidConfig):
            SteadyStateCriterion.parse(text)


def test_criterion_constructor_validation():
    with pytest.raises(InvalidConfig):
        SteadyStateCriterion("plateau", 0.1)  # kind must be the enum
    with pytest.raises(InvalidConfig):
        SteadyStateCriterion.plateau(0.0)
    with pytest.raises(InvalidConfig):
        SteadyStateCriterion.first_passage(float("inf"))


def test_first_passage_examples():
    series = [S_STAR + 1.0, S_STAR + 0.5, S_STAR + 1e-4]
    assert first_passage_index(series, S_STAR, 1e-3) == 2
    assert first_passage_index(series, S_STAR, 10.0) == 0
    assert first_passage_index(series, S_STAR, 1e-9) is None


def test_plateau_examples():
    assert plateau_index([5.0, 5.0, 5.0], 1e-12) == 1
    assert plateau_index([5.0, 4.0, 3.5], 0.6) == 2
    assert plateau_index([5.0, 4.0, 3.0], 0.5) is None
    # a single sample has no step to measure
    assert plateau_index([5.0], 10.0) is None


@given(
    st.floats(min_value=0.2, max_value=0.9),
    st.floats(min_value=1e-6, max_value=0.5),
    st.floats(min_value=1e-6, max_value=0.5),
)
def test_shrinking_threshold_never_fires_earlier(r, t1, t2):
    """Criterion monotonicity on a geometric approach to s*."""
    lo, hi = sorted((t1, t2))
    series = [1.0 + r**k for k in range(80)]
    for index_at in (
        lambda t: first_passage_index(series, 1.0, t),
        lambda t: plateau_index(series, t),
    ):
        i_lo, i_hi = index_at(lo), index_at(hi)
        if i_lo is not None:
            assert i_hi is not None
            assert i_hi <= i_lo


# ---------------------------------------------------------------- baseline


def test_baseline_example():
    values = baseline_descent(EnergyNorm(10.0, 2.0, 5.0), 0.1, 15.0, 10)
    # error contracts by 1 - 2 mu eta = 0.6 per step: s_3 = 5 + 10 * 0.6^3
    assert values[3] == pytest.approx(7.16, abs=1e-12)


def test_baseline_one_step_convergence():
    # 2 mu eta = 1 kills the error in a single step
    values = baseline_descent(EnergyNorm(10.0, 2.0, 5.0), 0.25, 15.0, 5)
    assert values[0] == 15.0
    assert np.all(values[1:] == 5.0)


def test_baseline_from_the_minimum_stays_put():
    values = baseline_descent(EnergyNorm(10.0, 2.0, 5.0), 0.1, 5.0, 5)
    assert np.all(values == 5.0)


def test_baseline_geometric_error_law():
    """The error contracts by exactly 1 - 2 mu eta per step.

    Measuring the ratio through s - s* carries a representation-noise
    floor of ~eps * s* / err, so the 1e-12 match is asserted over the
    whole err > 1e-8 window on an s* = 0 run (where the measurement is
    exact) and down to err ~ 1e-3 on the Fig. 2-style run."""
    values = baseline_descent(EnergyNorm(1.0, 1.0, 0.0), 0.125, 1.0, 70)
    err = np.abs(values)
    for k in range(70):
        if err[k] <= 1e-8:
            break
        assert err[k + 1] / err[k] == pytest.approx(0.75, abs=1e-12)

    values = baseline_descent(EnergyNorm(10.0, 2.0, 5.0), 0.1, 15.0, 18)
    err = np.abs(values - 5.0)
    for k in range(18):
        assert err[k] > 1e-3
        assert err[k + 1] / err[k] == pytest.approx(0.6, abs=1e-12)


# ---------------------------------------------------------------- ratio probe


def test_probe_at_zero_is_the_initial_gap():
    ((k, ratio),) = indeterminate_ratio_probe(0.25, S_STAR, S0, [0])
    assert k == 0
    assert ratio == pytest.approx(S0 - S_STAR, rel=1e-12)


def test_probe_grows_without_bound():
    probe = indeterminate_ratio_probe(0.25, S_STAR, S0, (10, 50, 100, 200, 400))
    ratios = [r for _, r in probe]
    assert ratios[0] == pytest.approx(33.74423989265488, rel=1e-9)
    for a, b in zip(ratios, ratios[1:]):
        assert b > a
    assert ratios[-1] / ratios[0] > 10.0


def test_probe_validation():
    with pytest.raises(InvalidConfig):
        indeterminate_ratio_probe(0.25, S_STAR, S_STAR, [10])
    with pytest.raises(InvalidConfig):
        indeterminate_ratio_probe(0.25, S_STAR, S0, [-1])


# ---------------------------------------------------------------- FAL index


def test_fal_index_matches_recorded_trajectory():
    """The index-only kernel must agree with a criterion applied to the
    stored trajectory."""
    cfg = fig2_config(0.25, nu=0.5)
    params = FalParams(cfg.mu, EnergyNorm(0.0, 2.0, S_STAR), cfg.nu)
    criterion = SteadyStateCriterion.plateau(1.1e-4)

    index, _code, _k_exit, s_fire = fal_steady_index(params, S0, criterion, 2000)
    traj = run_fal(params, S0, max_iters=2000)
    assert traj.complexification_index is None
    brute = plateau_index(traj.iterates.real, 1.1e-4)
    assert index == brute == 569
    assert s_fire == traj.iterates.real[index]


def test_fal_index_withheld_after_complexification():
    cfg = fig2_config(1.75, nu=0.5)
    params = FalParams(cfg.mu, EnergyNorm(0.0, 2.0, S_STAR), cfg.nu)
    criterion = SteadyStateCriterion.first_passage(7.2e-4)

    index, code, k_exit, _ = fal_steady_index(params, S0, criterion, 2000)
    assert index is None
    traj = run_fal(params, S0, max_iters=50)
    assert traj.complexification_index == k_exit + 1 == 4


# ---------------------------------------------------------------- compare_rates


def test_compare_fig2a_plateau_counts():
    report = compare_rates(fig2_config(0.25), SteadyStateCriterion.plateau(1.1e-4), 2000)
    assert report.eq21.index == 32
    assert report.eq21_star.index == 414
    assert report.fal.index == 795
    assert report.baseline.index == 237
    assert report.fal.note == "SteadyState"
    assert report.fal.final_value.imag == 0.0
    assert report.fal.final_value.real == pytest.approx(4.3724834802590875, rel=1e-12)


def test_compare_fig2b_plateau_counts():
    report = compare_rates(fig2_config(1.75), SteadyStateCriterion.plateau(8.8e-4), 2000)
    assert report.eq21.index == 5
    assert report.eq21_star.index == 56
    assert report.fal.index == 102
    assert report.baseline.index == 31


def test_compare_reports_estimate_ordering():
    """Where all methods settle, the exponential estimate fires first and
    the actual run last (the published ordering, at this order)."""
    for chi, delta in ((0.25, 1.1e-4), (1.75, 8.8e-4)):
        report = compare_rates(fig2_config(chi), SteadyStateCriterion.plateau(delta), 2000)
        assert report.eq21.index < report.eq21_star.index < report.fal.index


def test_compare_first_passage_outlasts_horizon():
    report = compare_rates(
        fig2_config(0.25), SteadyStateCriterion.first_passage(7.2e-4), 2000
    )
    assert report.eq21.index == 29
    assert report.eq21_star.index is None
    assert report.eq21_star.note == "MaxIters"
    assert report.fal.index is None
    assert report.fal.note == "MaxIters"
    assert report.baseline.index is not None


def test_compare_complexified_run_gets_no_index():
    report = compare_rates(
        fig2_config(1.75, nu=1.5), SteadyStateCriterion.plateau(8.8e-4), 2000
    )
    assert report.fal.index is None
    assert report.fal.note == "Complexified"
    assert report.fal.complexification_index == 73
    assert report.fal.final_value.imag != 0.0


def test_compare_degenerate_start_all_methods_fire_immediately():
    """Starting an ulp above s* every *trajectory* criterion fires at 0;
    the exponential estimate is pinned to s* + exp(-chi k) regardless of
    s0, so it alone still needs ~28 steps to pass 1e-3."""
    cfg = RateConfig.from_chi(chi=0.25, eta=2.0, nu=0.25, s_star=S_STAR, s0=S_STAR + 1e-9)
    report = compare_rates(cfg, SteadyStateCriterion.first_passage(1e-3), 2000)
    assert report.fal.index == 0
    assert report.eq21_star.index == 0
    assert report.baseline.index == 0
    assert report.eq21.index == 28


def test_compare_is_deterministic():
    criterion = SteadyStateCriterion.plateau(1.1e-4)
    a = compare_rates(fig2_config(0.25), criterion, 2000)
    b = compare_rates(fig2_config(0.25), criterion, 2000)
    assert a == b


def test_compare_indices_respect_horizon():
    report = compare_rates(fig2_config(0.25), SteadyStateCriterion.plateau(1.1e-4), 2000)
    for result in report.methods():
        if result.index is not None:
            assert 0 <= result.index <= 2000
    assert [m.method for m in report.methods()] == ["fal", "eq21", "eq21star", "baseline"]
    assert isinstance(report, ConvergenceReport)


def test_compare_validation():
    cfg = RateConfig.from_chi(chi=0.25, eta=2.0, nu=0.25, s_star=S_STAR, s0=2.0)
    with pytest.raises(InvalidConfig):
        compare_rates(cfg, SteadyStateCriterion.plateau(1e-4), 2000)  # s0 < s*
    with pytest.raises(InvalidConfig):
        compare_rates(fig2_config(0.25), SteadyStateCriterion.plateau(1e-4), 0)


# ---------------------------------------------------------------- sweep


def test_fal_count_sweep_known_orders():
    counts = fal_count_sweep(
        0.25,
        [0.25, 0.5],
        SteadyStateCriterion.plateau(1.1e-4),
        eta=2.0,
        s_star=S_STAR,
        s0=S0,
        max_iters=2000,
    )
    assert counts == {0.25: 795, 0.5: 569}


def test_fal_count_sweep_marks_unsettled_orders():
    counts = fal_count_sweep(
        1.75,
        [0.5, 1.75],
        SteadyStateCriterion.plateau(8.8e-4),
        eta=2.0,
        s_star=S_STAR,
        s0=S0,
        max_iters=2000,
    )
    assert counts[0.5] is None  # leaves the reals
    assert counts[1.75] == 39
