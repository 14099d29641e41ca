"""Tests for the rate constant and the two trajectory estimates."""

import math

import pytest

from falaudit import (
    DegenerateInput,
    InvalidConfig,
    RateConfig,
    estimate_eq21,
    estimate_eq21_corrected,
    implicit_residual,
    integration_constant_C,
    rate_constant_chi,
)
from falaudit.estimators import BISECT_TOL_DEFAULT

# the Fig. 2 configuration: s* = 4.2856, s0 = 15, eta = 2
S_STAR = 4.2856
S0 = 15.0


def fig2_config(chi, nu=0.5):
    return RateConfig.from_chi(chi=chi, eta=2.0, nu=nu, s_star=S_STAR, s0=S0)


# ---------------------------------------------------------------- RateConfig


def test_chi_round_trip_through_mu():
    cfg = fig2_config(0.25)
    assert cfg.mu == pytest.approx(0.02006690546576245, rel=1e-15)
    assert cfg.chi() == pytest.approx(0.25, rel=1e-12)
    assert rate_constant_chi(cfg) == cfg.chi()


def test_chi_round_trip_other_orders():
    for chi in (0.25, 1.75):
        for nu in (0.25, 0.5, 1.5, 1.95):
            cfg = fig2_config(chi, nu)
            assert cfg.chi() == pytest.approx(chi, rel=1e-12)


def test_chi_near_order_two_limit():
    # chi -> 2 mu eta / (Gamma(1) * 2) = mu eta / 2 ... here 0.5
    cfg = RateConfig(mu=0.5, eta=1.0, nu=2.0 - 1e-9, s_star=1.0, s0=2.0)
    assert cfg.chi() == pytest.approx(0.5, abs=1e-6)


def test_config_validation():
    good = dict(mu=0.02, eta=2.0, nu=0.5, s_star=S_STAR, s0=S0)
    RateConfig(**good)
    for bad in (
        dict(good, mu=0.0),
        dict(good, mu=-1.0),
        dict(good, eta=0.0),
        dict(good, s_star=0.0),
        dict(good, s_star=-2.0),
        dict(good, s0=S_STAR),
        dict(good, nu=1.0),
        dict(good, nu=2.0),
        dict(good, nu=3.0),
        dict(good, nu=0.0),  # chi degenerates: nu divides the denominator
        dict(good, nu=3.5),  # Gamma(-0.5) < 0 makes chi negative
    ):
        with pytest.raises(InvalidConfig):
            RateConfig(**bad)


def test_from_chi_rejects_bad_chi():
    with pytest.raises(InvalidConfig):
        RateConfig.from_chi(chi=0.0, eta=2.0, nu=0.5, s_star=S_STAR, s0=S0)
    with pytest.raises(InvalidConfig):
        RateConfig.from_chi(chi=-0.25, eta=2.0, nu=0.5, s_star=S_STAR, s0=S0)


# ---------------------------------------------------------------- C


def test_integration_constant_unit_gap_is_minus_s_star():
    assert integration_constant_C(S_STAR + 1.0, S_STAR) == -S_STAR


def test_integration_constant_fig2_value():
    assert integration_constant_C(S0, S_STAR) == pytest.approx(
        1.9716035642648215, rel=1e-15
    )


def test_integration_constant_negative_gap():
    # s0 = 0, s* = 5: ln(5) + 1
    assert integration_constant_C(0.0, 5.0) == pytest.approx(
        2.6094379124341005, rel=1e-15
    )


def test_integration_constant_degenerate():
    with pytest.raises(DegenerateInput):
        integration_constant_C(S_STAR, S_STAR)


# ------------------------------------------------------------ estimate_eq21


def test_eq21_at_zero():
    assert estimate_eq21(0.25, S_STAR, 0) == S_STAR + 1.0


def test_eq21_exactness():
    """The estimate minus s* reproduces exp(-chi k) to floating precision."""
    for k in range(0, 31):
        gap = estimate_eq21(0.25, S_STAR, k) - S_STAR
        assert gap == pytest.approx(math.exp(-0.25 * k), rel=1e-12)


def test_eq21_underflows_to_s_star():
    assert estimate_eq21(1.75, S_STAR, 10**6) == S_STAR


# ---------------------------------------------------------------- residual


def test_residual_zero_at_the_anchor():
    C = integration_constant_C(S0, S_STAR)
    assert implicit_residual(S0, 0, 0.25, C, S_STAR) == 0.0


def test_residual_zero_for_unit_gap_anchor():
    assert implicit_residual(S_STAR + 1.0, 0, 0.25, -S_STAR, S_STAR) == 0.0


def test_residual_small_near_published_crossing():
    """4.329 is the k=414 root (4.3291552...) rounded to three decimals.
    The left side is steep near the root (slope ~ s*/gap^2 ~ 2.3e3), so
    even that rounding leaves a residual of ~0.36 -- still tiny against
    the ~chi*k = 103.5 swing the relation covers by k=414."""
    C = integration_constant_C(S0, S_STAR)
    assert abs(implicit_residual(4.329, 414, 0.25, C, S_STAR)) < 0.5
    root = estimate_eq21_corrected(0.25, S_STAR, S0, 414)
    assert abs(implicit_residual(root, 414, 0.25, C, S_STAR)) <= BISECT_TOL_DEFAULT


def test_residual_degenerate():
    with pytest.raises(DegenerateInput):
        implicit_residual(S_STAR, 10, 0.25, 1.0, S_STAR)


# -------------------------------------------------- estimate_eq21_corrected


def test_corrected_at_zero_returns_s0():
    assert estimate_eq21_corrected(0.25, S_STAR, S0, 0) == S0


def test_corrected_known_gaps():
    root = estimate_eq21_corrected(0.25, S_STAR, S0, 414)
    assert root - S_STAR == pytest.approx(0.04355520460863094, rel=1e-9)
    root = estimate_eq21_corrected(1.75, S_STAR, S0, 56)
    assert root - S_STAR == pytest.approx(0.04610572599249796, rel=1e-9)


def test_corrected_roots_satisfy_the_relation():
    """Every returned root drives the implicit residual below tol."""
    C = integration_constant_C(S0, S_STAR)
    for chi in (0.25, 1.75):
        for k in range(0, 421, 42):
            root = estimate_eq21_corrected(chi, S_STAR, S0, k)
            assert abs(implicit_residual(root, k, chi, C, S_STAR)) <= BISECT_TOL_DEFAULT


def test_corrected_strictly_decreasing_and_bounded():
    values = [estimate_eq21_corrected(0.25, S_STAR, S0, k) for k in range(0, 1001)]
    for a, b in zip(values, values[1:]):
        assert b < a
    assert all(v > S_STAR for v in values)


def test_corrected_dominates_eq21_in_the_tail():
    """The kept s*/(s - s*) term slows the corrected estimate down, so it
    sits above the plain exponential once the transient has passed."""
    for chi in (0.25, 1.75):
        for k in range(50, 1001, 50):
            corrected = estimate_eq21_corrected(chi, S_STAR, S0, k)
            plain = estimate_eq21(chi, S_STAR, k)
            assert corrected >= plain - 1e-12


def test_corrected_validation():
    with pytest.raises(InvalidConfig):
        estimate_eq21_corrected(0.25, S_STAR, S_STAR, 10)  # s0 == s*
    with pytest.raises(InvalidConfig):
        estimate_eq21_corrected(0.25, S_STAR, 4.0, 10)  # s0 < s*
    with pytest.raises(InvalidConfig):
        estimate_eq21_corrected(0.25, -1.0, S0, 10)
    with pytest.raises(InvalidConfig):
        estimate_eq21_corrected(0.0, S_STAR, S0, 10)
    with pytest.raises(InvalidConfig):
        estimate_eq21_corrected(0.25, S_STAR, S0, -1)
    with pytest.raises(InvalidConfig):
        estimate_eq21_corrected(0.25, S_STAR, S0, 10, tol=0.0)
