"""Tests for the FAL update map and trajectory runner."""

import math

import numpy as np
import pytest

from falaudit import (
    EnergyNorm,
    FalParams,
    InvalidConfig,
    RateConfig,
    SingularInput,
    Termination,
    Trajectory,
    detect_complexification,
    fal_step,
    run_fal,
)

ENERGY = EnergyNorm(e_min=10.0, eta=2.0, s_star=5.0)


def params(mu=0.01, nu=0.5, energy=ENERGY):
    return FalParams(mu=mu, nu=nu, energy=energy)


# ---------------------------------------------------------------- parameters


def test_params_validation():
    with pytest.raises(InvalidConfig):
        params(mu=0.0)
    with pytest.raises(InvalidConfig):
        params(mu=-0.1)
    for bad_nu in (1.0, 2.0, 3.0):
        with pytest.raises(InvalidConfig):
            params(nu=bad_nu)


def test_params_coefficient():
    # 2 mu eta / Gamma(3 - nu) with mu=0.01, eta=2, nu=0.5
    want = 0.04 / math.gamma(2.5)
    assert params().coefficient == pytest.approx(want, rel=1e-12)


# ---------------------------------------------------------------- single step


def test_step_fixed_point_is_exact():
    p = params()
    assert fal_step(p, 5.0) == complex(5.0, 0.0)
    assert fal_step(p, complex(5.0, 0.0)) == complex(5.0, 0.0)


def test_step_known_value():
    got = fal_step(params(), 6.0)
    assert got.real == pytest.approx(5.987715763574353, rel=1e-15)
    assert got.imag == 0.0


def test_step_negative_iterate_complexifies():
    got = fal_step(params(), -0.25)
    assert abs(got.imag) > 1e-9


def test_step_singular_at_zero():
    with pytest.raises(SingularInput):
        fal_step(params(), 0.0)


# ---------------------------------------------------------------- trajectories


def test_run_from_fixed_point_is_constant():
    traj = run_fal(params(), 5.0, max_iters=20)
    assert len(traj.iterates) == 21
    assert np.all(traj.iterates == complex(5.0, 0.0))
    assert traj.complexification_index is None
    assert traj.termination is Termination.MAX_ITERS


def test_run_monotone_decreasing_from_above():
    cfg = RateConfig.from_chi(chi=0.25, eta=2.0, nu=0.5, s_star=4.2856, s0=15.0)
    p = FalParams(mu=cfg.mu, nu=0.5, energy=EnergyNorm(0.0, 2.0, 4.2856))
    traj = run_fal(p, 15.0, max_iters=2000)
    assert traj.complexification_index is None
    re = traj.iterates.real
    assert np.all(np.diff(re) < 0.0)
    assert re[-1] > 4.2856
    assert re[-1] < 4.40


def test_run_matches_single_steps():
    p = params()
    traj = run_fal(p, 6.0, max_iters=50)
    s = complex(6.0, 0.0)
    for k in range(1, 51):
        s = fal_step(p, s)
        assert traj.iterates[k] == s


def test_run_determinism_is_bitwise():
    p = params(mu=0.05, nu=1.5)
    a = run_fal(p, -0.25, max_iters=200)
    b = run_fal(p, -0.25, max_iters=200)
    assert np.array_equal(a.iterates.view(np.float64), b.iterates.view(np.float64))
    assert a.termination == b.termination
    assert a.complexification_index == b.complexification_index


def test_negative_start_complexifies_immediately():
    for nu in (0.5, 1.5):
        traj = run_fal(params(nu=nu), -0.25, max_iters=50)
        assert traj.complexification_index == 1


def test_complexification_is_permanent():
    """Once the imaginary part exceeds 1e-9 it never returns below 1e-12."""
    traj = run_fal(params(), -0.25, max_iters=100)
    im = np.abs(traj.iterates.imag)
    fired = np.nonzero(im > 1e-9)[0]
    assert fired.size > 0
    assert np.all(im[fired[0]:] > 1e-12)


def test_divergence_terminates():
    # classical limit nu=0 towards s*=0: 2 mu eta = 3 > 2 diverges from s0=2
    p = FalParams(mu=1.5, nu=0.0, energy=EnergyNorm(1.0, 1.0, 0.0))
    traj = run_fal(p, 2.0, max_iters=1000)
    assert traj.termination is Termination.DIVERGED
    assert len(traj.iterates) < 1000
    assert np.all(traj.iterates.imag == 0.0)


def test_oversized_start_diverges_immediately():
    traj = run_fal(params(), 1e13, max_iters=10)
    assert traj.termination is Termination.DIVERGED
    assert len(traj.iterates) == 1


def test_exact_zero_is_numerical_failure():
    # c = 2*0.25*2/Gamma(3) = 0.5, s* = 0: s1 = 2 - 0.5*4 = 0 exactly
    p = FalParams(mu=0.25, nu=0.0, energy=EnergyNorm(1.0, 2.0, 0.0))
    traj = run_fal(p, 2.0, max_iters=10)
    assert traj.termination is Termination.NUMERICAL_FAILURE
    assert list(traj.iterates) == [complex(2.0, 0.0), complex(0.0, 0.0)]


def test_steady_predicate_stops_early():
    p = params()
    full = run_fal(p, 6.0, max_iters=500)
    stopped = run_fal(
        p, 6.0, max_iters=500, steady=lambda k, prev, new: abs(new - prev) < 1e-3
    )
    assert stopped.termination is Termination.STEADY_STATE
    assert len(stopped.iterates) < len(full.iterates)
    n = len(stopped.iterates)
    assert np.array_equal(stopped.iterates, full.iterates[:n])


def test_run_validation():
    with pytest.raises(InvalidConfig):
        run_fal(params(), 6.0, max_iters=0)
    with pytest.raises(SingularInput):
        run_fal(params(), 0.0, max_iters=10)


# ---------------------------------------------------------------- detection


def test_detect_complexification_example():
    iterates = np.array([6.0, 5.9, 5.8, complex(5.7, 1e-6), complex(5.6, 2e-6)])
    traj = Trajectory(
        iterates=iterates,
        complexification_index=None,
        termination=Termination.MAX_ITERS,
    )
    assert detect_complexification(traj) == 3


def test_detect_complexification_all_real():
    traj = Trajectory(
        iterates=np.array([6.0, 5.9, 5.8], dtype=complex),
        complexification_index=None,
        termination=Termination.MAX_ITERS,
    )
    assert detect_complexification(traj) is None


def test_detect_ignores_sub_threshold_noise():
    iterates = np.array([complex(6.0, 1e-13), complex(5.9, 1e-12)])
    traj = Trajectory(
        iterates=iterates,
        complexification_index=None,
        termination=Termination.MAX_ITERS,
    )
    assert detect_complexification(traj) is None


def test_trajectory_must_be_nonempty():
    with pytest.raises(InvalidConfig):
        Trajectory(
            iterates=np.array([], dtype=complex),
            complexification_index=None,
            termination=Termination.MAX_ITERS,
        )
