"""The FAL update rule iterated over complex arithmetic.

The update (valid for nu not in {1, 2, 3}) is

    s_{k+1} = s_k - (2 mu eta / Gamma(3 - nu)) (s_k - s*)^2 s_k^-nu .

A real positive start stays in exact real arithmetic until an iterate
turns negative; from there the principal-branch power makes the next
iterate complex, which is the complexification event this module detects.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ._backend import kernels
from .energy import EnergyNorm
from .errors import InvalidConfig, SingularInput
from .fractional import FractionalOrder, as_order, complex_pow, gamma

#: default guards for run_fal
OVERFLOW_BOUND = 1e12
IMAG_TOL = 1e-12
MAX_ITERS_DEFAULT = 10**6


class Termination(enum.Enum):
    MAX_ITERS = "MaxIters"
    DIVERGED = "Diverged"
    STEADY_STATE = "SteadyState"
    NUMERICAL_FAILURE = "NumericalFailure"


@dataclass(frozen=True)
class FalParams:
    """Step size, energy norm and fractional order of one FAL run."""

    mu: float
    energy: EnergyNorm
    nu: FractionalOrder

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mu) and self.mu > 0.0):
            raise InvalidConfig(f"mu must be positive, got {self.mu!r}")
        object.__setattr__(self, "mu", float(self.mu))
        object.__setattr__(self, "nu", as_order(self.nu))
        if not self.nu.fal_valid:
            raise InvalidConfig(
                f"the FAL update is undefined for nu={self.nu.nu} (nu in {{1, 2, 3}})"
            )

    @property
    def coefficient(self) -> float:
        """The update coefficient 2 mu eta / Gamma(3 - nu)."""
        return 2.0 * self.mu * self.energy.eta / gamma(3.0 - self.nu.nu)


@dataclass
class Trajectory:
    """Recorded FAL iterates (complex128), in iteration order.

    ``complexification_index`` is the first k with |Im s_k| > the imag_tol
    the run was performed with, or None if every iterate stayed real.
    """

    iterates: np.ndarray
    complexification_index: Optional[int]
    termination: Termination

    def __post_init__(self) -> None:
        if len(self.iterates) == 0:
            raise InvalidConfig("a trajectory must contain at least the starting iterate")


def fal_step(params: FalParams, s_k: complex | float) -> complex:
    """One application of the FAL update; exact real arithmetic for real
    positive ``s_k``.

    Raises
    ------
    SingularInput
        If ``s_k`` is 0, where s^-nu is undefined.
    """
    z = complex(s_k)
    if z == 0:
        raise SingularInput("the FAL update is singular at s_k = 0")
    c = params.coefficient
    s_star = params.energy.s_star
    nu = params.nu.nu
    if z.imag == 0.0 and z.real > 0.0:
        s = z.real
        d = s - s_star
        return complex(s - c * d * d * math.pow(s, -nu), 0.0)
    d = z - s_star
    return z - c * (d * d * complex_pow(z, -nu))


def detect_complexification(traj: Trajectory, imag_tol: float = IMAG_TOL) -> Optional[int]:
    """Smallest k with |Im s_k| > imag_tol, or None."""
    hits = np.flatnonzero(np.abs(traj.iterates.imag) > imag_tol)
    return int(hits[0]) if hits.size else None


def run_fal(
    params: FalParams,
    s0: complex | float,
    max_iters: int = MAX_ITERS_DEFAULT,
    *,
    overflow_bound: float = OVERFLOW_BOUND,
    imag_tol: float = IMAG_TOL,
    steady: Callable[[int, complex, complex], bool] | None = None,
) -> Trajectory:
    """Iterate the FAL update from ``s0``, recording the full trajectory.

    The run stops at ``max_iters``, on divergence (|s_k| beyond
    ``overflow_bound`` or non-finite), on an iterate landing exactly on
    the s=0 singularity (NumericalFailure), or when the externally
    supplied ``steady`` predicate fires.  The predicate receives
    ``(k, s_prev, s_k)`` for each new iterate; steady-state detection
    policy lives in :mod:`falaudit.analysis`, not here.

    Raises
    ------
    SingularInput
        If ``s0`` is 0.
    InvalidConfig
        If ``max_iters`` < 1.
    """
    z0 = complex(s0)
    if z0 == 0:
        raise SingularInput("run_fal requires s0 != 0")
    if max_iters < 1:
        raise InvalidConfig(f"max_iters must be >= 1, got {max_iters}")
    if not (math.isfinite(z0.real) and math.isfinite(z0.imag)):
        raise InvalidConfig(f"s0 must be finite, got {z0!r}")

    if steady is not None:
        return _run_with_predicate(params, z0, max_iters, overflow_bound, imag_tol, steady)

    c = params.coefficient
    s_star = params.energy.s_star
    nu = params.nu.nu
    re = np.empty(max_iters + 1)
    im = np.empty(max_iters + 1)

    if abs(z0) > overflow_bound:
        re[0], im[0] = z0.real, z0.imag
        return _assemble(re, im, 1, Termination.DIVERGED, imag_tol)

    if z0.imag == 0.0 and z0.real > 0.0:
        n, code = kernels.run_real_record(z0.real, c, s_star, nu, max_iters, overflow_bound, re)
        im[:n] = 0.0
        if code == kernels.NEED_COMPLEX:
            # the stored negative iterate seeds the complex continuation
            remaining = max_iters - (n - 1)
            m, code = kernels.run_complex_record(
                re[n - 1], 0.0, c, s_star, nu, remaining, overflow_bound, re[n:], im[n:]
            )
            n += m
    else:
        re[0], im[0] = z0.real, z0.imag
        n, code = 1, kernels.DONE
        if max_iters > 0:
            m, code = kernels.run_complex_record(
                z0.real, z0.imag, c, s_star, nu, max_iters, overflow_bound, re[1:], im[1:]
            )
            n += m

    termination = {
        kernels.DONE: Termination.MAX_ITERS,
        kernels.HIT_ZERO: Termination.NUMERICAL_FAILURE,
        kernels.DIVERGED: Termination.DIVERGED,
    }[code]
    return _assemble(re, im, n, termination, imag_tol)


def _assemble(re, im, n, termination, imag_tol):
    iterates = np.empty(n, dtype=complex)
    iterates.real = re[:n]
    iterates.imag = im[:n]
    traj = Trajectory(iterates, None, termination)
    traj.complexification_index = detect_complexification(traj, imag_tol)
    return traj


def _run_with_predicate(params, z0, max_iters, overflow_bound, imag_tol, steady):
    """Generic-predicate path: plain Python loop over fal_step (which is
    bit-identical to the kernels)."""
    values = [z0]
    termination = Termination.MAX_ITERS
    s = z0
    for k in range(1, max_iters + 1):
        if s == 0:
            termination = Termination.NUMERICAL_FAILURE
            break
        s_next = fal_step(params, s)
        values.append(s_next)
        if not (math.isfinite(s_next.real) and math.isfinite(s_next.imag)) or abs(
            s_next
        ) > overflow_bound:
            termination = Termination.DIVERGED
            break
        if steady(k, s, s_next):
            termination = Termination.STEADY_STATE
            break
        s = s_next
    iterates = np.array(values, dtype=complex)
    traj = Trajectory(iterates, None, termination)
    traj.complexification_index = detect_complexification(traj, imag_tol)
    return traj
