"""Steady-state detection and the head-to-head convergence comparison.

Ties together the actual FAL run, the two trajectory estimates, and the
integer-order steepest-descent baseline, measuring each against a
configurable steady-state criterion.  The published iteration counts do
not state their criterion, so both plausible readings (first passage
below a tolerance, plateau of the per-step change) are implemented and
calibrated thresholds are shipped as presets.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from ._backend import kernels
from .energy import EnergyNorm
from .errors import InvalidConfig
from .estimators import (
    BISECT_TOL_DEFAULT,
    RateConfig,
    estimate_eq21,
    integration_constant_C,
)
from .iteration import OVERFLOW_BOUND, FalParams, run_fal

__all__ = [
    "CriterionKind",
    "SteadyStateCriterion",
    "MethodResult",
    "ConvergenceReport",
    "first_passage_index",
    "plateau_index",
    "baseline_descent",
    "indeterminate_ratio_probe",
    "compare_rates",
    "fal_steady_index",
    "fal_count_sweep",
]

#: k values at which the indeterminate-form ratio is probed in reports.
PROBE_KS = (10, 50, 100, 200, 400)


class CriterionKind(enum.Enum):
    FIRST_PASSAGE = "first-passage"
    PLATEAU = "plateau"


@dataclass(frozen=True)
class SteadyStateCriterion:
    """A steady-state rule: first passage below tau, or a plateau below delta."""

    kind: CriterionKind
    threshold: float

    def __post_init__(self) -> None:
        if not isinstance(self.kind, CriterionKind):
            raise InvalidConfig(f"unknown criterion kind {self.kind!r}")
        if not (math.isfinite(self.threshold) and self.threshold > 0.0):
            raise InvalidConfig(
                f"criterion threshold must be positive and finite, got {self.threshold!r}"
            )

    @classmethod
    def first_passage(cls, tau: float) -> "SteadyStateCriterion":
        return cls(CriterionKind.FIRST_PASSAGE, tau)

    @classmethod
    def plateau(cls, delta: float) -> "SteadyStateCriterion":
        return cls(CriterionKind.PLATEAU, delta)

    @classmethod
    def parse(cls, text: str) -> "SteadyStateCriterion":
        """Parse ``first-passage:<tau>`` or ``plateau:<delta>``."""
        kind_text, sep, value_text = text.partition(":")
        if not sep:
            raise InvalidConfig(
                "criterion must look like 'first-passage:<tau>' or "
                f"'plateau:<delta>', got {text!r}"
            )
        try:
            kind = CriterionKind(kind_text.strip())
        except ValueError:
            raise InvalidConfig(f"unknown criterion kind {kind_text!r}") from None
        try:
            threshold = float(value_text)
        except ValueError:
            raise InvalidConfig(f"bad criterion threshold {value_text!r}") from None
        return cls(kind, threshold)

    def describe(self) -> str:
        return f"{self.kind.value}:{self.threshold:g}"

    def index_of(self, series: Iterable[float], s_star: float) -> Optional[int]:
        if self.kind is CriterionKind.FIRST_PASSAGE:
            return first_passage_index(series, s_star, self.threshold)
        return plateau_index(series, self.threshold)


def first_passage_index(
    series: Iterable[float], s_star: float, tau: float
) -> Optional[int]:
    """Smallest k with |series[k] - s*| <= tau, or None. Callers keep tau > 0."""
    for k, value in enumerate(series):
        if abs(value - s_star) <= tau:
            return k
    return None


def plateau_index(series: Iterable[float], delta: float) -> Optional[int]:
    """Smallest k >= 1 with |series[k] - series[k-1]| <= delta, or None."""
    prev = None
    for k, value in enumerate(series):
        if prev is not None and abs(value - prev) <= delta:
            return k
        prev = value
    return None


def _index_on_array(
    criterion: SteadyStateCriterion, values: np.ndarray, s_star: float
) -> Optional[int]:
    if criterion.kind is CriterionKind.FIRST_PASSAGE:
        hits = np.flatnonzero(np.abs(values - s_star) <= criterion.threshold)
        return int(hits[0]) if hits.size else None
    hits = np.flatnonzero(np.abs(np.diff(values)) <= criterion.threshold)
    return int(hits[0]) + 1 if hits.size else None


def baseline_descent(
    energy: EnergyNorm, mu: float, s0: float, max_iters: int
) -> np.ndarray:
    """Integer-order steepest descent s_{k+1} = s_k - mu * 2 eta (s_k - s*).

    Runs unconditionally; convergence needs 0 < 2 mu eta < 2 (the error
    contracts geometrically with ratio 1 - 2 mu eta), and callers flag
    the run as diverged otherwise.
    """
    out = np.empty(max_iters + 1, dtype=float)
    eta = energy.eta
    s_star = energy.s_star
    s = float(s0)
    out[0] = s
    for k in range(1, max_iters + 1):
        s = s - mu * (2.0 * eta * (s - s_star))
        out[k] = s
    return out


def indeterminate_ratio_probe(
    chi: float,
    s_star: float,
    s0: float,
    ks: Sequence[int],
) -> Tuple[Tuple[int, float], ...]:
    """Ratio (s_k - s*) / exp(-chi k) along the corrected trajectory.

    On the separated relation the ratio collapses to exp(C + s*/(s_k - s*)),
    which avoids overflow of exp(chi k) for large k; the ratio itself may
    still overflow, in which case it is reported as inf.
    """
    if not (s0 > s_star > 0.0):
        raise InvalidConfig(
            f"probe requires s0 > s_star > 0, got s0={s0}, s_star={s_star}"
        )
    c_const = integration_constant_C(s0, s_star)
    out = []
    for k in ks:
        k = int(k)
        if k < 0:
            raise InvalidConfig(f"probe k must be non-negative, got {k}")
        root = kernels.eq21star_solve(chi, c_const, s_star, s0, k, BISECT_TOL_DEFAULT)
        gap = root - s_star
        try:
            ratio = math.exp(c_const + s_star / gap)
        except OverflowError:
            ratio = math.inf
        out.append((k, ratio))
    return tuple(out)


@dataclass(frozen=True)
class MethodResult:
    """Per-method outcome: steady-state index (if any) and the value there.

    When no index exists, ``final_value`` is the last computed iterate
    and ``note`` says why the method did not settle.
    """

    method: str
    index: Optional[int]
    final_value: complex
    complexification_index: Optional[int] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class ConvergenceReport:
    """Config echo plus the four method outcomes and the ratio probe."""

    chi: float
    nu: float
    mu: float
    eta: float
    s_star: float
    s0: float
    criterion: SteadyStateCriterion
    max_iters: int
    fal: MethodResult
    eq21: MethodResult
    eq21_star: MethodResult
    baseline: MethodResult
    ratio_probe: Tuple[Tuple[int, float], ...]

    def methods(self) -> Tuple[MethodResult, ...]:
        return (self.fal, self.eq21, self.eq21_star, self.baseline)


def _kernel_kind(kind: CriterionKind) -> int:
    return (
        kernels.FIRST_PASSAGE if kind is CriterionKind.FIRST_PASSAGE else kernels.PLATEAU
    )


def fal_steady_index(
    params: FalParams,
    s0: float,
    criterion: SteadyStateCriterion,
    max_iters: int,
) -> Tuple[Optional[int], int, int, float]:
    """Criterion index of the real-mode FAL run, without storing iterates.

    Returns ``(index, kernel_code, k_exit, s_at_fire)``.  The index is
    reported only if the trajectory provably stays real: either the run
    is confined near s* with a contractive bound once the criterion
    fires, or it reaches ``max_iters`` on the real line.  A trajectory
    that leaves the positive reals gets no index, per the rule that a
    real criterion must not be evaluated on complex iterates.
    """
    if max_iters < 1:
        raise InvalidConfig(f"max_iters must be >= 1, got {max_iters}")
    idx, code, k_exit, s_fire = kernels.run_real_for_index(
        float(s0),
        params.coefficient,
        params.energy.s_star,
        params.nu.nu,
        int(max_iters),
        _kernel_kind(criterion.kind),
        criterion.threshold,
        OVERFLOW_BOUND,
    )
    return (idx if idx >= 0 else None, code, k_exit, s_fire)


def _fal_method_result(
    params: FalParams,
    s0: float,
    criterion: SteadyStateCriterion,
    max_iters: int,
) -> MethodResult:
    index, code, k_exit, s_fire = fal_steady_index(params, s0, criterion, max_iters)
    if code == kernels.NEED_COMPLEX:
        cplx = k_exit + 1
        traj = run_fal(params, s0, max_iters=cplx)
        return MethodResult("fal", None, traj.iterates[-1], cplx, "Complexified")
    if code == kernels.HIT_ZERO:
        return MethodResult("fal", None, 0.0 + 0.0j, None, "NumericalFailure")
    if code == kernels.DIVERGED:
        traj = run_fal(params, s0, max_iters=max(k_exit, 1))
        return MethodResult("fal", None, traj.iterates[-1], None, "Diverged")
    if index is not None:
        note = "SteadyState" if code == kernels.STEADY else "MaxIters"
        return MethodResult("fal", index, complex(s_fire, 0.0), None, note)
    traj = run_fal(params, s0, max_iters=max_iters)
    return MethodResult("fal", None, traj.iterates[-1], None, "MaxIters")


def compare_rates(
    cfg: RateConfig,
    criterion: SteadyStateCriterion,
    max_iters: int,
) -> ConvergenceReport:
    """Run FAL, both estimates, and the baseline under one criterion.

    The FAL run starts real at cfg.s0; if it ever leaves the positive
    reals it is reported with its complexification index and no
    steady-state index.  The baseline reuses the back-solved mu, so all
    four series answer to the same learning rate.
    """
    if not cfg.s0 > cfg.s_star:
        raise InvalidConfig(
            f"comparison requires s0 > s_star, got s0={cfg.s0}, s_star={cfg.s_star}"
        )
    if max_iters < 1:
        raise InvalidConfig(f"max_iters must be >= 1, got {max_iters}")
    chi = cfg.chi()
    energy = EnergyNorm(0.0, cfg.eta, cfg.s_star)
    params = FalParams(cfg.mu, energy, cfg.nu)

    fal = _fal_method_result(params, cfg.s0, criterion, max_iters)

    eq21_series = (estimate_eq21(chi, cfg.s_star, k) for k in range(max_iters + 1))
    eq21_idx = criterion.index_of(eq21_series, cfg.s_star)
    eq21_final = estimate_eq21(
        chi, cfg.s_star, eq21_idx if eq21_idx is not None else max_iters
    )
    eq21 = MethodResult(
        "eq21",
        eq21_idx,
        complex(eq21_final, 0.0),
        None,
        None if eq21_idx is not None else "MaxIters",
    )

    c_const = integration_constant_C(cfg.s0, cfg.s_star)

    def star_at(k: int) -> float:
        return kernels.eq21star_solve(
            chi, c_const, cfg.s_star, cfg.s0, k, BISECT_TOL_DEFAULT
        )

    star_series = (star_at(k) for k in range(max_iters + 1))
    star_idx = criterion.index_of(star_series, cfg.s_star)
    star_final = star_at(star_idx if star_idx is not None else max_iters)
    eq21_star = MethodResult(
        "eq21star",
        star_idx,
        complex(star_final, 0.0),
        None,
        None if star_idx is not None else "MaxIters",
    )

    base_values = baseline_descent(energy, cfg.mu, cfg.s0, max_iters)
    base_idx = _index_on_array(criterion, base_values, cfg.s_star)
    base_final = base_values[base_idx if base_idx is not None else -1]
    base_note = None
    if abs(1.0 - 2.0 * cfg.mu * cfg.eta) >= 1.0 and cfg.s0 != cfg.s_star:
        base_note = "Diverged"
    elif base_idx is None:
        base_note = "MaxIters"
    baseline = MethodResult(
        "baseline", base_idx, complex(float(base_final), 0.0), None, base_note
    )

    probe = indeterminate_ratio_probe(chi, cfg.s_star, cfg.s0, PROBE_KS)
    return ConvergenceReport(
        chi=chi,
        nu=cfg.nu.nu,
        mu=cfg.mu,
        eta=cfg.eta,
        s_star=cfg.s_star,
        s0=cfg.s0,
        criterion=criterion,
        max_iters=max_iters,
        fal=fal,
        eq21=eq21,
        eq21_star=eq21_star,
        baseline=baseline,
        ratio_probe=probe,
    )


def fal_count_sweep(
    chi: float,
    nu_values: Iterable[float],
    criterion: SteadyStateCriterion,
    *,
    eta: float,
    s_star: float,
    s0: float,
    max_iters: int,
) -> "dict[float, Optional[int]]":
    """FAL steady-state index per nu, mu back-solved from chi each time.

    Used to hunt for the undisclosed order behind the published actual
    iteration counts; None marks orders whose run never settles (leaves
    the reals, diverges, or outlasts ``max_iters``).
    """
    out: "dict[float, Optional[int]]" = {}
    for nu in nu_values:
        nu = float(nu)
        cfg = RateConfig.from_chi(chi, eta, nu, s_star, s0)
        energy = EnergyNorm(0.0, eta, s_star)
        params = FalParams(cfg.mu, energy, cfg.nu)
        index, _code, _k_exit, _s_fire = fal_steady_index(
            params, s0, criterion, max_iters
        )
        out[nu] = index
    return out
