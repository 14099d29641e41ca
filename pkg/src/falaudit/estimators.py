"""Closed-form and implicit estimates of the FAL trajectory.

The continuous surrogate of the FAL recursion separates into
``ln|s - s*| - s*/(s - s*) = -chi*k + C``.  Dropping the ``s*/(s - s*)``
term gives the exponential estimate ``s_k = s* + exp(-chi*k)``
(`estimate_eq21`); keeping it and solving the implicit relation by
bisection gives the corrected estimate (`estimate_eq21_corrected`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import BracketError, DegenerateInput, InvalidConfig, PoleError
from .fractional import FractionalOrder, as_order, gamma

__all__ = [
    "RateConfig",
    "rate_constant_chi",
    "integration_constant_C",
    "estimate_eq21",
    "implicit_residual",
    "estimate_eq21_corrected",
]

#: Default residual tolerance for the bisection solve.
BISECT_TOL_DEFAULT = 1e-10


@dataclass(frozen=True)
class RateConfig:
    """Inputs of the rate constant chi and the integration constant C.

    The derivation assumes the positive branch ``s* > 0`` and needs
    ``s0 != s*`` for C to be finite.  Orders 1, 2 and 3 are rejected:
    the update rule the estimates approximate is undefined there.
    """

    mu: float
    eta: float
    nu: FractionalOrder
    s_star: float
    s0: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "nu", as_order(self.nu))
        if not (math.isfinite(self.mu) and self.mu > 0.0):
            raise InvalidConfig(f"mu must be positive and finite, got {self.mu}")
        if not (math.isfinite(self.eta) and self.eta > 0.0):
            raise InvalidConfig(f"eta must be positive and finite, got {self.eta}")
        if not (math.isfinite(self.s_star) and self.s_star > 0.0):
            raise InvalidConfig(
                f"s_star must be positive and finite, got {self.s_star}"
            )
        if not math.isfinite(self.s0):
            raise InvalidConfig(f"s0 must be finite, got {self.s0}")
        if self.s0 == self.s_star:
            raise InvalidConfig("s0 must differ from s_star (C would be infinite)")
        if not self.nu.fal_valid:
            raise InvalidConfig(
                f"nu={self.nu.nu} is an excluded integer order (1, 2 or 3)"
            )
        self.chi()  # raises InvalidConfig if chi is undefined or non-positive

    def chi(self) -> float:
        """Rate constant chi = 2*mu*eta / (Gamma(3-nu) * nu * s*^(nu-1))."""
        nu = self.nu.nu
        try:
            g = gamma(3.0 - nu)
        except PoleError as exc:
            raise InvalidConfig(f"chi is undefined at nu={nu}: {exc}") from exc
        denom = g * nu * math.pow(self.s_star, nu - 1.0)
        if denom == 0.0:
            raise InvalidConfig(f"chi is undefined at nu={nu}")
        value = 2.0 * self.mu * self.eta / denom
        if not (math.isfinite(value) and value > 0.0):
            raise InvalidConfig(f"chi must be positive and finite, got {value}")
        return value

    @classmethod
    def from_chi(
        cls,
        chi: float,
        eta: float,
        nu: FractionalOrder | float,
        s_star: float,
        s0: float,
    ) -> "RateConfig":
        """Back-solve mu so the configuration's rate constant equals ``chi``."""
        if not (math.isfinite(chi) and chi > 0.0):
            raise InvalidConfig(f"chi must be positive and finite, got {chi}")
        if not (math.isfinite(eta) and eta > 0.0):
            raise InvalidConfig(f"eta must be positive and finite, got {eta}")
        if not (math.isfinite(s_star) and s_star > 0.0):
            raise InvalidConfig(f"s_star must be positive and finite, got {s_star}")
        order = as_order(nu)
        try:
            g = gamma(3.0 - order.nu)
        except PoleError as exc:
            raise InvalidConfig(
                f"chi is undefined at nu={order.nu}: {exc}"
            ) from exc
        mu = chi * g * order.nu * math.pow(s_star, order.nu - 1.0) / (2.0 * eta)
        return cls(mu=mu, eta=eta, nu=order, s_star=s_star, s0=s0)


def rate_constant_chi(cfg: RateConfig) -> float:
    """Rate of the exponential estimate; positive by construction."""
    return cfg.chi()


def integration_constant_C(s0: float, s_star: float) -> float:
    """Constant fixing the separated relation at k=0.

    C = ln|s0 - s*| - s*/(s0 - s*).  Infinite at s0 = s*, which raises
    `DegenerateInput`.
    """
    if s0 == s_star:
        raise DegenerateInput("integration constant is infinite at s0 = s_star")
    gap = s0 - s_star
    return math.log(abs(gap)) - s_star / gap


def estimate_eq21(chi: float, s_star: float, k: int) -> float:
    """Exponential estimate s_k = s* + exp(-chi*k).

    Callers guarantee chi > 0 and k >= 0; the exponential underflows
    gracefully to s* for large chi*k.
    """
    return s_star + math.exp(-chi * k)


def implicit_residual(s: float, k: float, chi: float, C: float, s_star: float) -> float:
    """Signed residual of the separated relation at (s, k).

    residual = ln|s - s*| - s*/(s - s*) - (-chi*k + C)
    """
    if s == s_star:
        raise DegenerateInput("residual is undefined at s = s_star")
    gap = s - s_star
    return math.log(abs(gap)) - s_star / gap - (C - chi * k)


def estimate_eq21_corrected(
    chi: float,
    s_star: float,
    s0: float,
    k: int,
    tol: float = BISECT_TOL_DEFAULT,
) -> float:
    """Corrected estimate: the root of the separated relation at step k.

    The left side ln(s - s*) - s*/(s - s*) is strictly increasing on
    (s*, inf), so the root in (s*, s0] is unique and a bisection bracket
    [s* + 1e-12*max(1, s*), s0] is guaranteed to enclose it.  Bisection
    stops once the residual magnitude drops below ``tol`` (at most 200
    halvings; the interval collapses to machine precision well before
    that, so very flat brackets can return with a residual above ``tol``
    but a root accurate to the last representable digit).

    Raises `BracketError` if the residual does not change sign over the
    bracket, which cannot happen while s0 > s* > 0 and chi > 0 hold.
    """
    if not (s0 > s_star > 0.0):
        raise InvalidConfig(
            f"monotone branch requires s0 > s_star > 0, got s0={s0}, s_star={s_star}"
        )
    if not (math.isfinite(chi) and chi > 0.0):
        raise InvalidConfig(f"chi must be positive and finite, got {chi}")
    if not tol > 0.0:
        raise InvalidConfig(f"tol must be positive, got {tol}")
    if k < 0:
        raise InvalidConfig(f"k must be non-negative, got {k}")
    c_const = integration_constant_C(s0, s_star)
    root = kernels.eq21star_solve(chi, c_const, s_star, s0, k, tol)
    if math.isnan(root):
        raise BracketError(
            f"no sign change on ({s_star}, {s0}] at k={k}; bracket does not enclose a root"
        )
    return root
