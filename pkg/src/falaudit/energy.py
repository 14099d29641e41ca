"""Quadratic energy norm E(s) = E_min + eta (s - s*)^2 and its gradients.

The fractional gradient is the order-nu left Riemann-Liouville derivative
of E, computed from the three-term expansion E(s) = c0 + c1 s + c2 s^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidConfig, SingularInput
from .fractional import FractionalOrder, as_order, rl_derivative_power


@dataclass(frozen=True)
class EnergyNorm:
    """The quadratic energy with minimum ``e_min`` attained at ``s_star``.

    The expansion coefficients over the powers {0, 1, 2} are stored
    alongside the defining parameters so the three-term derivative
    expansion stays auditable:
    ``c0 = e_min + eta s*^2``, ``c1 = -2 eta s*``, ``c2 = eta``.
    """

    e_min: float
    eta: float
    s_star: float
    c0: float = field(init=False)
    c1: float = field(init=False)
    c2: float = field(init=False)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.eta) and self.eta > 0.0):
            raise InvalidConfig(f"eta must be positive, got {self.eta!r}")
        object.__setattr__(self, "e_min", float(self.e_min))
        object.__setattr__(self, "eta", float(self.eta))
        object.__setattr__(self, "s_star", float(self.s_star))
        object.__setattr__(self, "c0", self.e_min + self.eta * self.s_star * self.s_star)
        object.__setattr__(self, "c1", -2.0 * self.eta * self.s_star)
        object.__setattr__(self, "c2", self.eta)


def evaluate(energy: EnergyNorm, s: float) -> float:
    """E(s) = e_min + eta (s - s*)^2."""
    d = s - energy.s_star
    return energy.e_min + energy.eta * d * d


def classical_gradient(energy: EnergyNorm, s: float) -> float:
    """dE/ds = 2 eta (s - s*)."""
    return 2.0 * energy.eta * (s - energy.s_star)


def fractional_gradient(
    energy: EnergyNorm, nu: FractionalOrder | float, s: complex | float
) -> complex:
    """Order-nu RL derivative of the energy norm at ``s``.

    Computed as ``c0 D^nu s^0 + c1 D^nu s^1 + c2 D^nu s^2``.  For nu = 0
    this is E(s) itself (returned exactly); for nu = 1 it reproduces the
    classical gradient.

    Raises
    ------
    SingularInput
        At s = 0 with nu > 0, where the s^-nu terms blow up.
    """
    order = as_order(nu)
    z = complex(s)
    if order.nu == 0.0:
        if z.imag == 0.0:
            return complex(evaluate(energy, z.real), 0.0)
        d = z - energy.s_star
        return energy.e_min + energy.eta * d * d
    if z == 0:
        raise SingularInput("the fractional gradient is singular at s=0 for nu > 0")
    return (
        energy.c0 * rl_derivative_power(0.0, order, s)
        + energy.c1 * rl_derivative_power(1.0, order, s)
        + energy.c2 * rl_derivative_power(2.0, order, s)
    )


@dataclass(frozen=True)
class CurveSample:
    """One sampled point of a gradient curve; ``value`` is None when the
    grid point sits on the s=0 singularity."""

    s: float
    value: complex | None
    singular: bool


def sample_gradient_curve(
    energy: EnergyNorm,
    nu: FractionalOrder | float,
    domain: tuple[float, float, int],
) -> list[CurveSample]:
    """Sample the order-nu gradient on an evenly spaced grid.

    Parameters
    ----------
    energy : EnergyNorm
    nu : FractionalOrder or float
    domain : (lo, hi, n_points)
        Inclusive endpoints, ``n_points >= 2``.  A grid point landing
        exactly on 0 (with nu > 0) is recorded as singular, not an error.
    """
    lo, hi, n_points = float(domain[0]), float(domain[1]), int(domain[2])
    if not lo < hi:
        raise InvalidConfig(f"domain needs lo < hi, got ({lo!r}, {hi!r})")
    if n_points < 2:
        raise InvalidConfig(f"domain needs n_points >= 2, got {n_points}")
    order = as_order(nu)
    samples = []
    last = n_points - 1
    for i in range(n_points):
        # convex combination hits the endpoints (and any 0 crossing shared
        # with them, e.g. -4..8 with 121 points) exactly
        s = (lo * (last - i) + hi * i) / last
        if order.nu > 0.0 and s == 0.0:
            samples.append(CurveSample(s, None, True))
        else:
            samples.append(CurveSample(s, fractional_gradient(energy, order, s), False))
    return samples
