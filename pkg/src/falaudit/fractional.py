"""Special-function kernel: gamma, principal-branch complex powers, and
left Riemann-Liouville derivatives of power functions (lower terminal 0).

Complex values are represented by the builtin :class:`complex`; the alias
``ComplexScalar`` is exported so signatures read like the domain model.
A Grunwald-Letnikov oracle is provided for validating the closed forms on
the positive axis.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidConfig, PoleError, SingularInput

ComplexScalar = complex

#: tolerance used when deciding whether a real number is an integer
INTEGER_TOL = 1e-12


@dataclass(frozen=True)
class FractionalOrder:
    """A differentiation order nu >= 0.

    The FAL update rule is undefined for nu in {1, 2, 3}; ``fal_valid``
    reports whether this order is usable there.
    """

    nu: float

    def __post_init__(self) -> None:
        nu = float(self.nu)
        if not math.isfinite(nu) or nu < 0.0:
            raise InvalidConfig(f"fractional order must be finite and >= 0, got {self.nu!r}")
        object.__setattr__(self, "nu", nu)

    @property
    def fal_valid(self) -> bool:
        """True iff nu is not 1, 2 or 3 (within 1e-12)."""
        return all(abs(self.nu - q) > INTEGER_TOL for q in (1.0, 2.0, 3.0))


def as_order(nu: FractionalOrder | float) -> FractionalOrder:
    """Coerce a bare float to a validated :class:`FractionalOrder`."""
    if isinstance(nu, FractionalOrder):
        return nu
    return FractionalOrder(float(nu))


def _is_nonpositive_integer(x: float) -> bool:
    return abs(x - round(x)) <= INTEGER_TOL and round(x) <= 0


def gamma(x: float) -> float:
    """Gamma function on the real line, negative non-integers included.

    Raises
    ------
    PoleError
        If ``x`` is a non-positive integer (within 1e-12).
    """
    x = float(x)
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma pole at x={x!r}")
    return math.gamma(x)


def _scaled_abs(re: float, im: float) -> float:
    # complex modulus from IEEE-exact operations only; see the note in
    # complex_pow for why math.hypot is avoided
    a = abs(re)
    b = abs(im)
    if a < b:
        a, b = b, a
    if a == 0.0:
        return 0.0
    r = b / a
    return a * math.sqrt(1.0 + r * r)


def complex_pow(base: complex | float, p: float) -> complex:
    """Principal-branch power ``base**p`` with Arg in (-pi, pi].

    Positive real bases take an exact real fast path (imaginary part is
    0.0 exactly); ``0**0`` is 1 by convention.

    Raises
    ------
    SingularInput
        If ``base`` is 0 and ``p`` < 0.
    """
    p = float(p)
    z = complex(base)
    re, im = z.real, z.imag
    if im == 0.0:
        if re > 0.0:
            return complex(math.pow(re, p), 0.0)
        if re == 0.0:
            if p < 0.0:
                raise SingularInput("0 raised to a negative power")
            return complex(1.0, 0.0) if p == 0.0 else complex(0.0, 0.0)
    # general principal branch; the odd-looking `im + 0.0` maps -0.0 to +0.0
    # so that negative real bases land on Arg = +pi, not -pi.  The modulus
    # uses the scaled-sqrt formula rather than math.hypot so the compiled
    # kernels (which can only reach libm's hypot, rounded differently from
    # CPython's) stay bit-identical with this function.
    mod = _scaled_abs(re, im)
    arg = math.atan2(im + 0.0, re)
    mag = math.exp(p * math.log(mod))
    ang = p * arg
    return complex(mag * math.cos(ang), mag * math.sin(ang))


def rl_derivative_power(p: float, nu: FractionalOrder | float, s: complex | float) -> complex:
    """Left Riemann-Liouville derivative of s**p with lower terminal 0.

    Closed form: ``D^nu s^p = Gamma(p+1)/Gamma(p+1-nu) * s^(p-nu)``.
    When ``Gamma(p+1-nu)`` sits on a pole (nu - p a positive integer) the
    coefficient vanishes and the result is exactly 0, matching the
    classical fact that integer-order derivatives annihilate lower powers.

    Parameters
    ----------
    p : float
        Exponent of the power function, p >= 0.
    nu : FractionalOrder or float
        Differentiation order.
    s : complex or float
        Evaluation point.
    """
    p = float(p)
    n = as_order(nu).nu
    q = p + 1.0 - n
    if _is_nonpositive_integer(q):
        return complex(0.0, 0.0)
    if complex(s) == 0 and p - n < 0.0:
        raise SingularInput(f"D^{n} s^{p} is singular at s=0")
    coeff = gamma(p + 1.0) / gamma(q)
    return coeff * complex_pow(s, p - n)


# ----------------------------------------------------------------------
# Grunwald-Letnikov oracle
# ----------------------------------------------------------------------

def _signed_lgamma(x: float) -> tuple[float, float]:
    """(log|Gamma(x)|, sign(Gamma(x))) for non-pole x."""
    if x > 0.0:
        return math.lgamma(x), 1.0
    # Gamma alternates sign between consecutive negative integers:
    # negative on (-1,0), positive on (-2,-1), ...
    sign = 1.0 if int(math.floor(x)) % 2 == 0 else -1.0
    return math.lgamma(x), sign


def _alt_binom_partial(alpha: float, m: int) -> float:
    """sum_{j=0..m} (-1)^j C(alpha, j), via (-1)^m C(alpha-1, m).

    Evaluated as Gamma(m+1-alpha) / (Gamma(m+1) Gamma(1-alpha)) through
    log-gamma so large m stays stable.  ``alpha`` must not make 1-alpha a
    non-positive integer (integer orders are handled by the caller).
    """
    if m < 0:
        return 0.0
    la, sa = _signed_lgamma(m + 1.0 - alpha)
    lb, sb = _signed_lgamma(m + 1.0)
    lc, sc = _signed_lgamma(1.0 - alpha)
    return sa * sb * sc * math.exp(la - lb - lc)


def _poly3(poly) -> tuple[float, float, float]:
    coeffs = [float(c) for c in poly]
    if not 1 <= len(coeffs) <= 3:
        raise DomainError("gl_oracle supports polynomials over powers {0, 1, 2} only")
    coeffs += [0.0] * (3 - len(coeffs))
    return coeffs[0], coeffs[1], coeffs[2]


def _gl_naive_sum(c0: float, c1: float, c2: float, nu: float, s: float, h: float) -> float:
    """Literal truncated GL sum, weights by cumulative product, exact summation."""
    n = int(math.floor(s / h))
    j = np.arange(1, n + 1)
    w = np.empty(n + 1)
    w[0] = 1.0
    np.cumprod((j - 1.0 - nu) / j, out=w[1:])
    x = s - np.arange(n + 1) * h
    f = c0 + x * (c1 + x * c2)
    return math.fsum((w * f).tolist()) * h ** (-nu)


def gl_oracle(poly, nu: FractionalOrder | float, s: float, h: float) -> float:
    """Truncated Grunwald-Letnikov derivative of a quadratic polynomial.

    Evaluates ``h**-nu * sum_{j=0}^{floor(s/h)} (-1)^j C(nu,j) f(s - j h)``
    for ``f`` given by coefficients over the powers {0, 1, 2}.  Used as an
    independent numerical check of the closed-form RL derivatives on the
    positive axis; accuracy target is ~1e-3 relative, not machine precision.

    For non-integer orders the truncated sum is evaluated through the
    alternating-binomial partial-sum identities instead of term-by-term
    accumulation: the literal sum cancels to ~15 digits below its leading
    terms once nu > 2, which double precision cannot survive.  Integer
    orders (terminating weights) use the literal sum.

    Raises
    ------
    DomainError
        If ``s <= 0`` or the step is not at least 100x finer than ``s``.
    """
    n_ord = as_order(nu).nu
    s = float(s)
    h = float(h)
    if s <= 0.0:
        raise DomainError(f"GL oracle is defined on s > 0, got s={s!r}")
    if not 0.0 < h <= s / 100.0:
        raise DomainError(f"step h={h!r} too coarse for s={s!r} (need h <= s/100)")
    c0, c1, c2 = _poly3(poly)
    if abs(n_ord - round(n_ord)) <= INTEGER_TOL:
        return _gl_naive_sum(c0, c1, c2, n_ord, s, h)
    n = int(math.floor(s / h))
    # sum w_j f(s-jh) = f(s)*A - h f'(s)*B + h^2 c2*D with
    # A = sum w_j, B = sum j w_j, D = sum j^2 w_j over j <= n
    a_sum = _alt_binom_partial(n_ord, n)
    b_sum = -n_ord * _alt_binom_partial(n_ord - 1.0, n - 1)
    d_sum = n_ord * (n_ord - 1.0) * _alt_binom_partial(n_ord - 2.0, n - 2) + b_sum
    f_s = c0 + s * (c1 + s * c2)
    fp_s = c1 + 2.0 * c2 * s
    total = f_s * a_sum - h * fp_s * b_sum + h * h * c2 * d_sum
    return total * h ** (-n_ord)
