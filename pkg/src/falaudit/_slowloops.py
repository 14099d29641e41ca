"""Pure-Python compute kernels.

This module is the reference implementation of the hot loops; the Cython
extension ``falaudit._fastloops`` mirrors it expression-for-expression so
both backends produce bit-identical results (the extension is compiled
with FMA contraction disabled for the same reason).  Which one is active
is decided in ``falaudit._backend``.
"""
from math import atan2, cos, exp, isfinite, log, pow as fpow, sin, sqrt

BACKEND = "python"


def scaled_abs(re, im):
    """Complex modulus via the scaled formula max*sqrt(1 + (min/max)^2).

    Deliberately not math.hypot: CPython ships its own correctly rounded
    hypot while the compiled backend would get libm's, and the two can
    disagree by an ulp.  This formula uses only IEEE-exact operations
    (divide, multiply, sqrt), so both backends round identically.
    """
    a = abs(re)
    b = abs(im)
    if a < b:
        a, b = b, a
    if a == 0.0:
        return 0.0
    r = b / a
    return a * sqrt(1.0 + r * r)

# exit codes shared by both backends
DONE = 0          # completed the requested number of steps
NEED_COMPLEX = 1  # stored a negative real iterate; continue in complex mode
HIT_ZERO = 2      # stored an iterate equal to 0 (next step undefined)
DIVERGED = 3      # stored iterate non-finite or beyond the overflow bound
STEADY = 4        # steady-state criterion fired with a valid index
MAXITERS = 5      # criterion search exhausted its budget

FIRST_PASSAGE = 0
PLATEAU = 1


def run_real_record(s0, c, s_star, nu, max_steps, overflow_bound, out_re):
    """FAL update in exact real arithmetic, recording into ``out_re``.

    ``out_re[0]`` receives ``s0`` (caller guarantees s0 > 0 and finite);
    up to ``max_steps`` further iterates are stored.  Returns
    ``(n_stored, exit_code)``; on NEED_COMPLEX / HIT_ZERO / DIVERGED the
    offending iterate is the last one stored.
    """
    s = s0
    out_re[0] = s
    n = 1
    for _ in range(max_steps):
        d = s - s_star
        s_next = s - c * d * d * fpow(s, -nu)
        out_re[n] = s_next
        n += 1
        if not isfinite(s_next) or abs(s_next) > overflow_bound:
            return n, DIVERGED
        if s_next == 0.0:
            return n, HIT_ZERO
        if s_next < 0.0:
            return n, NEED_COMPLEX
        s = s_next
    return n, DONE


def run_complex_record(re0, im0, c, s_star, nu, max_steps, overflow_bound, out_re, out_im):
    """FAL update over complex arithmetic, principal-branch powers.

    The starting value (already stored by the caller) is ``re0 + i im0``;
    up to ``max_steps`` new iterates are stored into ``out_re``/``out_im``
    starting at position 0.  Returns ``(n_stored, exit_code)``.
    """
    re, im = re0, im0
    n = 0
    for _ in range(max_steps):
        mod = scaled_abs(re, im)
        arg = atan2(im + 0.0, re)
        mag = exp(-nu * log(mod))
        ang = -nu * arg
        p_re = mag * cos(ang)
        p_im = mag * sin(ang)
        d_re = re - s_star
        d_im = im
        d2_re = d_re * d_re - d_im * d_im
        d2_im = 2.0 * d_re * d_im
        t_re = d2_re * p_re - d2_im * p_im
        t_im = d2_re * p_im + d2_im * p_re
        re = re - c * t_re
        im = im - c * t_im
        out_re[n] = re
        out_im[n] = im
        n += 1
        nmod = scaled_abs(re, im)
        if nmod == 0.0:
            return n, HIT_ZERO
        if not isfinite(nmod) or nmod > overflow_bound:
            return n, DIVERGED
    return n, DONE


def run_real_for_index(s0, c, s_star, nu, max_iters, kind, threshold, overflow_bound):
    """Steady-state index of the real-mode FAL run, without recording.

    ``kind`` is FIRST_PASSAGE or PLATEAU.  A fired criterion yields a
    valid index only if the trajectory provably never leaves the positive
    reals afterwards: either it is confined to ``(s_star, s]`` with a
    contractive step bound, or the run reaches ``max_iters`` still real.
    Returns ``(index, exit_code, k_exit, s_at_fire)`` with index -1 when
    no valid index exists (s_at_fire is then nan).
    """
    nan = float("nan")
    sp_negnu = fpow(s_star, -nu)
    s = s0
    k_fire = -1
    s_fire = nan
    contained = s > s_star and c * (s - s_star) * sp_negnu < 1.0
    if kind == FIRST_PASSAGE and abs(s - s_star) <= threshold:
        k_fire = 0
        s_fire = s
        if contained:
            return 0, STEADY, 0, s_fire
    for k in range(1, max_iters + 1):
        d = s - s_star
        s_next = s - c * d * d * fpow(s, -nu)
        if not isfinite(s_next) or abs(s_next) > overflow_bound:
            return -1, DIVERGED, k, nan
        if s_next == 0.0:
            return -1, HIT_ZERO, k, nan
        if s_next < 0.0:
            return -1, NEED_COMPLEX, k, nan
        if not contained:
            contained = s_next > s_star and c * (s_next - s_star) * sp_negnu < 1.0
        if k_fire < 0:
            if kind == FIRST_PASSAGE:
                if abs(s_next - s_star) <= threshold:
                    k_fire = k
                    s_fire = s_next
            elif abs(s_next - s) <= threshold:
                k_fire = k
                s_fire = s_next
        if k_fire >= 0 and contained:
            return k_fire, STEADY, k, s_fire
        s = s_next
    return k_fire, MAXITERS, max_iters, s_fire


def eq21star_solve(chi, c_const, s_star, s0, k, tol):
    """Bisection root of ln(s-s*) - s*/(s-s*) = -chi k + C on (s*, s0].

    Returns the root, or nan if the residual does not change sign on the
    bracket (cannot happen when s0 > s_star and chi, k >= 0).
    """
    rhs = c_const - chi * k
    lo = s_star + 1e-12 * (s_star if s_star > 1.0 else 1.0)
    hi = s0
    f_hi = log(hi - s_star) - s_star / (hi - s_star) - rhs
    if abs(f_hi) <= tol:
        return hi
    f_lo = log(lo - s_star) - s_star / (lo - s_star) - rhs
    if (f_lo < 0.0) == (f_hi < 0.0):
        return float("nan")
    a = lo
    b = hi
    for _ in range(200):
        m = 0.5 * (a + b)
        fm = log(m - s_star) - s_star / (m - s_star) - rhs
        if abs(fm) <= tol:
            return m
        if fm < 0.0:
            a = m
        else:
            b = m
    return 0.5 * (a + b)


def eq21star_fill(chi, c_const, s_star, s0, tol, out):
    """Fill ``out[i]`` with the corrected-estimate value at k = i."""
    for i in range(len(out)):
        out[i] = eq21star_solve(chi, c_const, s_star, s0, i, tol)
