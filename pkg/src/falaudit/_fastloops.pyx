# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled compute kernels.

Expression-for-expression mirror of ``falaudit._slowloops`` (same libm
primitives, same operation order); compiled with -ffp-contract=off so the
two backends stay bit-identical.  Keep both files in sync.
"""
from libc.math cimport NAN, atan2, cos, exp, fabs, isfinite, log, pow, sin, sqrt

BACKEND = "cython"


cdef inline double scaled_abs(double re, double im) noexcept nogil:
    # mirrors _slowloops.scaled_abs: IEEE-exact ops only, never libm hypot
    cdef double a = fabs(re)
    cdef double b = fabs(im)
    cdef double r
    if a < b:
        r = a
        a = b
        b = r
    if a == 0.0:
        return 0.0
    r = b / a
    return a * sqrt(1.0 + r * r)

DONE = 0
NEED_COMPLEX = 1
HIT_ZERO = 2
DIVERGED = 3
STEADY = 4
MAXITERS = 5

FIRST_PASSAGE = 0
PLATEAU = 1


def run_real_record(double s0, double c, double s_star, double nu, long max_steps,
                    double overflow_bound, double[::1] out_re):
    """See _slowloops.run_real_record."""
    cdef double s = s0
    cdef double d, s_next
    cdef long n = 1
    cdef long i
    out_re[0] = s
    for i in range(max_steps):
        d = s - s_star
        s_next = s - c * d * d * pow(s, -nu)
        out_re[n] = s_next
        n += 1
        if not isfinite(s_next) or fabs(s_next) > overflow_bound:
            return n, DIVERGED
        if s_next == 0.0:
            return n, HIT_ZERO
        if s_next < 0.0:
            return n, NEED_COMPLEX
        s = s_next
    return n, DONE


def run_complex_record(double re0, double im0, double c, double s_star, double nu,
                       long max_steps, double overflow_bound,
                       double[::1] out_re, double[::1] out_im):
    """See _slowloops.run_complex_record."""
    cdef double re = re0
    cdef double im = im0
    cdef double mod, arg, mag, ang, p_re, p_im, d_re, d_im, d2_re, d2_im, t_re, t_im, nmod
    cdef long n = 0
    cdef long i
    for i in range(max_steps):
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


def run_real_for_index(double s0, double c, double s_star, double nu, long max_iters,
                       int kind, double threshold, double overflow_bound):
    """See _slowloops.run_real_for_index."""
    cdef double sp_negnu = pow(s_star, -nu)
    cdef double s = s0
    cdef double d, s_next
    cdef long k_fire = -1
    cdef double s_fire = NAN
    cdef bint contained = s > s_star and c * (s - s_star) * sp_negnu < 1.0
    cdef long k
    if kind == FIRST_PASSAGE and fabs(s - s_star) <= threshold:
        k_fire = 0
        s_fire = s
        if contained:
            return 0, STEADY, 0, s_fire
    for k in range(1, max_iters + 1):
        d = s - s_star
        s_next = s - c * d * d * pow(s, -nu)
        if not isfinite(s_next) or fabs(s_next) > overflow_bound:
            return -1, DIVERGED, k, NAN
        if s_next == 0.0:
            return -1, HIT_ZERO, k, NAN
        if s_next < 0.0:
            return -1, NEED_COMPLEX, k, NAN
        if not contained:
            contained = s_next > s_star and c * (s_next - s_star) * sp_negnu < 1.0
        if k_fire < 0:
            if kind == FIRST_PASSAGE:
                if fabs(s_next - s_star) <= threshold:
                    k_fire = k
                    s_fire = s_next
            elif fabs(s_next - s) <= threshold:
                k_fire = k
                s_fire = s_next
        if k_fire >= 0 and contained:
            return k_fire, STEADY, k, s_fire
        s = s_next
    return k_fire, MAXITERS, max_iters, s_fire


cdef double _eq21star_solve(double chi, double c_const, double s_star, double s0,
                            double k, double tol):
    cdef double rhs = c_const - chi * k
    cdef double lo = s_star + 1e-12 * (s_star if s_star > 1.0 else 1.0)
    cdef double hi = s0
    cdef double f_hi = log(hi - s_star) - s_star / (hi - s_star) - rhs
    cdef double f_lo, a, b, m, fm
    cdef int i
    if fabs(f_hi) <= tol:
        return hi
    f_lo = log(lo - s_star) - s_star / (lo - s_star) - rhs
    if (f_lo < 0.0) == (f_hi < 0.0):
        return NAN
    a = lo
    b = hi
    for i in range(200):
        m = 0.5 * (a + b)
        fm = log(m - s_star) - s_star / (m - s_star) - rhs
        if fabs(fm) <= tol:
            return m
        if fm < 0.0:
            a = m
        else:
            b = m
    return 0.5 * (a + b)


def eq21star_solve(double chi, double c_const, double s_star, double s0, long k, double tol):
    """See _slowloops.eq21star_solve."""
    return _eq21star_solve(chi, c_const, s_star, s0, <double> k, tol)


def eq21star_fill(double chi, double c_const, double s_star, double s0, double tol,
                  double[::1] out):
    """See _slowloops.eq21star_fill."""
    cdef long i
    for i in range(out.shape[0]):
        out[i] = _eq21star_solve(chi, c_const, s_star, s0, <double> i, tol)
