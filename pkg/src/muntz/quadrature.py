"""Adaptive Gauss-Legendre panel quadrature.

Each panel is integrated with a 12-point and a 25-point Gauss rule; the
difference is the panel's error estimate.  Panels whose estimate exceeds
their share of the tolerance are bisected.  All active panels are evaluated
in one vectorized call of the integrand.
"""
import math

import numpy as np

from .errors import InputError, ToleranceNotMet

__all__ = ['integrate', 'integrate_halfline', 'halfline_cutoff']

_LO = np.polynomial.legendre.leggauss(12)
_HI = np.polynomial.legendre.leggauss(25)
_EPS = np.finfo(float).eps
_ROUNDOFF = 50 * _EPS


def _panel_sums(f, a, b, rule):
    nodes, weights = rule
    half = (b - a)[:, None] / 2
    mid = (b + a)[:, None] / 2
    values = f(mid + half * nodes)
    return ((values * weights).sum(axis=1) * half[:, 0],
            (np.abs(values) * weights).sum(axis=1) * half[:, 0])


def integrate(f, a, b, tol=1e-10, breakpoints=(), max_panels=200_000):
    """Integrate a vectorized function over ``[a, b]``.

    Parameters
    ----------
    f : callable
        Accepts an ndarray of abscissae of any shape and returns values of
        the same shape (real or complex).
    a, b : float
        Finite integration limits, ``a < b``.
    tol : float
        Absolute tolerance on the total.
    breakpoints : sequence of float
        Interior points where the initial panels should be split (peaks,
        kinks).
    max_panels : int
        Refinement budget.

    Returns
    -------
    value : float or complex
    error : float
        Sum of accepted panel error estimates.
    """
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise InputError(f"need finite a < b, got [{a}, {b}]")
    edges = np.unique(np.clip(np.concatenate(([a, b], np.asarray(breakpoints, float))), a, b))
    lo, hi = edges[:-1], edges[1:]
    length = b - a
    total = 0.0
    err = 0.0
    used = 0
    while lo.size:
        used += lo.size
        if used > max_panels:
            raise ToleranceNotMet(f"quadrature budget of {max_panels} panels exhausted "
                                  f"(accumulated error {err:.3e}, tol {tol:.3e})")
        coarse, _ = _panel_sums(f, lo, hi, _LO)
        fine, mass = _panel_sums(f, lo, hi, _HI)
        est = np.abs(fine - coarse)
        share = tol * (hi - lo) / length
        # estimates at roundoff level, or panels at the floating point
        # resolution, cannot improve by splitting
        done = ((est <= share) | (est <= _ROUNDOFF * mass)
                | (hi - lo <= 64 * _EPS * np.maximum(abs(lo), abs(hi))))
        total = total + fine[done].sum()
        err += est[done].sum()
        mid = (lo[~done] + hi[~done]) / 2
        lo, hi = np.concatenate((lo[~done], mid)), np.concatenate((mid, hi[~done]))
    return total, float(err)


def halfline_cutoff(bound, decay, tol):
    """Smallest ``T >= 1`` with ``bound * exp(-decay T) / decay <= tol``."""
    if decay <= 0:
        raise InputError("integrand must decay exponentially")
    if bound <= 0:
        return 1.0
    return max(1.0, math.log(bound / (decay * tol)) / decay)


def integrate_halfline(f, bound, decay, tol=1e-10, breakpoints=(), max_panels=200_000):
    """Integrate over ``[0, inf)`` an integrand with ``|f(t)| <= bound exp(-decay t)``.

    The integral is taken in the variable ``u = decay * t`` so that the decay
    length is 1 whatever the size of `decay`.  The range is cut where the
    analytic tail bound drops below ``tol / 2``; the finite part is
    integrated to ``tol / 2``.

    Returns
    -------
    value, error, T
        `error` includes the tail bound; `T` is the cut in units of ``t``.
    """
    if decay <= 0:
        raise InputError("integrand must decay exponentially")
    U = halfline_cutoff(bound / decay, 1.0, tol / 2)
    tail = bound * math.exp(-U) / decay if bound > 0 else 0.0
    # a few initial panels per decay length keep oscillations resolved
    npanel = int(min(4096, max(8, math.ceil(U))))
    grid = np.linspace(0, U, npanel + 1)[1:-1]
    value, err = integrate(lambda u: f(u / decay) / decay, 0.0, U, tol / 2,
                           np.concatenate((grid, decay * np.asarray(breakpoints, float))),
                           max_panels)
    return value, err + tail, U / decay
