"""The Mellin-type transform taking ``L2([0, 1])`` isometrically onto Hardy space.

``D f (z) = int_0^1 f(s) s**(z - 1/2) ds``, ``Re z > 0``.  A monomial goes to
a Szegő kernel: ``D(t**lam)(z) = 1 / (z + lam + 1/2) = k_{conj(lam) + 1/2}(z)``.
"""
import math

import numpy as np

from .errors import DegenerateInput, TailBoundFailure
from .exponents import check_halfplane
from .gram import MuntzCombination, combo_norm
from .quadrature import integrate, integrate_halfline

__all__ = ['dictionary_eval_closed', 'dictionary_eval_quadrature',
           'isometry_gap', 'boundary_norm']


def dictionary_eval_closed(f, z):
    """Closed form ``sum_k a_k / (z + lam_k + 1/2)``.

    Parameters
    ----------
    f : MuntzCombination
    z : complex or array_like of complex
        Evaluation points with ``Re z > 0``.
    """
    z = check_halfplane(z, 'z')
    kern = 1.0 / (z[..., None] + f.exponents.points + 0.5)
    out = kern @ f.coefficients
    return out[()] if np.ndim(out) == 0 else out


def dictionary_eval_quadrature(f, z, tol=1e-10, growth=None):
    """Evaluate ``D f (z)`` by quadrature.

    After ``s = exp(-t)`` the transform is
    ``int_0^inf f(exp(-t)) exp(-t (z + 1/2)) dt``.  For a Müntz combination
    the integrand is evaluated as ``sum_k a_k exp(-t (lam_k + z + 1/2))``.  The half-line is cut
    where the tail bound implied by the growth estimate falls below
    ``tol / 2``.

    Parameters
    ----------
    f : MuntzCombination or callable
        Callables take an ndarray of ``s`` in ``(0, 1]``.
    z : complex
        ``Re z > 0``.
    tol : float
        Absolute tolerance.
    growth : (C, beta), optional
        Bound ``|f(s)| <= C s**(-beta)``.  Required for plain callables;
        derived automatically for Müntz combinations.

    Raises
    ------
    TailBoundFailure
        If ``beta >= Re z + 1/2``: the integral is not known to converge.
    ToleranceNotMet
        If refinement runs out of budget.
    """
    z = complex(check_halfplane(z, 'z'))
    if growth is None:
        if not isinstance(f, MuntzCombination):
            raise TailBoundFailure("a growth bound (C, beta) is required for plain callables")
        growth = f.growth_bound()
    bound, beta = map(float, growth)
    decay = z.real + 0.5 - beta
    if not decay > 0:
        raise TailBoundFailure(f"growth exponent {beta} >= Re z + 1/2 = {z.real + 0.5}")
    w = z + 0.5

    if isinstance(f, MuntzCombination):
        rates = f.exponents.points + w
        coeffs = f.coefficients

        # exp(-t (lam + w)) directly: rounding s = exp(-t) costs accuracy for large lam
        def integrand(t):
            return np.exp(-t[..., None] * rates) @ coeffs
    else:
        def integrand(t):
            return f(np.exp(-t)) * np.exp(-t * w)

    # one panel per half period of the oscillation exp(-i t Im z) at least
    T_est = max(1.0, math.log(max(bound, 1e-300) * 2 / (decay * tol)) / decay)
    nosc = int(min(4096, math.ceil(T_est * abs(z.imag) / math.pi)))
    breaks = np.linspace(0, T_est, nosc + 1)[1:-1] if nosc > 1 else ()
    value, _, _ = integrate_halfline(integrand, bound, decay, tol, breaks)
    return complex(value)


def boundary_norm(f, Y, tol=1e-12):
    """Truncated boundary estimate of ``||D f||``.

    Returns ``(inner, tail)`` where ``inner = int_{-Y}^{Y} |Df(iy)|**2 dy / 2 pi``
    and `tail` bounds the rest of the line using
    ``|Df(iy)| <= sum|a_k| / (|y| - max|Im lam_k|)``.
    """
    pts = f.exponents.points
    a = f.coefficients
    big = float(np.abs(pts.imag).max(initial=0.0))
    if Y <= big:
        raise DegenerateInput(f"truncation height {Y} must exceed max |Im lam| = {big}")

    def integrand(y):
        vals = (1.0 / (1j * y[..., None] + pts + 0.5)) @ a
        return np.abs(vals) ** 2 / (2 * math.pi)

    steps = 2.0 ** np.arange(-2, math.ceil(math.log2(Y)) + 1)
    peaks = -pts.imag
    breaks = np.concatenate((peaks, (peaks[:, None] + steps).ravel(),
                             (peaks[:, None] - steps).ravel()))
    inner, _ = integrate(integrand, -Y, Y, tol, breaks[np.abs(breaks) < Y])
    tail = float(np.abs(a).sum()) ** 2 / (math.pi * (Y - big))
    return float(inner), tail


def isometry_gap(f, Y):
    """Relative gap between ``||f||_{L2}`` and the boundary norm of ``D f``.

    The boundary integral over ``|y| <= Y`` is computed by quadrature; the
    rest is only bounded, so the reported gap is the worst case over the
    bracket ``[sqrt(inner), sqrt(inner + tail)]``.
    """
    norm = combo_norm(f)
    if norm == 0:
        raise DegenerateInput("zero combination has no relative isometry gap")
    inner, tail = boundary_norm(f, Y)
    lo, hi = math.sqrt(inner), math.sqrt(inner + tail)
    return max(abs(norm - lo), abs(norm - hi)) / norm
