"""Basis diagnostics for exponent sequences.

Density sums, Carleson products and their thinness trend, lacunarity
ratios with the explicit asymptotic-orthonormality constants, the
two-term necessity inequality, the completeness-stability function ``R(t)``,
and the Riesz-basis condition for projected monomials.

Verdicts on finite data describe trends only; limits of infinite sequences
are not decidable from a prefix.
"""
from dataclasses import dataclass, field
import math

import numpy as np

from .errors import (DegenerateInput, DuplicatePoint, LengthMismatch,
                     NotRealIncreasing, RatioAtMostOne)
from .exponents import as_exponents, transform_to_halfplane
from .gram import normalized_kernel_gram, quadratic_norm
from .kernels import log_blaschke

__all__ = ['BasisDiagnostics', 'density_partial_sums', 'carleson_deltas',
           'pseudo_hyperbolic_deltas', 'thinness_trend', 'lacunarity_profile',
           'aob_sandwich_check', 'volberg_necessity_gap', 'stability_R',
           'projection_riesz_condition', 'AOBCheck', 'StabilityResult',
           'ProjectionRieszResult', 'aob_eps', 'aob_eps_lower']

INCONCLUSIVE = 'inconclusive (finite data)'


@dataclass
class BasisDiagnostics:
    """Container for the per-index diagnostics of one sequence."""
    delta: np.ndarray = field(default_factory=lambda: np.zeros(0))
    delta_inf: float = 1.0
    ratios: np.ndarray = field(default_factory=lambda: np.zeros(0))
    r: np.ndarray = field(default_factory=lambda: np.zeros(0))
    eps: np.ndarray = field(default_factory=lambda: np.zeros(0))
    eps_lower: np.ndarray = field(default_factory=lambda: np.zeros(0))
    density_partial_sums: np.ndarray = field(default_factory=lambda: np.zeros(0))
    verdicts: dict = field(default_factory=dict)


def density_partial_sums(seq):
    """Partial sums of ``(1/2 + Re lam) / (|lam + 1/2|**2 + 1)``.

    The series diverges exactly when the monomials are dense in
    ``L2([0, 1])``.  The verdict is taken from the generator's analytic
    ``tail_class`` when available.

    Returns
    -------
    sums : ndarray
    verdict : str
        ``'divergent'``, ``'convergent'`` or ``'inconclusive (finite data)'``.
    """
    seq = as_exponents(seq)
    lam = seq.points
    terms = (0.5 + lam.real) / (np.abs(lam + 0.5) ** 2 + 1)
    return np.cumsum(terms), seq.tail_class or INCONCLUSIVE


def _log_pair_moduli(num, den):
    ratio = np.abs(num) / np.abs(den)
    np.fill_diagonal(ratio, 1.0)
    with np.errstate(divide='ignore'):
        return np.log(ratio).sum(axis=1)


def carleson_deltas(seq):
    """Carleson products ``delta_n = prod_{k != n} |lam_n - lam_k| / |lam_n + conj(lam_k) + 1|``.

    Accumulated as a sum of logarithms.  Each value lies in ``[0, 1]``.
    """
    seq = as_exponents(seq)
    lam = seq.points
    num = lam[:, None] - lam[None, :]
    den = lam[:, None] + np.conj(lam)[None, :] + 1
    return np.exp(_log_pair_moduli(num, den))


def pseudo_hyperbolic_deltas(points):
    """Carleson products ``prod_{k != n} |(mu_n - mu_k) / (mu_n + conj(mu_k))|`` of half-plane points."""
    mu = np.asarray(points, dtype=complex).reshape(-1)
    num = mu[:, None] - mu[None, :]
    off = num[~np.eye(mu.size, dtype=bool)]
    if np.any(off == 0):
        i, j = np.argwhere((num == 0) & ~np.eye(mu.size, dtype=bool))[0]
        raise DuplicatePoint(int(min(i, j)), int(max(i, j)))
    den = mu[:, None] + np.conj(mu)[None, :]
    return np.exp(_log_pair_moduli(num, den))


def thinness_trend(seq, margin=0.1):
    """Carleson products plus a trend verdict towards ``delta_n -> 1``.

    The last quartile of the products decides: ``'thin-consistent'`` when it
    is nondecreasing and ends within `margin` of 1, ``'not thin'`` when it
    stays at least `margin` below 1 throughout, else inconclusive.
    """
    delta = carleson_deltas(seq)
    tail = delta[-max(1, len(delta) // 4):]
    if np.all(np.diff(tail) >= 0) and tail[-1] >= 1 - margin:
        verdict = 'thin-consistent'
    elif np.all(tail <= 1 - margin):
        verdict = 'not thin'
    else:
        verdict = INCONCLUSIVE
    return delta, verdict


def aob_eps(r):
    """Upper constant ``eps = sqrt(1 + 4 / (r - 1)) - 1`` (0 for ``r = inf``)."""
    r = np.asarray(r, dtype=float)
    with np.errstate(divide='ignore'):
        return np.sqrt(1 + 4 / (r - 1)) - 1


def aob_eps_lower(r):
    """Lower constant ``eps' = 1 - sqrt(max(0, 1 - 4 / (r - 1)))``."""
    r = np.asarray(r, dtype=float)
    with np.errstate(divide='ignore'):
        return 1 - np.sqrt(np.maximum(0.0, 1 - 4 / (r - 1)))


def _as_real_increasing(w):
    w = np.asarray(w)
    if np.iscomplexobj(w):
        if np.any(w.imag != 0):
            raise NotRealIncreasing("points must be real")
        w = w.real
    w = w.astype(float).reshape(-1)
    if np.any(~(w > 0)) or np.any(np.diff(w) <= 0):
        raise NotRealIncreasing("points must be positive and strictly increasing")
    return w


def lacunarity_profile(w):
    """Ratios ``q_{n+1}/q_n`` of ``q_n = sqrt(2 w_n)``, their tail infima and the AOB constants.

    Parameters
    ----------
    w : array_like of float or ExponentSequence
        Positive increasing half-plane points.  An exponent sequence is
        mapped through ``w = lam + 1/2`` first (its exponents must be real,
        positive and increasing).

    Returns
    -------
    BasisDiagnostics
        ``ratios`` has ``N - 1`` entries; ``r`` and ``eps`` have ``N``,
        with ``r_N = inf`` and ``eps_N = 0`` for the single-element tail.
        ``r_n = min_{m >= n} q_{m+1} / q_m``.
    """
    if hasattr(w, 'points'):
        seq = as_exponents(w)
        _as_real_increasing(seq.points)
        w = transform_to_halfplane(seq).real
    w = _as_real_increasing(w)
    q = np.sqrt(2 * w)
    ratios = q[1:] / q[:-1]
    r = np.append(np.minimum.accumulate(ratios[::-1])[::-1], np.inf)
    bad = np.flatnonzero(r <= 1)
    if bad.size:
        raise RatioAtMostOne(int(bad[0]) + 1)
    eps = aob_eps(r)
    return BasisDiagnostics(ratios=ratios, r=r, eps=eps, eps_lower=aob_eps_lower(r))


@dataclass
class AOBCheck:
    lhs: float
    mid: float
    rhs: float
    passed: bool
    eps: float
    eps_lower: float


def aob_sandwich_check(w, a, n0=1):
    """Check ``(1 - eps'_n) |a| <= ||sum_{k>=n} a_k sqrt(2 w_k) k_{w_k}|| <= (1 + eps_n) |a|``.

    Parameters
    ----------
    w : array_like of float
        Positive increasing half-plane points (``w = lam + 1/2``).
    a : array_like of complex
        Coefficients for the tail ``k = n0..N``.
    n0 : int
        1-based start of the tail.

    The middle term is evaluated exactly as ``sqrt(a^* N a)`` with ``N`` the
    Gram matrix of the normalized kernels, entries
    ``2 sqrt(w_k w_l) / (w_k + w_l)``.
    """
    prof = lacunarity_profile(w)
    w = _as_real_increasing(w)
    a = np.asarray(a, dtype=complex).reshape(-1)
    if not 1 <= n0 <= len(w):
        raise LengthMismatch(f"tail start {n0} outside 1..{len(w)}")
    if a.size != len(w) - n0 + 1:
        raise LengthMismatch(f"{a.size} coefficients for a tail of {len(w) - n0 + 1}")
    anorm = float(np.linalg.norm(a))
    if anorm == 0:
        raise DegenerateInput("zero coefficient vector")
    eps = float(prof.eps[n0 - 1])
    eps_lo = float(prof.eps_lower[n0 - 1])
    mid = quadratic_norm(normalized_kernel_gram(w[n0 - 1:]), a)
    lhs, rhs = (1 - eps_lo) * anorm, (1 + eps) * anorm
    # one ulp of slack per side: the single-index case is an exact equality
    slack = 4 * np.finfo(float).eps * anorm
    return AOBCheck(lhs, mid, rhs, bool(lhs - slack <= mid <= rhs + slack), eps, eps_lo)


def volberg_necessity_gap(w_n, w_next, eps_n, t):
    """``(1 + eps)(1 + t**2)**(1/2) - (1 + 2 t sqrt(rho) / (1 + rho))`` with ``rho = w_next / w_n``.

    A negative value at some ``t > 0`` shows that ``eps_n`` is too small to
    be an asymptotic-orthonormality constant for the pair.
    """
    if not t > 0:
        raise DegenerateInput("t must be positive")
    if not 0 < w_n < w_next:
        raise NotRealIncreasing("need 0 < w_n < w_next")
    rho = w_next / w_n
    if math.isinf(rho):
        cross = 0.0
    else:
        cross = 2 * t * math.sqrt(rho) / (1 + rho)
    return (1 + eps_n) * math.sqrt(1 + t * t) - (1 + cross)


@dataclass
class StabilityResult:
    t: np.ndarray
    R: np.ndarray
    grid_max: float
    envelope: float
    verdict: str


def stability_R(seq, perturbed, t_grid):
    """``R(t) = sum_n |lam_n - mu_n| / |mu_n + 1/2 - i t|`` on a grid.

    The certified supremum is the envelope ``sum_n |lam_n - mu_n| / Re(mu_n + 1/2)``,
    which bounds ``R`` on the whole real line.  A finite envelope means the
    projections of the perturbed monomials are complete in the Müntz space.
    """
    lam = as_exponents(seq).points
    mu = as_exponents(perturbed).points
    if lam.size != mu.size:
        raise LengthMismatch(f"{lam.size} exponents vs {mu.size} perturbed exponents")
    t = np.asarray(t_grid, dtype=float).reshape(-1)
    dist = np.abs(lam - mu)
    R = (dist / np.abs(mu + 0.5 - 1j * t[:, None])).sum(axis=1)
    envelope = float((dist / (mu.real + 0.5)).sum())
    verdict = ('sufficient condition satisfied' if math.isfinite(envelope)
               else 'envelope unbounded')
    return StabilityResult(t, R, float(R.max(initial=0.0)), envelope, verdict)


@dataclass
class ProjectionRieszResult:
    blaschke_moduli: np.ndarray
    deltas: np.ndarray
    delta_inf: float
    verdict: str
    details: dict = field(default_factory=dict)


def projection_riesz_condition(seq, targets, carleson_floor=0.0):
    """Diagnostics for the Riesz property of normalized projections of ``t**mu_n``.

    Returns ``|B(nu_n)|`` with ``nu_n = conj(mu_n) + 1/2`` and ``B`` the
    Blaschke product of the sequence, together with the Carleson products
    of the ``nu_n``.  The verdict pairs the trend ``|B(nu_n)| -> 0`` with
    ``inf delta > carleson_floor``.
    """
    seq = as_exponents(seq)
    mus = as_exponents(targets).points
    nu = np.conj(mus) + 0.5
    logmag, _ = log_blaschke(transform_to_halfplane(seq), nu)
    moduli = np.exp(logmag)
    deltas = pseudo_hyperbolic_deltas(nu)
    delta_inf = float(deltas.min())
    tail = moduli[-max(1, len(moduli) // 4):]
    decaying = bool(np.all(np.diff(tail) <= 0) or np.all(tail == 0))
    carleson = delta_inf > carleson_floor
    if decaying and carleson:
        verdict = 'riesz-consistent'
    elif decaying:
        verdict = 'not riesz'
    else:
        verdict = INCONCLUSIVE
    return ProjectionRieszResult(moduli, deltas, delta_inf, verdict,
                                 {'B_trend_to_zero': decaying, 'carleson_inf_positive': carleson})
