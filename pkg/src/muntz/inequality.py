"""Markov-Newman type inequality for kernel combinations, and weighted
Dirichlet-series norms.

For half-plane points ``w_k`` and coefficients ``a_k``::

    || sum a_k (w_k - 1/2) / (z + w_k) || <= C(w) || sum a_k / (z + w_k) ||

in the Hardy space of the right half-plane, with

    C(w)**2 = sum |w_k - 1/2|**2 + sum_k Re w_k * sum_{j > k} Re w_j.

The double sum depends on the order of the points; it is evaluated in the
order given.  Weighted by 1 as written it is violated on random instances;
weight 4 (``cross_factor=4``) is what the Müntz-side form of the inequality
gives and survives all trials.  For real ``w_k >= 1/2`` the cruder constant
``sqrt(2) * sum w_k`` also applies.

A Dirichlet polynomial ``sum a_k q_k**(-s)`` has
``int_0^inf |.|**2 exp(-s) ds = a^* G a`` with ``G[k, l] = 1 / (1 + ln q_k + ln q_l)``,
the kernel Gram of the points ``ln q_k + 1/2``.
"""
from dataclasses import dataclass
import math

import numpy as np

from .basis import pseudo_hyperbolic_deltas
from .errors import BadBase, DegenerateRHS, InputError, LengthMismatch, NotRealAtLeastHalf
from .exponents import check_halfplane
from .gram import HermitianGram, eigvalsh, quadratic_norm

__all__ = ['markov_newman_constant', 'markov_newman_real_constant',
           'markov_newman_check', 'MarkovNewmanResult', 'markov_newman_trials',
           'dirichlet_gram', 'dirichlet_condition', 'dirichlet_equivalence',
           'DirichletResult', 'random_coefficients']

DEFAULT_SEED = 20240601


def random_coefficients(rng, n):
    """Standard complex Gaussian vector."""
    return (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / math.sqrt(2)


def _points(ws):
    ws = np.asarray(ws, dtype=complex).reshape(-1)
    if ws.size == 0:
        raise InputError("need at least one point")
    return check_halfplane(ws, 'w')


def markov_newman_constant(ws, cross_factor=1.0):
    """``[sum |w_k - 1/2|**2 + c * sum_k Re w_k sum_{j>k} Re w_j]**(1/2)`` in the given order.

    ``cross_factor=1`` (``c``) is the constant as usually quoted for kernel
    combinations.  Randomized trials show it is too small: the cross term
    needs weight ``(1 + 2 Re lam_k)(1 + 2 Re lam_j) = 4 Re w_k Re w_j`` coming
    from the Müntz-side inequality for ``x P'(x)``, i.e. ``cross_factor=4``.

    >>> round(markov_newman_constant([1, 2]) ** 2, 12)
    4.5
    """
    ws = _points(ws)
    re = ws.real
    later = np.cumsum(re[::-1])[::-1] - re     # sum_{j > k} Re w_j
    return float(math.sqrt(np.sum(np.abs(ws - 0.5) ** 2) + cross_factor * np.sum(re * later)))


def markov_newman_real_constant(ws):
    """``sqrt(2) * sum w_k`` for real ``w_k >= 1/2``."""
    ws = np.asarray(ws)
    if np.iscomplexobj(ws) and np.any(ws.imag != 0):
        raise NotRealAtLeastHalf("points must be real")
    ws = np.real(ws).astype(float).reshape(-1)
    if ws.size == 0 or np.any(~(ws >= 0.5)):
        raise NotRealAtLeastHalf("points must be real and >= 1/2")
    return float(math.sqrt(2) * ws.sum())


def _kernel_combo_gram(ws):
    # G[i, j] = <1/(z + w_j), 1/(z + w_i)> = 1 / (w_j + conj(w_i)); duplicates allowed
    return HermitianGram(1.0 / (np.conj(ws)[:, None] + ws[None, :]), None, None, 'kernel')


@dataclass
class MarkovNewmanResult:
    lhs: float
    rhs: float
    constant: float
    passed: bool

    @property
    def ratio(self):
        return self.lhs / self.rhs


def markov_newman_check(ws, a, constant=None, rtol=1e-12, cross_factor=1.0):
    """Evaluate both sides of the inequality exactly through kernel Gram forms.

    ``lhs = ||sum a_k (w_k - 1/2) / (z + w_k)||``, ``rhs = ||sum a_k / (z + w_k)||``;
    passes iff ``lhs <= constant * rhs + rtol * rhs``.  The constant defaults
    to :func:`markov_newman_constant` with the given `cross_factor`.
    """
    ws = _points(ws)
    a = np.asarray(a, dtype=complex).reshape(-1)
    if a.size != ws.size:
        raise LengthMismatch(f"{a.size} coefficients for {ws.size} points")
    if constant is None:
        constant = markov_newman_constant(ws, cross_factor)
    G = _kernel_combo_gram(ws)
    lhs = quadratic_norm(G, a * (ws - 0.5))
    rhs = quadratic_norm(G, a)
    if not rhs > 0 or rhs <= 1e-14 * np.linalg.norm(a) * np.sqrt(np.abs(np.diag(G.entries)).max()):
        raise DegenerateRHS("right-hand combination is numerically zero")
    return MarkovNewmanResult(lhs, rhs, float(constant), bool(lhs <= constant * rhs + rtol * rhs))


def markov_newman_trials(trials, seed=DEFAULT_SEED, max_n=10, w_range=(0.5, 50.0),
                         complex_points=False, real_constant=False, cross_factor=1.0):
    """Randomized trials of the inequality.

    Returns a list of ``(trial_seed, ratio / constant, passed)`` rows; each
    trial derives its own seed from `seed` so rows can be replayed singly.
    """
    rows = []
    seeds = np.random.SeedSequence(seed).spawn(trials)
    for ss in seeds:
        rng = np.random.default_rng(ss)
        n = int(rng.integers(1, max_n + 1))
        ws = rng.uniform(*w_range, n).astype(complex)
        if complex_points:
            ws = rng.uniform(1e-3, w_range[1], n) + 1j * rng.uniform(-w_range[1], w_range[1], n)
        a = random_coefficients(rng, n)
        const = markov_newman_real_constant(ws.real) if real_constant else None
        res = markov_newman_check(ws, a, constant=const, cross_factor=cross_factor)
        rows.append((int(ss.generate_state(1)[0]), res.ratio / res.constant
                     if res.constant else 0.0, res.passed))
    return rows


def _bases(qs):
    qs = np.asarray(qs, dtype=float).reshape(-1)
    if qs.size == 0:
        raise BadBase("need at least one base")
    if np.any(~(qs > 1)):
        raise BadBase(f"bases must exceed 1, got {qs[~(qs > 1)][0]!r}")
    if np.any(np.diff(qs) <= 0):
        raise BadBase("bases must be strictly increasing")
    return qs


def dirichlet_gram(qs):
    """Gram matrix ``1 / (1 + ln q_k + ln q_l)`` of ``q**(-s)`` in ``L2(exp(-s) ds)`` on ``(0, inf)``."""
    qs = _bases(qs)
    x = np.log(qs) + 0.5
    entries = 1.0 / (x[:, None] + x[None, :])
    return HermitianGram(entries, (x.astype(complex), x.astype(complex)), None, 'dirichlet')


def dirichlet_condition(qs):
    """``inf_n prod_{k != n} |ln(q_n / q_k)| / ln(q_n q_k e)``, accumulated in logs."""
    qs = _bases(qs)
    return float(pseudo_hyperbolic_deltas(np.log(qs) + 0.5).min())


@dataclass
class DirichletResult:
    c_lo: float
    c_hi: float
    condition: float
    bracket: tuple
    ratios: np.ndarray


def dirichlet_equivalence(qs, trials, seed=DEFAULT_SEED):
    """Sample ``(a^* G a) / sum(|a_k|**2 / ln q_k)`` over random coefficients.

    The certified bracket is the extremal eigenvalues of
    ``diag(sqrt(ln q)) G diag(sqrt(ln q))``, which contains every ratio.
    """
    qs = _bases(qs)
    if trials < 1:
        raise InputError("need at least one trial")
    G = dirichlet_gram(qs)
    logq = np.log(qs)
    rng = np.random.default_rng(seed)
    ratios = np.empty(trials)
    for i in range(trials):
        a = random_coefficients(rng, qs.size)
        ratios[i] = G.quadratic_form(a) / np.sum(np.abs(a) ** 2 / logq)
    scale = np.sqrt(logq)
    x = G.cauchy_nodes[0]
    scaled = HermitianGram(scale[:, None] * G.entries * scale[None, :], G.cauchy_nodes,
                           scale, 'dirichlet')
    ev = eigvalsh(scaled) if x.size else np.zeros(1)
    return DirichletResult(float(ratios.min()), float(ratios.max()), dirichlet_condition(qs),
                           (float(ev[0]), float(ev[-1])), ratios)
