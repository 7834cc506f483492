"""Gram matrices of monomials and kernels, norms, solves and distances.

Convention: ``G[i, j] = <x_j, x_i>``, so that ``(G c)_i = <sum_j c_j x_j, x_i>``
and normal equations read ``G c = b`` with ``b_i = <f, x_i>``.

Monomial and kernel Grams are Cauchy matrices.  With kernel points
``mu = conj(lam) + 1/2``,

    <e_lam_j, e_lam_i> = 1 / (lam_j + conj(lam_i) + 1) = 1 / (mu_i + conj(mu_j)),

and both are built from the same nodes ``x = mu``, ``y = conj(mu)``.
"""
from dataclasses import dataclass
import csv
import io
from typing import Optional

import numpy as np
import scipy.linalg

from .errors import HalfPlaneViolation, IllConditioned, InputError, LengthMismatch
from .exponents import as_exponents, check_halfplane, transform_to_halfplane
from .linalg import cauchy_inverse, jacobi_eigvalsh, structured_eigvalsh

__all__ = ['HermitianGram', 'MuntzCombination', 'monomial_gram', 'kernel_gram',
           'normalized_monomial_gram', 'normalized_kernel_gram', 'frame_bounds',
           'solve_gram', 'combo_norm', 'quadratic_norm', 'distance_to_span',
           'COND_GUARD']

#: solves refuse matrices with lambda_min <= COND_GUARD * lambda_max
COND_GUARD = 1e-13
MAX_EIG_SIZE = 256


@dataclass(frozen=True)
class HermitianGram:
    """Hermitian positive semidefinite Gram matrix.

    Parameters
    ----------
    entries : ndarray, shape (n, n)
        ``entries[i, j] = <x_j, x_i>``.
    cauchy_nodes : tuple of ndarray or None
        ``(x, y)`` with ``entries[i, j] = scale_i conj(scale_j) / (x_i + y_j)``.
    scale : ndarray or None
        Real positive diagonal scaling of a Cauchy matrix (``None`` means 1).
    kind : str
        ``'monomial'``, ``'kernel'``, ``'normalized_monomial'``,
        ``'normalized_kernel'``, ``'projection'`` or ``'dirichlet'``.
    """
    entries: np.ndarray
    cauchy_nodes: Optional[tuple] = None
    scale: Optional[np.ndarray] = None
    kind: str = 'monomial'

    def __post_init__(self):
        entries = np.array(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InputError(f"Gram matrix must be square, got shape {entries.shape}")
        entries.flags.writeable = False
        object.__setattr__(self, 'entries', entries)

    def __len__(self):
        return self.entries.shape[0]

    @property
    def is_hermitian_cauchy(self):
        if self.cauchy_nodes is None:
            return False
        x, y = self.cauchy_nodes
        return np.array_equal(np.conj(x), y)

    def hermitian_defect(self):
        return float(np.abs(self.entries - self.entries.conj().T).max(initial=0.0))

    def quadratic_form(self, a):
        """``a^* G a`` as a real number (imaginary rounding dropped)."""
        a = np.asarray(a, dtype=complex).reshape(-1)
        if a.size != len(self):
            raise LengthMismatch(f"{a.size} coefficients for a {len(self)}x{len(self)} Gram")
        return float(np.vdot(a, self.entries @ a).real)

    def to_csv(self):
        """Row-major CSV, one ``re,im`` column pair per matrix cell."""
        n = len(self)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow([f'c{j}_{part}' for j in range(n) for part in ('re', 'im')])
        for row in self.entries:
            writer.writerow([repr(float(v)) for z in row for v in (z.real, z.imag)])
        return buf.getvalue()


class MuntzCombination:
    """Finite combination ``f = sum_k a_k t**lam_k``.

    >>> f = MuntzCombination([0, 1], [1, -1])
    >>> print(f(0.25))
    (0.75+0j)
    """

    def __init__(self, exponents, coefficients):
        self.exponents = as_exponents(exponents, allow_empty=True)
        coeffs = np.array(coefficients, dtype=complex).reshape(-1)
        if coeffs.size != len(self.exponents):
            raise LengthMismatch(f"{coeffs.size} coefficients for {len(self.exponents)} exponents")
        coeffs.flags.writeable = False
        self.coefficients = coeffs

    def __repr__(self):
        return (f"MuntzCombination(exponents={self.exponents.points.tolist()}, "
                f"coefficients={self.coefficients.tolist()})")

    def __len__(self):
        return len(self.coefficients)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        logt = np.log(t)[..., None]
        out = (self.coefficients * np.exp(self.exponents.points * logt)).sum(axis=-1)
        return out[()] if out.ndim == 0 else out

    def moments(self):
        """``m_n = <f, e_lam_n>``, i.e. ``G a``."""
        return monomial_gram(self.exponents).entries @ self.coefficients

    def growth_bound(self):
        """``(C, beta)`` with ``|f(s)| <= C s**(-beta)`` on ``(0, 1]``."""
        if len(self) == 0:
            return 0.0, 0.0
        return float(np.abs(self.coefficients).sum()), float(-self.exponents.points.real.min())


def _cauchy_entries(x, y, scale=None):
    entries = 1.0 / (x[:, None] + y[None, :])
    if scale is not None:
        entries = scale[:, None] * entries * scale[None, :]
    return entries


def kernel_gram(mus):
    """Gram matrix ``G[i, j] = <k_mu_j, k_mu_i> = 1 / (mu_i + conj(mu_j))``.

    >>> kernel_gram([1.0]).entries
    array([[0.5+0.j]])
    """
    x = check_halfplane(np.asarray(mus, dtype=complex).reshape(-1), 'mu')
    y = np.conj(x)
    return HermitianGram(_cauchy_entries(x, y), (x, y), None, 'kernel')


def monomial_gram(seq):
    """Gram matrix ``G[i, j] = <e_lam_j, e_lam_i> = 1 / (lam_j + conj(lam_i) + 1)``."""
    x = transform_to_halfplane(as_exponents(seq, allow_empty=True))
    y = np.conj(x)
    return HermitianGram(_cauchy_entries(x, y), (x, y), None, 'monomial')


def _normalized(x, kind):
    y = np.conj(x)
    scale = np.sqrt(2 * x.real)
    entries = _cauchy_entries(x, y, scale)
    np.fill_diagonal(entries, 1.0)
    return HermitianGram(entries, (x, y), scale, kind)


def normalized_monomial_gram(seq):
    """Gram of ``sqrt(2 Re lam + 1) e_lam``; unit diagonal."""
    x = transform_to_halfplane(as_exponents(seq, allow_empty=True))
    return _normalized(x, 'normalized_monomial')


def normalized_kernel_gram(mus):
    """Gram of ``sqrt(2 Re mu) k_mu``; unit diagonal."""
    x = check_halfplane(np.asarray(mus, dtype=complex).reshape(-1), 'mu')
    return _normalized(x, 'normalized_kernel')


def eigvalsh(G):
    """All eigenvalues of `G`, ascending.

    Hermitian Cauchy-structured Grams go through the structured ``L D L^*``
    factorization and one-sided Jacobi (high relative accuracy); other
    matrices use cyclic two-sided Jacobi.
    """
    if len(G) > MAX_EIG_SIZE:
        raise InputError(f"eigenvalue contract covers n <= {MAX_EIG_SIZE}, got {len(G)}")
    if len(G) == 0:
        return np.zeros(0)
    if G.is_hermitian_cauchy:
        x, _ = G.cauchy_nodes
        if np.all(x.real > 0) and len(np.unique(x)) == len(x):
            return structured_eigvalsh(x, G.scale)
    return jacobi_eigvalsh(G.entries)


def frame_bounds(G):
    """Extremal eigenvalues ``(lower, upper)`` of a Gram matrix.

    These are the best constants ``c1**2, c2**2`` in
    ``c1**2 |a|**2 <= a^* G a <= c2**2 |a|**2`` for the finite system.
    """
    ev = eigvalsh(G)
    return float(ev[0]), float(ev[-1])


def _equilibrated_cond(G):
    diag = np.diag(G.entries).real
    if np.any(diag <= 0):
        return np.inf
    s = 1 / np.sqrt(diag)
    if G.is_hermitian_cauchy:
        base = G.scale if G.scale is not None else 1.0
        lam = eigvalsh(HermitianGram(G.entries, G.cauchy_nodes, base * s, G.kind))
    else:
        lam = jacobi_eigvalsh(s[:, None] * G.entries * s[None, :])
    if lam[0] <= COND_GUARD * lam[-1]:
        return np.inf if lam[0] <= 0 else lam[-1] / lam[0]
    return lam[-1] / lam[0]


def check_conditioning(G):
    """Raise :class:`IllConditioned` when the diagonally equilibrated `G` has
    ``lambda_min <= COND_GUARD * lambda_max``; return the condition number otherwise."""
    cond = _equilibrated_cond(G)
    if not np.isfinite(cond) or cond >= 1 / COND_GUARD:
        raise IllConditioned(cond)
    return cond


def solve_gram(G, b):
    """Solve ``G c = b``.

    Cauchy-structured Grams are inverted in closed form
    (:func:`muntz.linalg.cauchy_inverse`); other matrices use a pivoted
    Hermitian factorization.

    Raises
    ------
    IllConditioned
        If the equilibrated matrix is numerically singular (see
        :data:`COND_GUARD`).
    """
    b = np.asarray(b, dtype=complex).reshape(-1)
    n = len(G)
    if b.size != n:
        raise LengthMismatch(f"right-hand side of length {b.size} for a {n}x{n} Gram")
    if n == 0:
        return np.zeros(0, dtype=complex)
    check_conditioning(G)
    if G.cauchy_nodes is not None:
        x, y = G.cauchy_nodes
        inv = cauchy_inverse(x, y)
        if G.scale is None:
            return inv @ b
        s = np.asarray(G.scale, dtype=float)
        return (inv @ (b / s)) / s
    return scipy.linalg.solve(G.entries, b, assume_a='her')


def quadratic_norm(G, a):
    """``sqrt(max(a^* G a, 0))``."""
    return float(np.sqrt(max(G.quadratic_form(a), 0.0)))


def combo_norm(f):
    """``L2([0, 1])`` norm of a :class:`MuntzCombination`, ``sqrt(a^* G a)``."""
    return quadratic_norm(monomial_gram(f.exponents), f.coefficients)


def _cross_moments(seq, mu):
    # b_n = <e_mu, e_lam_n> = 1 / (mu + conj(lam_n) + 1)
    return 1.0 / (mu + np.conj(seq.points) + 1)


def _check_exponent(mu):
    mu = complex(mu)
    if not mu.real > -0.5:
        raise HalfPlaneViolation(0, mu)
    return mu


def distance_to_span(seq, mu):
    """Distance in ``L2([0, 1])`` from ``t**mu`` to the span of ``t**lam_n``.

    Computed as the Schur complement ``|e_mu|**2 - b^* G^{-1} b`` of the
    bordered Gram matrix.  For a member of the sequence the distance is 0.
    """
    seq = as_exponents(seq, allow_empty=True)
    mu = _check_exponent(mu)
    norm2 = 1.0 / (2 * mu.real + 1)
    if np.any(seq.points == mu):
        return 0.0
    if len(seq) == 0:
        return float(np.sqrt(norm2))
    b = _cross_moments(seq, mu)
    c = solve_gram(monomial_gram(seq), b)
    return float(np.sqrt(max(norm2 - np.vdot(b, c).real, 0.0)))
