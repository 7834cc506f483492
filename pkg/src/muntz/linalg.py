"""Small dense Hermitian linear algebra with Cauchy structure.

Müntz and kernel Gram matrices are Cauchy matrices ``1 / (x_i + y_j)``, which
are badly conditioned but have exact formulas for their inverse and for the
generators of their Schur complements.  This module exploits both:

* :func:`cauchy_inverse` builds the inverse entrywise from products of node
  differences, accumulated as sums of complex logarithms;
* :func:`cauchy_ldl` computes a pivoted ``L D L^*`` factorization from the
  nodes alone, so every entry of ``L`` and ``D`` carries small relative error;
* :func:`one_sided_jacobi_svals` then recovers the eigenvalues as squared
  singular values of ``L D^{1/2}`` (accurate even for tiny eigenvalues);
* :func:`jacobi_eigvalsh` is the plain two-sided cyclic Jacobi method used
  when no Cauchy structure is available.
"""
import numpy as np

from .errors import ConvergenceFailure, InputError

__all__ = ['cauchy_inverse', 'cauchy_ldl', 'one_sided_jacobi_svals',
           'jacobi_eigvalsh', 'structured_eigvalsh']

_EPS = np.finfo(float).eps


def _logprod_excluding_diag(diff):
    """``sum_{k != j} log(diff[j, k])`` for each row `j`."""
    diff = diff.astype(complex)
    np.fill_diagonal(diff, 1)
    return np.log(diff).sum(axis=1)


def cauchy_inverse(x, y):
    """Closed-form inverse of ``C[i, j] = 1 / (x[i] + y[j])``.

    .. math::

        (C^{-1})_{ij} = \\frac{\\prod_k (x_k + y_i) \\prod_k (x_j + y_k)}
                          {(x_j + y_i) \\prod_{k \\ne j} (x_j - x_k)
                           \\prod_{k \\ne i} (y_i - y_k)}

    All products are formed as sums of complex logarithms and exponentiated
    once, so intermediate products never overflow.
    """
    x = np.asarray(x, dtype=complex).reshape(-1)
    y = np.asarray(y, dtype=complex).reshape(-1)
    if x.shape != y.shape:
        raise InputError("Cauchy node lists differ in length")
    s = x[None, :] + y[:, None]              # s[i, j] = x_j + y_i
    log_s = np.log(s)
    log_u = log_s.sum(axis=1)                # prod_k (x_k + y_i)
    log_v = log_s.sum(axis=0)                # prod_k (x_j + y_k)
    log_x = _logprod_excluding_diag(x[:, None] - x[None, :])
    log_y = _logprod_excluding_diag(y[:, None] - y[None, :])
    log_inv = (log_u[:, None] + log_v[None, :] - log_s
               - log_x[None, :] - log_y[:, None])
    inv = np.exp(log_inv)
    if np.all(x.imag == 0) and np.all(y.imag == 0):
        # real nodes: phases are multiples of pi, the imaginary part is noise
        return inv.real
    return inv


def cauchy_ldl(x, scale=None):
    """Pivoted ``L D L^*`` of the Hermitian Cauchy-like matrix
    ``G[i, j] = s_i conj(s_j) / (x_i + conj(x_j))``.

    Gaussian elimination is carried out on the generators: eliminating pivot
    ``k`` multiplies ``s_i`` by ``(x_i - x_k) / (x_i + conj(x_k))``.  The pivot
    is the largest remaining diagonal entry (complete pivoting, since ``G``
    is positive definite).

    Returns
    -------
    perm : ndarray of int
        Pivot order; ``G[perm][:, perm] == L @ diag(d) @ L^*``.
    L : ndarray, shape (n, n)
        Unit lower triangular.
    d : ndarray of float
        Pivots, positive when ``G`` is numerically positive definite; trailing
        zeros when the remaining Schur complement underflows.
    """
    x = np.asarray(x, dtype=complex).reshape(-1)
    n = x.size
    g = np.ones(n, dtype=complex) if scale is None else np.asarray(scale, dtype=complex).copy()
    y = np.conj(x)
    perm = np.arange(n)
    L = np.eye(n, dtype=complex)
    d = np.zeros(n)
    for k in range(n):
        rest = perm[k:]
        diag = np.abs(g[rest]) ** 2 / (2 * x[rest].real)
        j = k + int(np.argmax(diag))
        perm[[k, j]] = perm[[j, k]]
        L[[k, j], :k] = L[[j, k], :k]
        p = perm[k]
        d[k] = abs(g[p]) ** 2 / (2 * x[p].real)
        others = perm[k + 1:]
        if others.size == 0 or d[k] == 0:
            # largest remaining pivot underflowed: the Schur complement is zero
            break
        L[k + 1:, k] = g[others] * (x[p] + y[p]) / (g[p] * (x[others] + y[p]))
        g[others] *= (x[others] - x[p]) / (x[others] + y[p])
    return perm, L, d


def one_sided_jacobi_svals(F, tol=None, max_sweeps=60):
    """Singular values of `F` by Hestenes' one-sided Jacobi method.

    Columns are rotated pairwise until every pair is orthogonal to relative
    accuracy `tol` (default ``n * eps``).  For ``F = X D`` with ``X`` well
    conditioned and ``D`` diagonal, the results have small relative error
    regardless of the spread of ``D``.
    """
    A = np.array(F, dtype=complex)
    n = A.shape[1]
    if tol is None:
        tol = max(n, 1) * _EPS
    norms = np.einsum('ij,ij->j', A.conj(), A).real
    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha, beta = norms[p], norms[q]
                gamma = np.vdot(A[:, p], A[:, q])
                g = abs(gamma)
                if g == 0 or g <= tol * np.sqrt(alpha * beta):
                    continue
                rotated = True
                zeta = (beta - alpha) / (2 * g)
                t = (1.0 if zeta >= 0 else -1.0) / (abs(zeta) + np.hypot(1.0, zeta))
                c = 1 / np.hypot(1.0, t)
                s = c * t
                aq = A[:, q] * (np.conj(gamma) / g)
                ap = A[:, p]
                A[:, p], A[:, q] = c * ap - s * aq, s * ap + c * aq
                norms[p] = np.vdot(A[:, p], A[:, p]).real
                norms[q] = np.vdot(A[:, q], A[:, q]).real
        if not rotated:
            return np.sort(np.sqrt(norms))
    raise ConvergenceFailure(f"one-sided Jacobi did not converge in {max_sweeps} sweeps")


def structured_eigvalsh(x, scale=None):
    """Eigenvalues (ascending) of the Hermitian Cauchy-like matrix of :func:`cauchy_ldl`."""
    _, L, d = cauchy_ldl(x, scale)
    if not np.all(d >= 0) or not np.all(np.isfinite(L)):
        raise ConvergenceFailure("structured factorization broke down (matrix not positive definite)")
    return one_sided_jacobi_svals(L * np.sqrt(d)) ** 2


def jacobi_eigvalsh(A, tol=1e-12, max_sweeps=60):
    """Eigenvalues (ascending) of a Hermitian matrix by cyclic two-sided Jacobi.

    A rotation is applied to ``(p, q)`` whenever
    ``|a_pq| > n eps sqrt(|a_pp a_qq|)``; iteration stops after a sweep
    without rotations.  Raises :class:`ConvergenceFailure` if the remaining
    off-diagonal Frobenius mass exceeds ``tol * ||A||_F`` after `max_sweeps`.
    """
    A = np.array(A, dtype=complex)
    n = A.shape[0]
    if A.shape != (n, n):
        raise InputError("matrix must be square")
    A = (A + A.conj().T) / 2
    small = max(n, 1) * _EPS
    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                g = abs(apq)
                if g == 0 or g <= small * np.sqrt(abs(A[p, p].real * A[q, q].real)):
                    continue
                rotated = True
                phase = apq / g
                # make a_pq real by rephasing index q
                A[:, q] *= np.conj(phase)
                A[q, :] *= phase
                zeta = (A[q, q].real - A[p, p].real) / (2 * g)
                t = (1.0 if zeta >= 0 else -1.0) / (abs(zeta) + np.hypot(1.0, zeta))
                c = 1 / np.hypot(1.0, t)
                s = c * t
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p], A[:, q] = c * cp - s * cq, s * cp + c * cq
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :], A[q, :] = c * rp - s * rq, s * rp + c * rq
                A[p, q] = A[q, p] = 0
        if not rotated:
            break
    off = np.linalg.norm(A - np.diag(np.diag(A)))
    if off > tol * max(np.linalg.norm(A), np.finfo(float).tiny):
        raise ConvergenceFailure(f"Jacobi off-diagonal mass {off:.3e} above tolerance")
    return np.sort(np.diag(A).real)
