"""Orthogonal projections onto Müntz spaces and summation-basis reconstruction.

The projection ``x_mu`` of ``t**mu`` onto the span of ``t**lam_n`` is carried by
the transform to the model-space kernel ``k^B_nu`` with ``nu = conj(mu) + 1/2``.
So its norm and its inner products with other projections have closed forms
in terms of the Blaschke product ``B`` of the sequence.

General functions enter as moment vectors ``m_n = <f, t**lam_n>``; their
biorthogonal coefficients are ``G^{-1} m``.
"""
import numpy as np

from .errors import IllConditioned, IndexOutOfRange, LengthMismatch, RouteMismatch
from .exponents import as_exponents
from .gram import (HermitianGram, MuntzCombination, _check_exponent, _cross_moments,
                   monomial_gram, quadratic_norm, solve_gram)
from .kernels import BlaschkeSet, model_kernel, tail_product

__all__ = ['project_onto_muntz', 'projection_norm', 'projection_gram',
           'biorthogonal_coeffs', 'summation_partial', 'reconstruction_curve']


def project_onto_muntz(seq, mu):
    """Orthogonal projection of ``t**mu`` onto the span of the sequence.

    Returns
    -------
    MuntzCombination
        Coefficients ``G^{-1} b`` with ``b_n = 1 / (mu + conj(lam_n) + 1)``;
        the unit coordinate vector if `mu` is itself in the sequence.

    Examples
    --------
    >>> project_onto_muntz([1], 0).coefficients
    array([1.5+0.j])
    """
    seq = as_exponents(seq, allow_empty=True)
    mu = _check_exponent(mu)
    hit = np.flatnonzero(seq.points == mu)
    if hit.size:
        coeffs = np.zeros(len(seq), dtype=complex)
        coeffs[hit[0]] = 1
        return MuntzCombination(seq, coeffs)
    coeffs = solve_gram(monomial_gram(seq), _cross_moments(seq, mu))
    return MuntzCombination(seq, coeffs)


def projection_norm(seq, mu, rtol=1e-8):
    """Norm of the projection of ``t**mu``: ``sqrt((1 - |B(nu)|**2) / (2 Re nu))``.

    The Gram quadratic form of the projection coefficients is computed too
    and must agree within `rtol` (relative to ``||t**mu||``) unless the Gram
    matrix is too ill-conditioned to solve; ``rtol=None`` skips that check.
    """
    seq = as_exponents(seq, allow_empty=True)
    mu = _check_exponent(mu)
    nu = np.conj(mu) + 0.5
    value = float(np.sqrt(max(model_kernel(BlaschkeSet.from_exponents(seq), nu, nu), 0.0)))
    if rtol is not None and len(seq):
        try:
            proj = project_onto_muntz(seq, mu)
        except IllConditioned:
            return value
        gram_value = quadratic_norm(monomial_gram(seq), proj.coefficients)
        scale = 1 / np.sqrt(2 * mu.real + 1)
        if abs(gram_value - value) > rtol * scale:
            raise RouteMismatch(f"projection norm: kernel route {value!r} vs Gram route {gram_value!r}")
    return value


def projection_gram(seq, targets):
    """Gram matrix of the projections of ``t**mu_j``: ``(1 - conj(B(nu_j)) B(nu_i)) / (nu_i + conj(nu_j))``."""
    seq = as_exponents(seq, allow_empty=True)
    mus = np.array([_check_exponent(m) for m in np.asarray(targets, dtype=complex).reshape(-1)])
    nu = np.conj(mus) + 0.5
    bset = BlaschkeSet.from_exponents(seq)
    entries = np.empty((nu.size, nu.size), dtype=complex)
    for i in range(nu.size):
        # column j: <x_mu_j, x_mu_i> = k^B_{nu_j}(nu_i)
        entries[i] = [model_kernel(bset, nu[j], nu[i]) for j in range(nu.size)]
    entries = (entries + entries.conj().T) / 2
    return HermitianGram(entries, None, None, 'projection')


def biorthogonal_coeffs(seq, moments):
    """Biorthogonal coefficients ``<f, e*_n> = (G^{-1} m)_n`` from moments ``m_n = <f, t**lam_n>``."""
    seq = as_exponents(seq)
    m = np.asarray(moments, dtype=complex).reshape(-1)
    if m.size != len(seq):
        raise LengthMismatch(f"{m.size} moments for {len(seq)} exponents")
    return solve_gram(monomial_gram(seq), m)


def summation_weights(seq, k):
    """Weights ``conj(B^(k)(mu_n))`` of the summation method, ``1 <= k <= N + 1``.

    Exactly zero for ``n >= k`` since the tail product vanishes at its own zeros.
    """
    bset = BlaschkeSet.from_exponents(as_exponents(seq))
    if not 1 <= k <= len(bset) + 1:
        raise IndexOutOfRange(f"summation index {k} outside 1..{len(bset) + 1}")
    return np.conj(np.atleast_1d(tail_product(bset, k, bset.zeros)))


def summation_partial(seq, moments, k):
    """Partial sum ``sum_n conj(B^(k)(mu_n)) <f, e*_n> t**lam_n`` of the summation method."""
    seq = as_exponents(seq)
    weights = summation_weights(seq, k)
    return MuntzCombination(seq, weights * biorthogonal_coeffs(seq, moments))


def reconstruction_curve(seq, moments, ks):
    """Errors ``||partial_k - P f||`` for each `k` in `ks`.

    ``P f`` is the projection of `f` onto the Müntz space, with coefficients
    ``G^{-1} m``.  No monotonicity in `k` is implied.
    """
    seq = as_exponents(seq)
    G = monomial_gram(seq)
    coeffs = biorthogonal_coeffs(seq, moments)
    errors = []
    for k in ks:
        diff = (summation_weights(seq, k) - 1) * coeffs
        errors.append(quadratic_norm(G, diff))
    return np.array(errors)
