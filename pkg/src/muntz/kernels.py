"""Szegő kernels, Blaschke products and model-space kernels on Re z > 0.

Conventions
-----------
The elementary factor with zero ``mu`` is ``b_mu(z) = (z - mu) / (z + conj(mu))``.
Its normalized version multiplies by the unimodular constant
``alpha = conj(b_mu(1)) / |b_mu(1)|`` (``alpha = 1`` when ``mu == 1``), so that
every normalized factor is real and nonnegative at ``z = 1``.

Products are accumulated as a sum of ``log|factor|`` plus a separate sum of
phases; long products of lacunary zeros would otherwise underflow.
"""
from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange
from .exponents import as_exponents, check_halfplane, transform_to_halfplane

__all__ = ['BlaschkeSet', 'szego_kernel', 'blaschke_factor', 'blaschke_product',
           'log_blaschke', 'tail_product', 'model_kernel', 'normalization_constants']


def normalization_constants(zeros):
    """Unimodular constants making each factor nonnegative at ``z = 1``."""
    zeros = np.asarray(zeros, dtype=complex)
    at_one = (1 - zeros) / (1 + np.conj(zeros))
    alpha = np.ones_like(zeros)
    nz = at_one != 0
    alpha[nz] = np.conj(at_one[nz]) / np.abs(at_one[nz])
    return alpha


@dataclass(frozen=True)
class BlaschkeSet:
    """Zeros of a finite Blaschke product and their normalizations."""
    zeros: np.ndarray
    normalizations: np.ndarray

    def __post_init__(self):
        for name in ('zeros', 'normalizations'):
            arr = np.array(getattr(self, name), dtype=complex).reshape(-1)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    def __len__(self):
        return len(self.zeros)

    @classmethod
    def from_zeros(cls, zeros):
        zeros = check_halfplane(np.asarray(zeros, dtype=complex).reshape(-1), 'zero')
        return cls(zeros, normalization_constants(zeros))

    @classmethod
    def from_exponents(cls, seq):
        """Blaschke set whose zeros are ``conj(lam) + 1/2``."""
        return cls.from_zeros(transform_to_halfplane(as_exponents(seq, allow_empty=True)))

    def tail(self, k):
        """Blaschke set of the factors ``k..N`` (1-based)."""
        n = len(self)
        if not 1 <= k <= n + 1:
            raise IndexOutOfRange(f"tail index {k} outside 1..{n + 1}")
        return BlaschkeSet(self.zeros[k - 1:], self.normalizations[k - 1:])


def szego_kernel(lam, z):
    """Reproducing kernel of the Hardy space of the right half-plane.

    ``k_lam(z) = 1 / (z + conj(lam))``; both points must satisfy ``Re > 0``.

    >>> print(szego_kernel(1, 2))
    (0.3333333333333333+0j)
    """
    lam = check_halfplane(lam, 'lambda')
    z = check_halfplane(z, 'z')
    out = 1.0 / (z + np.conj(lam))
    return out[()] if out.ndim == 0 else out


def blaschke_factor(mu, z, normalized=False):
    """Elementary factor ``(z - mu) / (z + conj(mu))``, boundary ``Re z = 0`` allowed."""
    mu = check_halfplane(mu, 'mu')
    z = check_halfplane(z, 'z', closed=True)
    out = (z - mu) / (z + np.conj(mu))
    if normalized:
        out = out * normalization_constants(np.atleast_1d(mu)).reshape(mu.shape)
    return out[()] if np.ndim(out) == 0 else out


def log_blaschke(zeros, z, normalizations=None):
    """Log-domain evaluation of ``prod_n alpha_n b_{mu_n}(z)``.

    Returns
    -------
    logmag : ndarray of float
        ``sum log|factor|`` (``-inf`` where `z` hits a zero).
    phase : ndarray of float
        Sum of factor arguments, not reduced modulo 2 pi.
    """
    zeros = np.asarray(zeros, dtype=complex).reshape(-1)
    z = np.asarray(z, dtype=complex)
    zz = z[..., None]
    factors = (zz - zeros) / (zz + np.conj(zeros))
    with np.errstate(divide='ignore'):
        logmag = np.log(np.abs(factors)).sum(axis=-1)
    phase = np.angle(factors).sum(axis=-1)
    if normalizations is not None:
        phase = phase + np.angle(np.asarray(normalizations, dtype=complex)).sum()
    return logmag, phase


def _assemble(logmag, phase):
    out = np.where(np.isneginf(logmag), 0j, np.exp(logmag + 1j * phase))
    return out[()] if out.ndim == 0 else out


def blaschke_product(bset, z, normalized=False):
    """Evaluate the finite Blaschke product of `bset` at `z` (``Re z >= 0``).

    Returns exactly ``0`` at a zero and ``1`` for an empty zero set.
    """
    if not isinstance(bset, BlaschkeSet):
        bset = BlaschkeSet.from_zeros(bset)
    z = check_halfplane(z, 'z', closed=True)
    logmag, phase = log_blaschke(bset.zeros, z,
                                 bset.normalizations if normalized else None)
    return _assemble(logmag, phase)


def tail_product(bset, k, z, normalized=True):
    """Tail ``B^(k)(z) = prod_{n >= k} alpha_n b_{mu_n}(z)`` with 1-based `k`.

    ``k = N + 1`` gives the empty product ``1``.
    """
    return blaschke_product(bset.tail(k), z, normalized=normalized)


def model_kernel(bset, nu, z):
    """Reproducing kernel of the model space ``K_B`` at `nu`, evaluated at `z`.

    ``(1 - conj(B(nu)) B(z)) / (z + conj(nu))``.  On the diagonal ``z == nu``
    the value ``(1 - |B(nu)|**2) / (2 Re nu)`` is returned as a real number,
    computed with ``expm1`` so it stays accurate when ``|B(nu)|`` is near 1.
    """
    if not isinstance(bset, BlaschkeSet):
        bset = BlaschkeSet.from_zeros(bset)
    nu = complex(check_halfplane(nu, 'nu'))
    z = check_halfplane(z, 'z')
    lm_nu, ph_nu = log_blaschke(bset.zeros, nu)
    lm_z, ph_z = log_blaschke(bset.zeros, z)
    if np.isneginf(lm_nu):
        one_minus = np.ones(z.shape, dtype=complex)
    else:
        log_prod = (lm_nu + lm_z) + 1j * (ph_z - ph_nu)
        with np.errstate(invalid='ignore'):
            one_minus = np.where(np.isneginf(lm_z), 1 + 0j, -np.expm1(log_prod))
    out = one_minus / (z + np.conj(nu))
    diag = z == nu
    if np.any(diag):
        out = np.where(diag, -np.expm1(2 * lm_nu) / (2 * nu.real) + 0j, out)
    if out.ndim == 0:
        return out.real.item() if diag else out[()]
    return out
