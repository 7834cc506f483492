import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from muntz.errors import InputError
from muntz.linalg import (cauchy_inverse, cauchy_ldl, jacobi_eigvalsh, one_sided_jacobi_svals,
                          structured_eigvalsh)

mpmath.mp.dps = 50

halfplane = st.builds(complex, st.floats(0.1, 10), st.floats(-5, 5))


def mp_cauchy(x, scale=None):
    n = len(x)
    s = [1] * n if scale is None else [mpmath.mpf(float(v)) for v in scale]
    return mpmath.matrix([[s[i] * s[j] / (mpmath.mpc(x[i]) + mpmath.conj(mpmath.mpc(x[j])))
                           for j in range(n)] for i in range(n)])


def mp_eigvalsh(x, scale=None):
    ev = mpmath.eighe(mp_cauchy(x, scale), eigvals_only=True)
    return np.array(sorted(float(v) for v in ev))


class TestCauchyInverse:
    def test_two_by_two(self):
        inv = cauchy_inverse([1.5, 2.5], [1.5, 2.5])
        assert np.allclose(inv, [[48, -60], [-60, 80]], rtol=1e-13, atol=0)
        assert inv.dtype == float

    @given(st.lists(halfplane, min_size=1, max_size=7, unique=True))
    def test_against_mpmath(self, x):
        x = np.array(x)
        inv = cauchy_inverse(x, np.conj(x))
        oracle = mp_cauchy(x) ** -1
        ref = np.array([[complex(oracle[i, j]) for j in range(len(x))] for i in range(len(x))])
        assert np.abs(inv - ref).max() <= 1e-9 * np.abs(ref).max()

    def test_ill_conditioned_entries_relative(self):
        # Hilbert-like nodes, condition ~1e17: closed form keeps entrywise accuracy
        x = np.arange(1, 13) - 0.5
        inv = cauchy_inverse(x, x)
        oracle = mp_cauchy(x) ** -1
        ref = np.array([[float(mpmath.re(oracle[i, j])) for j in range(12)] for i in range(12)])
        assert np.abs(inv / ref - 1).max() <= 1e-12

    def test_length_mismatch(self):
        with pytest.raises(InputError):
            cauchy_inverse([1, 2], [1])


class TestStructuredEigen:
    @given(st.lists(halfplane, min_size=1, max_size=8, unique=True))
    def test_matches_mpmath(self, x):
        x = np.array(x)
        ev = structured_eigvalsh(x)
        ref = mp_eigvalsh(x)
        assert np.allclose(ev, ref, rtol=1e-10, atol=1e-13 * ref[-1])

    def test_tiny_eigenvalues_relative_accuracy(self):
        # normalized Gram of power(2), N = 30: lambda_min ~ 5e-29
        lam = np.arange(1, 31, dtype=float) ** 2
        x = lam + 0.5
        scale = np.sqrt(2 * x)
        ev = structured_eigvalsh(x, scale)
        mpmath.mp.dps = 80
        try:
            ref = mp_eigvalsh(x, scale)
        finally:
            mpmath.mp.dps = 50
        assert ref[0] < 1e-27
        assert np.abs(ev / ref - 1).max() <= 1e-10

    def test_ldl_reconstructs(self, rng):
        x = rng.uniform(0.2, 4, 6) + 1j * rng.uniform(-2, 2, 6)
        perm, L, d = cauchy_ldl(x)
        C = 1 / (x[:, None] + np.conj(x)[None, :])
        P = C[np.ix_(perm, perm)]
        assert np.allclose(L @ np.diag(d) @ L.conj().T, P, rtol=1e-12, atol=1e-14)
        assert np.all(d > 0)


class TestJacobi:
    def test_identity(self):
        assert jacobi_eigvalsh(np.eye(3)).tolist() == [1, 1, 1]

    def test_hilbert_2x2(self):
        lo, hi = jacobi_eigvalsh(np.array([[1 / 3, 1 / 4], [1 / 4, 1 / 5]]))
        assert lo * hi == pytest.approx(1 / 240, rel=1e-12)
        assert lo + hi == pytest.approx(8 / 15, rel=1e-14)

    @given(st.integers(1, 12), st.integers(0, 2 ** 32 - 1))
    def test_random_hermitian(self, n, seed):
        rng = np.random.default_rng(seed)
        A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        A = A + A.conj().T
        ev = jacobi_eigvalsh(A)
        ref = np.linalg.eigvalsh(A)
        assert np.allclose(ev, ref, atol=1e-11 * np.abs(ref).max())

    def test_one_sided_svals(self, rng):
        F = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        sv = one_sided_jacobi_svals(F)
        assert np.allclose(np.sort(sv), np.sort(np.linalg.svd(F, compute_uv=False)), rtol=1e-13)
