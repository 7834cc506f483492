"""Exponent sequences and the half-plane change of variables.

A Müntz space is spanned by the monomials ``t**lam`` on ``(0, 1]``; such a
monomial is square integrable exactly when ``Re lam > -1/2``.  The map
``lam -> conj(lam) + 1/2`` sends that half-plane onto the open right
half-plane, where the monomial becomes a Szegő kernel.
"""
from dataclasses import dataclass, field
import math
from typing import Optional, Sequence

import numpy as np

from .errors import (BadGeneratorParams, DomainViolation, DuplicatePoint,
                     HalfPlaneViolation, InputError)

__all__ = ['ExponentSequence', 'validate_exponents', 'as_exponents',
           'check_halfplane', 'transform_to_halfplane', 'transform_from_halfplane',
           'generate_sequence', 'FAMILIES']

FAMILIES = ('explicit', 'geometric', 'affine', 'power', 'superlacunary')

DIVERGENT = 'divergent'
CONVERGENT = 'convergent'


def _frozen(values):
    arr = np.array(values, dtype=complex).reshape(-1)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class ExponentSequence:
    """Finite list of distinct exponents with ``Re > -1/2``.

    Parameters
    ----------
    points : array_like of complex
        The exponents, in order.
    family : str
        Generator tag, ``'explicit'`` for user supplied lists.
    params : dict
        Generator parameters (empty for explicit lists).
    tail_class : {'divergent', 'convergent', None}
        Behaviour of the infinite density sum, known only for generated
        families.

    Build instances with :func:`validate_exponents` or
    :func:`generate_sequence`; the constructor itself does not validate.
    """
    points: np.ndarray
    family: str = 'explicit'
    params: dict = field(default_factory=dict)
    tail_class: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, 'points', _frozen(self.points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return ExponentSequence(self.points[item])
        return self.points[item]

    @property
    def is_real(self):
        return bool(np.all(self.points.imag == 0))

    def truncate(self, n):
        """First `n` points, keeping generator metadata."""
        if not 0 <= n <= len(self):
            raise InputError(f"cannot truncate {len(self)} points to {n}")
        return ExponentSequence(self.points[:n], self.family, dict(self.params),
                                self.tail_class)

    def to_spec(self):
        """JSON-ready sequence spec (inverse of :func:`muntz.cli.parse_sequence_spec`)."""
        if self.family == 'explicit':
            return {'kind': 'explicit',
                    'points': [[float(p.real), float(p.imag)] for p in self.points]}
        return {'kind': self.family, 'params': dict(self.params), 'n': len(self)}

    def __eq__(self, other):
        if not isinstance(other, ExponentSequence):
            return NotImplemented
        return (self.family == other.family and self.params == other.params
                and self.tail_class == other.tail_class
                and np.array_equal(self.points, other.points))

    __hash__ = None


def _check_points(points, allow_empty=False):
    if points.size == 0 and not allow_empty:
        raise InputError("exponent list is empty")
    if not np.all(np.isfinite(points)):
        bad = int(np.flatnonzero(~np.isfinite(points))[0])
        raise HalfPlaneViolation(bad, points[bad])
    bad = np.flatnonzero(~(points.real > -0.5))
    if bad.size:
        raise HalfPlaneViolation(int(bad[0]), complex(points[bad[0]]))
    # exact duplicate detection: sort by (re, im) and compare neighbours
    order = np.lexsort((points.imag, points.real))
    srt = points[order]
    same = np.flatnonzero(srt[1:] == srt[:-1])
    if same.size:
        i, j = sorted((int(order[same[0]]), int(order[same[0] + 1])))
        raise DuplicatePoint(i, j)


def validate_exponents(raw: Sequence[complex]) -> ExponentSequence:
    """Validate a raw list of exponents.

    Raises
    ------
    HalfPlaneViolation
        If some ``Re lam <= -1/2`` (the boundary is excluded).
    DuplicatePoint
        If two exponents are equal.

    Examples
    --------
    >>> validate_exponents([1, 2]).points
    array([1.+0.j, 2.+0.j])
    """
    points = np.array(raw, dtype=complex).reshape(-1)
    _check_points(points)
    return ExponentSequence(points)


def as_exponents(obj, allow_empty=False) -> ExponentSequence:
    """Coerce `obj` to a validated :class:`ExponentSequence`.

    Sequences that are already ``ExponentSequence`` instances are re-checked
    cheaply and returned unchanged.
    """
    if isinstance(obj, ExponentSequence):
        _check_points(obj.points, allow_empty=allow_empty)
        return obj
    if obj is None:
        obj = []
    points = np.array(obj, dtype=complex).reshape(-1)
    _check_points(points, allow_empty=allow_empty)
    return ExponentSequence(points)


def check_halfplane(z, name='z', closed=False):
    """Return `z` as a complex array after checking ``Re z > 0``.

    With ``closed=True`` the imaginary axis is admitted as well.
    """
    arr = np.asarray(z, dtype=complex)
    ok = arr.real >= 0 if closed else arr.real > 0
    if not np.all(ok):
        raise DomainViolation(f"{name} must satisfy Re {'>=' if closed else '>'} 0, "
                              f"got {arr[~ok].reshape(-1)[0]!r}")
    return arr


def transform_to_halfplane(seq) -> np.ndarray:
    """Map exponents to their kernel points ``conj(lam) + 1/2``.

    >>> transform_to_halfplane(validate_exponents([-0.25 + 1j]))
    array([0.25-1.j])
    """
    seq = as_exponents(seq, allow_empty=True)
    return np.conj(seq.points) + 0.5


def transform_from_halfplane(mu) -> np.ndarray:
    """Inverse of :func:`transform_to_halfplane`."""
    mu = check_halfplane(mu, 'mu')
    return np.conj(mu) - 0.5


def _require(cond, msg):
    if not cond:
        raise BadGeneratorParams(msg)


def _num(params, key, default=None):
    if key not in params:
        if default is None:
            raise BadGeneratorParams(f"missing parameter {key!r}")
        return default
    value = params[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise BadGeneratorParams(f"parameter {key!r} must be a real number")
    if not math.isfinite(value):
        raise BadGeneratorParams(f"parameter {key!r} must be finite")
    return float(value)


def generate_sequence(family: str, n: int, **params) -> ExponentSequence:
    """Generate the first `n` points of a parametric family.

    Families (``k = 1..n``):

    ``geometric(a, c)``
        ``a * c**(k-1)`` with ``a > 0``, ``c > 1``; lacunary.
    ``affine(a, d)``
        ``a + (k-1) * d`` with ``a > -1/2``, ``d > 0``; dense case.
    ``power(p)``
        ``k**p`` with ``p > 0``; dense iff ``p <= 1``.
    ``superlacunary(base)``
        ``base**(k*k)`` with ``base > 1``.

    The density sum's fate (``tail_class``) is known analytically for each
    family and recorded on the result.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise BadGeneratorParams(f"n must be a positive integer, got {n!r}")
    k = np.arange(1, n + 1, dtype=float)
    if family == 'geometric':
        a, c = _num(params, 'a'), _num(params, 'c')
        _require(a > 0, "geometric needs a > 0")
        _require(c > 1, "geometric needs c > 1")
        points = a * c ** (k - 1)
        tail, used = CONVERGENT, {'a': a, 'c': c}
    elif family == 'affine':
        a, d = _num(params, 'a'), _num(params, 'd')
        _require(a > -0.5, "affine needs a > -1/2")
        _require(d > 0, "affine needs d > 0")
        points = a + (k - 1) * d
        tail, used = DIVERGENT, {'a': a, 'd': d}
    elif family == 'power':
        p = _num(params, 'p')
        _require(p > 0, "power needs p > 0")
        points = k ** p
        tail, used = (CONVERGENT if p > 1 else DIVERGENT), {'p': p}
    elif family == 'superlacunary':
        base = _num(params, 'base')
        _require(base > 1, "superlacunary needs base > 1")
        with np.errstate(over='ignore'):
            points = base ** (k * k)
        tail, used = CONVERGENT, {'base': base}
    else:
        raise BadGeneratorParams(f"unknown family {family!r}; expected one of {FAMILIES[1:]}")
    unknown = set(params) - set(used)
    _require(not unknown, f"unexpected parameters {sorted(unknown)} for {family}")
    _require(np.all(np.isfinite(points)), f"{family} overflows double precision at n={n}")
    # float rounding can merge consecutive points (e.g. affine with tiny d)
    _require(np.all(np.diff(points) > 0), f"{family} points not distinct at n={n}")
    return ExponentSequence(points.astype(complex), family, used, tail)
