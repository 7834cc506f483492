import numpy as np
import pytest
from hypothesis import given, strategies as st

from muntz.errors import BadGeneratorParams, DuplicatePoint, HalfPlaneViolation, InputError
from muntz.exponents import (ExponentSequence, as_exponents, generate_sequence,
                             transform_from_halfplane, transform_to_halfplane,
                             validate_exponents)

from helpers import exponent_lists


class TestValidate:
    def test_zero(self):
        seq = validate_exponents([0])
        assert seq.points.tolist() == [0j]
        assert seq.family == 'explicit' and seq.tail_class is None

    def test_two_points(self):
        assert validate_exponents([1, 2]).points.tolist() == [1, 2]

    def test_boundary_rejected(self):
        with pytest.raises(HalfPlaneViolation) as info:
            validate_exponents([-0.5])
        assert info.value.index == 0

    def test_index_reported(self):
        with pytest.raises(HalfPlaneViolation) as info:
            validate_exponents([1, 2, -0.7 + 1j])
        assert info.value.index == 2

    def test_duplicates(self):
        with pytest.raises(DuplicatePoint) as info:
            validate_exponents([1, 3, 1 + 0j])
        assert (info.value.i, info.value.j) == (0, 2)

    def test_near_duplicates_allowed(self):
        assert len(validate_exponents([1, 1 + 1e-15])) == 2

    def test_empty(self):
        with pytest.raises(InputError):
            validate_exponents([])

    def test_nonfinite(self):
        with pytest.raises(HalfPlaneViolation):
            validate_exponents([1, np.nan])

    def test_points_read_only(self):
        seq = validate_exponents([1, 2])
        with pytest.raises(ValueError):
            seq.points[0] = 5


class TestTransform:
    def test_zero(self):
        assert transform_to_halfplane(validate_exponents([0])).tolist() == [0.5]

    def test_reals(self):
        assert transform_to_halfplane(validate_exponents([1, 2])).tolist() == [1.5, 2.5]

    def test_conjugates(self):
        assert transform_to_halfplane(validate_exponents([-0.25 + 1j])).tolist() == [0.25 - 1j]

    @given(exponent_lists())
    def test_round_trip_exact(self, pts):
        seq = validate_exponents(pts)
        mu = transform_to_halfplane(seq)
        assert np.all(mu.real > 0)
        back = transform_from_halfplane(mu)
        # exact in binary for dyadic shifts of representable values is not guaranteed
        # in general; check to one ulp of the inputs
        assert np.allclose(back, seq.points, rtol=0, atol=4 * np.finfo(float).eps * (1 + np.abs(seq.points)).max())

    @given(st.lists(st.integers(-3, 400).map(lambda k: k / 8), min_size=1, max_size=6, unique=True))
    def test_round_trip_bitwise_on_dyadics(self, pts):
        seq = validate_exponents(pts)
        assert np.array_equal(transform_from_halfplane(transform_to_halfplane(seq)), seq.points)


class TestGenerate:
    def test_geometric(self):
        seq = generate_sequence('geometric', 3, a=1, c=2)
        assert seq.points.tolist() == [1, 2, 4]
        assert seq.tail_class == 'convergent'

    def test_affine(self):
        seq = generate_sequence('affine', 3, a=1, d=1)
        assert seq.points.tolist() == [1, 2, 3]
        assert seq.tail_class == 'divergent'

    def test_power(self):
        seq = generate_sequence('power', 3, p=2)
        assert seq.points.tolist() == [1, 4, 9]
        assert seq.tail_class == 'convergent'

    def test_power_dense_case(self):
        assert generate_sequence('power', 4, p=1).tail_class == 'divergent'
        assert generate_sequence('power', 4, p=0.5).tail_class == 'divergent'

    def test_superlacunary(self):
        seq = generate_sequence('superlacunary', 3, base=2)
        assert seq.points.tolist() == [2, 16, 512]
        assert seq.tail_class == 'convergent'

    @pytest.mark.parametrize('family, params', [
        ('geometric', {'a': 1, 'c': 1}), ('geometric', {'a': 0, 'c': 2}),
        ('affine', {'a': 1, 'd': 0}), ('affine', {'a': -0.5, 'd': 1}),
        ('power', {'p': 0}), ('superlacunary', {'base': 1}),
        ('geometric', {'a': 1}), ('geometric', {'a': 1, 'c': 2, 'x': 3}),
        ('nope', {}), ('power', {'p': True}), ('power', {'p': 'two'}),
    ])
    def test_bad_params(self, family, params):
        with pytest.raises(BadGeneratorParams):
            generate_sequence(family, 3, **params)

    def test_bad_length(self):
        with pytest.raises(BadGeneratorParams):
            generate_sequence('power', 0, p=2)

    def test_overflow(self):
        with pytest.raises(BadGeneratorParams):
            generate_sequence('superlacunary', 30, base=10)

    @given(st.floats(0.01, 10), st.floats(1.01, 4), st.integers(1, 30))
    def test_deterministic(self, a, c, n):
        one = generate_sequence('geometric', n, a=a, c=c)
        two = generate_sequence('geometric', n, a=a, c=c)
        assert one == two
        assert one.points.tobytes() == two.points.tobytes()

    @given(st.floats(0.01, 10), st.floats(1.01, 10), st.integers(2, 40))
    def test_geometric_ratio_to_rounding(self, a, c, n):
        pts = generate_sequence('geometric', n, a=a, c=c).points.real
        assert np.all(np.abs(pts[1:] / pts[:-1] / c - 1) <= 4 * np.finfo(float).eps)

    @given(st.integers(1, 6), st.integers(2, 40))
    def test_geometric_ratio_exact_for_powers_of_two(self, e, n):
        pts = generate_sequence('geometric', n, a=3, c=2.0 ** e).points.real
        assert np.all(pts[1:] / pts[:-1] == 2.0 ** e)

    def test_geometric_ratio_dyadic_start(self):
        pts = generate_sequence('geometric', 40, a=0.375, c=2).points.real
        assert np.all(pts[1:] / pts[:-1] == 2)


def test_truncate_keeps_metadata():
    seq = generate_sequence('power', 10, p=2).truncate(4)
    assert seq.points.tolist() == [1, 4, 9, 16]
    assert seq.family == 'power' and seq.params == {'p': 2.0}


def test_to_spec_round_trip():
    from muntz.cli import parse_sequence_spec
    for seq in (validate_exponents([0.5 - 1j, 2]), generate_sequence('affine', 5, a=0.25, d=0.5)):
        assert parse_sequence_spec(seq.to_spec()) == seq


def test_as_exponents_accepts_sequence_and_lists():
    seq = validate_exponents([1, 2])
    assert as_exponents(seq) is seq
    assert as_exponents([1, 2]) == seq
    assert isinstance(as_exponents((0.5,)), ExponentSequence)
