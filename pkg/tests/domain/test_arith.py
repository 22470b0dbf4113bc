from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ortholattice.domain.arith import (
    EXACT,
    FloatBackend,
    coordinates,
    dot,
    format_rational,
    is_primitive,
    orthogonalize,
    parse_rational,
    primitive,
    project_direction,
    project_off,
    project_onto,
    reject,
    reject_direction,
    span_basis,
)
from ortholattice.shared.exceptions import (
    DependentVectorsError,
    DimensionMismatchError,
    InvalidInputError,
    ZeroVectorError,
)

small_ints = st.integers(min_value=-9, max_value=9)


def vectors(dim: int) -> st.SearchStrategy[tuple[int, ...]]:
    return st.tuples(*([small_ints] * dim))


def test_dot_and_dimension_mismatch():
    assert dot((1, 2), (3, 4)) == 11
    with pytest.raises(DimensionMismatchError):
        dot((1, 2), (1, 2, 3))


def test_project_off_is_orthogonal():
    assert project_off((1, 0), (1, 1)) == (Fraction(1, 2), Fraction(-1, 2))
    with pytest.raises(ZeroVectorError):
        project_off((1, 0), (0, 0))


def test_primitive_clears_denominators_and_keeps_direction():
    assert primitive((2, 4, -6)) == (1, 2, -3)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert primitive((0, -5)) == (0, -1)
    with pytest.raises(ZeroVectorError):
        primitive((0, 0))


def test_is_primitive():
    assert is_primitive((1, 2))
    assert not is_primitive((2, 4))
    assert not is_primitive((0, 0))


def test_rational_formatting():
    assert format_rational(Fraction(3, 6)) == '1/2'
    assert format_rational(4) == '4'
    assert parse_rational('-3/4') == Fraction(-3, 4)
    assert parse_rational(' 7 ') == 7
    with pytest.raises(InvalidInputError):
        parse_rational('1/0')
    with pytest.raises(InvalidInputError):
        parse_rational('abc')


def test_orthogonalize_preserves_flag():
    assert orthogonalize(((1, 1), (1, 0))) == ((1, 1), (1, -1))


def test_orthogonalize_rejects_dependent_basis():
    with pytest.raises(DependentVectorsError) as excinfo:
        orthogonalize(((1, 2), (2, 4)))
    assert excinfo.value.index == 1


def test_span_basis_skips_dependent_vectors():
    assert span_basis(((1, 0), (2, 0), (0, 3))) == ((1, 0), (0, 1))


def test_coordinates():
    assert coordinates((3, 5), ((1, 0), (1, 1))) == (-2, 5)
    assert coordinates((0, 0, 1), ((1, 0, 0), (0, 1, 0))) is None
    with pytest.raises(DependentVectorsError):
        coordinates((1, 1), ((1, 1), (2, 2)))


@given(st.lists(vectors(3), min_size=3, max_size=3))
def test_orthogonalize_yields_orthogonal_primitive_frames(basis):
    try:
        frame = orthogonalize(basis)
    except DependentVectorsError:
        assume(False)
        return
    for i, u in enumerate(frame):
        assert is_primitive(u)
        for v in frame[i + 1 :]:
            assert dot(u, v) == 0
    # 各出力は入力と同じ部分空間の旗を張る
    for k in range(1, 4):
        for v in basis[:k]:
            assert coordinates(v, frame[:k]) is not None


def test_exact_backend_bit_length():
    assert EXACT.bit_length((Fraction(1, 8), 3)) == 4


def test_float_backend_tolerance():
    backend = FloatBackend(tolerance=1e-9)
    assert backend.sign(1e-12) == 0
    assert backend.sign(-1e-3) == -1
    assert backend.canonical((3, 4)) == (0.6, 0.8)
    assert backend.equal((0.6, 0.8), (0.6 + 1e-12, 0.8))
    with pytest.raises(ZeroVectorError):
        backend.canonical((0.0, 1e-12))


def test_float_backend_signs_are_relative():
    backend = FloatBackend(tolerance=1e-9)
    assert backend.sign(1e-12, scale=1e-6) == 1
    assert backend.sign(5.0, scale=1e10) == 0
    # 大きなベクトル同士のわずかな内積はゼロ、小さなベクトル同士の内積は符号を保つ
    assert backend.dot_sign((1e6, 0.0), (1e-7, 1e6)) == 0
    assert backend.dot_sign((1e-6, 0.0), (1e-6, 0.0)) == 1
    assert backend.dot_sign((1e-6, 0.0), (-1e-6, 1.0)) == -1


def test_exact_backend_ignores_the_scale():
    assert EXACT.sign(Fraction(1, 10**30), scale=1e40) == 1
    assert EXACT.dot_sign((1, 0), (0, 5)) == 0


def test_exact_backend_rejects_floats():
    with pytest.raises(InvalidInputError):
        EXACT.vector((0.5, 1))


def _same_ray(u, v) -> bool:
    if not any(u) or not any(v):
        return not any(u) and not any(v)
    return primitive(u) == primitive(v)


@given(st.lists(vectors(4), min_size=1, max_size=3), vectors(4))
def test_direction_helpers_agree_with_exact_projection(spanning, v):
    basis = span_basis(spanning)
    rejected = reject_direction(v, basis)
    projected = project_direction(v, basis)
    assert all(isinstance(c, int) for c in (*rejected, *projected))
    assert _same_ray(rejected, reject(v, basis))
    assert _same_ray(projected, project_onto(v, basis))


def test_direction_helpers_on_a_known_plane():
    basis = ((1, 1, 0), (0, 0, 1))
    assert reject_direction((1, 0, 0), basis) == (1, -1, 0)
    assert project_direction((1, 0, 5), basis) == (1, 1, 10)
    assert reject((1, 0, 0), basis) == (Fraction(1, 2), Fraction(-1, 2), 0)
