import pytest
from hypothesis import given
from hypothesis import strategies as st

from ortholattice.domain.cone import (
    Frame,
    Subspace,
    apply_signed_permutation,
    compare,
    cone_contains,
    frame_from_basis,
    halfspace_pair_contains,
    leading_sign,
    lex_sign,
    negate,
    restrict,
    same_direction,
    signed_permute,
    standard_frame,
    support_normal,
    validate_signed_permutation,
)
from ortholattice.domain.generators import RandomSource
from ortholattice.shared.enums import LexSign
from ortholattice.shared.exceptions import (
    DependentVectorsError,
    InvalidFrameError,
    InvalidInputError,
    SubspaceError,
)

seeds = st.integers(min_value=0, max_value=2**32)
rays3 = st.tuples(*([st.integers(min_value=-5, max_value=5)] * 3)).filter(any)


class TestFrameValidation:
    def test_empty_frame(self):
        with pytest.raises(InvalidFrameError):
            Frame(())

    def test_non_primitive_row_is_named(self):
        with pytest.raises(InvalidFrameError) as excinfo:
            Frame(((2, 0), (0, 1)))
        assert excinfo.value.rows == (1,)

    def test_non_orthogonal_pair_is_named(self):
        with pytest.raises(InvalidFrameError) as excinfo:
            Frame(((1, 1), (1, 0)))
        assert excinfo.value.rows == (1, 2)

    def test_ragged_rows(self):
        with pytest.raises(InvalidFrameError) as excinfo:
            Frame(((1, 0, 0), (0, 1)))
        assert excinfo.value.rows == (2,)

    def test_too_many_vectors(self):
        with pytest.raises(InvalidFrameError):
            Frame(((1, 0), (0, 1), (1, 1)))

    def test_zero_vector(self):
        with pytest.raises(InvalidFrameError):
            Frame(((0, 0),))


def test_standard_frame():
    frame = standard_frame(2)
    assert frame.vectors == ((-1, 0), (0, -1))
    assert frame.rank == 2
    assert support_normal(frame) == (0, -1)
    assert negate(frame) == Frame(((1, 0), (0, 1)))


def test_lex_sign_on_positive_system():
    frame = standard_frame(2)
    # 正系は最後の非零座標が正のレイ
    assert lex_sign((1, 0), frame) is LexSign.NEGATIVE
    assert lex_sign((-3, 2), frame) is LexSign.NEGATIVE
    assert lex_sign((0, -1), frame) is LexSign.POSITIVE
    assert cone_contains(frame, (1, 0))
    assert not cone_contains(frame, (-1, 0))


def test_lex_sign_outside_span():
    frame = Frame(((1, 0, 0), (0, 1, 0)))
    assert lex_sign((0, 0, 1), frame) is LexSign.OUTSIDE_SPAN
    assert lex_sign((1, 1, 0), frame) is LexSign.POSITIVE


def test_frame_from_basis_and_leading_sign():
    basis = ((1, 1), (1, 0))
    frame = frame_from_basis(basis)
    assert frame == Frame(((1, 1), (1, -1)))
    assert leading_sign((1, 0), basis) is LexSign.POSITIVE
    assert lex_sign((1, 0), frame) is LexSign.POSITIVE


def test_compare_is_antisymmetric():
    frame = standard_frame(2)
    assert compare(frame, (1, 0), (0, 1)) == 1
    assert compare(frame, (0, 1), (1, 0)) == -1
    assert compare(frame, (2, 3), (2, 3)) == 0


def test_restrict_to_equator():
    frame = standard_frame(3)
    equator = Subspace.spanned_by(((1, 0, 0), (0, 1, 0)))
    assert restrict(frame, equator) == Frame(((-1, 0, 0), (0, -1, 0)))


def test_restrict_to_a_line_keeps_the_positive_ray():
    line = Subspace.spanned_by(((1, 1),))
    restricted = restrict(standard_frame(2), line)
    assert restricted == Frame(((-1, -1),))
    assert cone_contains(restricted, (1, 1))


def test_restrict_to_a_skew_plane():
    plane = Subspace.full(3).hyperplane((0, 1, 1))
    assert restrict(standard_frame(3), plane) == Frame(((-1, 0, 0), (0, 1, -1)))


def test_restrict_to_the_first_axis():
    frame = Frame(((-1, -1), (1, -1)))
    axis = Subspace.spanned_by(((1, 0),))
    assert restrict(frame, axis) == Frame(((1, 0),))


def test_restrict_preconditions():
    frame = Frame(((1, 0, 0), (0, 1, 0)))
    with pytest.raises(SubspaceError):
        restrict(frame, Subspace.spanned_by(((0, 0, 1),)))
    with pytest.raises(SubspaceError):
        restrict(frame, Subspace((), 3))


def test_subspace_hyperplane():
    plane = Subspace.full(3).hyperplane((0, 0, 1))
    assert plane.dim == 2
    assert plane.same(Subspace.spanned_by(((1, 0, 0), (0, 1, 0))))
    # w が S に直交するなら S 自身
    assert plane.hyperplane((0, 0, 5)) is plane


def test_halfspace_pair_contains():
    assert halfspace_pair_contains((1, 0), (0, 1), (1, 1))
    assert not halfspace_pair_contains((1, 0), (0, 1), (1, -1))
    assert halfspace_pair_contains((1, 0), (0, 1), (0, 0))
    with pytest.raises(DependentVectorsError):
        halfspace_pair_contains((1, 0), (2, 0), (1, 1))


def test_same_direction():
    assert same_direction((2, 4), (1, 2))
    assert not same_direction((1, 2), (-1, -2))
    assert not same_direction((0, 0), (1, 0))


def test_signed_permutation_action():
    frame = standard_frame(2)
    moved = apply_signed_permutation(frame, (2, 1), (1, 1))
    assert moved == Frame(((0, -1), (-1, 0)))
    assert signed_permute((1, 0), (2, 1), (1, 1)) == (0, 1)
    assert cone_contains(moved, (0, 1))
    with pytest.raises(InvalidInputError):
        validate_signed_permutation((1, 1), (1, 1), 2)
    with pytest.raises(InvalidInputError):
        validate_signed_permutation((1, 2), (1, 0), 2)


@given(seeds, rays3)
def test_exactly_one_of_x_and_minus_x(seed, ray):
    frame = RandomSource(seed).frame(3)
    minus = tuple(-c for c in ray)
    assert cone_contains(frame, ray) != cone_contains(frame, minus)
    assert cone_contains(frame, ray) != cone_contains(negate(frame), ray)


@given(seeds, rays3)
def test_signed_permutation_commutes_with_membership(seed, ray):
    source = RandomSource(seed)
    frame = source.frame(3)
    perm, signs = source.signed_permutation(3)
    moved = apply_signed_permutation(frame, perm, signs)
    assert cone_contains(moved, signed_permute(ray, perm, signs)) == cone_contains(
        frame, ray
    )


@given(seeds)
def test_canonical_frame_is_idempotent(seed):
    frame = RandomSource(seed).frame(4)
    assert frame_from_basis(frame.vectors) == frame


class TestFrameAppend:
    def test_append_canonicalizes(self):
        frame = Frame(((1, 0, 0),)).append((0, 2, 0))
        assert frame == Frame(((1, 0, 0), (0, 1, 0)))

    def test_append_names_the_non_orthogonal_pair(self):
        with pytest.raises(InvalidFrameError) as excinfo:
            Frame(((1, 0, 0), (0, 1, 0))).append((0, 1, 1))
        assert excinfo.value.rows == (2, 3)

    def test_append_rejects_zero_and_overflow(self):
        with pytest.raises(InvalidFrameError):
            Frame(((1, 0),)).append((0, 0))
        with pytest.raises(InvalidFrameError):
            standard_frame(2).append((1, 1))


def test_span_is_cached():
    frame = standard_frame(3)
    assert frame.span() is frame.span()
    assert frame.span().same(Subspace.full(3))


@given(seeds, seeds)
def test_unchecked_restrict_matches_checked(seed, other):
    source = RandomSource(seed)
    frame = source.frame(4)
    wall = frame.span().hyperplane(RandomSource(other).frame(4).last)
    restricted = restrict(frame, wall, check=False)
    assert restricted == restrict(frame, wall)
    # 検査付きで組み直しても同じフレームになる
    assert Frame(restricted.vectors) == restricted
