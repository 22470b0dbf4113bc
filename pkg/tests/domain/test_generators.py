import pytest
from numpy.random import SeedSequence

from ortholattice.domain.arith import dot, is_primitive
from ortholattice.domain.cone import Frame, Subspace
from ortholattice.domain.generators import (
    GenSpec,
    RandomSource,
    random_element,
    random_frame,
    random_ray,
    signed_permutation_element,
)
from ortholattice.shared.exceptions import GenerationError, InvalidInputError


def test_same_spec_gives_same_values():
    spec = GenSpec(seed=7, ambient_dim=3)
    assert random_element(spec) == random_element(spec)
    assert random_frame(spec) == random_frame(spec)
    assert random_ray(spec) == random_ray(spec)


def test_different_seeds_differ():
    frames = {random_frame(GenSpec(seed=s, ambient_dim=4)) for s in range(10)}
    assert len(frames) > 1


@pytest.mark.parametrize(
    'kwargs',
    [
        {'seed': -1, 'ambient_dim': 2},
        {'seed': 2**64, 'ambient_dim': 2},
        {'seed': 0, 'ambient_dim': 0},
        {'seed': 0, 'ambient_dim': 2, 'coefficient_bound': 0},
    ],
)
def test_invalid_gen_spec(kwargs):
    with pytest.raises(InvalidInputError):
        GenSpec(**kwargs)


def test_ray_is_primitive_and_bounded():
    source = RandomSource(3, coefficient_bound=5)
    for _ in range(100):
        ray = source.ray(4)
        assert len(ray) == 4
        assert is_primitive(ray)
        assert all(abs(c) <= 5 for c in ray)


def test_frame_has_full_rank():
    frame = RandomSource(1).frame(5)
    assert frame.rank == 5
    assert frame.ambient_dim == 5


def test_degenerate_element_ends_with_a_unit_vector():
    source = RandomSource(11)
    for _ in range(20):
        element = source.degenerate_element(3)
        assert element.normal in ((0, 0, 1), (0, 0, -1))


def test_signed_permutation_element():
    element = signed_permutation_element((2, 1), (1, -1))
    assert element.cone == Frame(((0, 1), (-1, 0)))


def test_ray_in_subspace():
    plane = Subspace.spanned_by(((1, 1, 0), (0, 0, 1)))
    source = RandomSource(5)
    for _ in range(50):
        assert plane.contains(source.ray_in(plane))
    with pytest.raises(GenerationError):
        source.ray_in(Subspace((), 3))


def test_guided_ray_hits_frame_faces():
    frame = Frame(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    source = RandomSource(9)
    rays = [source.guided_ray(3, (frame,)) for _ in range(200)]
    assert all(is_primitive(r) for r in rays)
    # 座標面上のレイ (いずれかの成分がゼロ) が十分に含まれる
    assert sum(1 for r in rays if 0 in r) > 20


def test_spawned_streams_are_deterministic():
    first = [child.ray(3) for child in RandomSource(SeedSequence(4)).spawn(3)]
    second = [child.ray(3) for child in RandomSource(SeedSequence(4)).spawn(3)]
    assert first == second


def test_generated_frames_are_orthogonal():
    frame = RandomSource(21).frame(4)
    for i, u in enumerate(frame.vectors):
        for v in frame.vectors[i + 1 :]:
            assert dot(u, v) == 0
