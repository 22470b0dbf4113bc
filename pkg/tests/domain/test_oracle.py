import pytest

from ortholattice.domain.cone import Frame, standard_frame
from ortholattice.domain.lattice import LatticeElement, standard_top
from ortholattice.domain.oracle import (
    ArcClass,
    arc_complement,
    arc_contains,
    arc_join,
    arc_leq,
    arc_meet,
    arc_to_element,
    boundary_directions,
    classify,
    exhaustive_arcs,
    find_member,
    subset_falsifier,
    verify_classification,
)
from ortholattice.shared.enums import ArcKind
from ortholattice.shared.exceptions import OracleError


def element(*vectors):
    return LatticeElement(standard_frame(2), Frame(vectors))


def test_classify_fixtures(quarter, tail45, top2, bottom2):
    assert classify(quarter) == ArcClass.init((0, 1))
    assert classify(tail45) == ArcClass.tail((1, 1))
    assert classify(top2) == ArcClass.full()
    assert classify(bottom2) == ArcClass.empty()


def test_classify_boundary_families():
    # 開上半平面 (0°, 180°) と一点 {0°}
    assert classify(element((1, 0), (0, -1))) == ArcClass.tail((1, 0), inclusive=False)
    assert classify(element((-1, 0), (0, 1))) == ArcClass.init((1, 0), inclusive=True)


def test_classify_requires_the_circle():
    with pytest.raises(OracleError):
        classify(standard_top(3))


@pytest.mark.parametrize(
    'kind, boundary, inclusive',
    [
        (ArcKind.INIT, (2, 0), False),
        (ArcKind.TAIL, (0, -1), True),
        (ArcKind.INIT, (1, 0), False),
        (ArcKind.TAIL, (1, 0), True),
        (ArcKind.EMPTY, (0, 1), False),
    ],
)
def test_invalid_arcs(kind, boundary, inclusive):
    with pytest.raises(OracleError):
        ArcClass(kind, boundary, inclusive)


def test_arc_operations():
    quarter, eighth = ArcClass.init((0, 1)), ArcClass.init((1, 1))
    tail45 = ArcClass.tail((1, 1))
    assert arc_join(eighth, quarter) == quarter
    assert arc_join(quarter, tail45) == ArcClass.full()
    assert arc_meet(quarter, tail45) == ArcClass.empty()
    assert arc_leq(eighth, quarter)
    assert not arc_leq(quarter, eighth)
    assert arc_complement(quarter) == ArcClass.tail((0, 1), inclusive=True)
    assert arc_complement(arc_complement(tail45)) == tail45


def test_arc_contains():
    quarter = ArcClass.init((0, 1))
    assert arc_contains(quarter, (1, 0))
    assert arc_contains(quarter, (3, 7))
    assert not arc_contains(quarter, (0, 1))
    assert not arc_contains(quarter, (-1, 0))
    assert not arc_contains(ArcClass.full(), (1, -1))


def test_arc_to_element_inverts_classify(quarter, tail45):
    assert arc_to_element(classify(quarter)) == quarter
    assert arc_to_element(classify(tail45)) == tail45
    for arc in exhaustive_arcs(3):
        assert classify(arc_to_element(arc)) == arc


def test_boundary_directions_are_sorted_by_angle():
    assert boundary_directions(1) == [(1, 0), (1, 1), (0, 1), (-1, 1)]
    assert len(exhaustive_arcs(1)) == 16


def test_verify_classification_small_grid():
    report = verify_classification(frame_bound=2, grid_bound=4)
    assert report.ok
    assert report.frames_checked > 0


def test_subset_falsifier(quarter, top2, bottom2):
    assert subset_falsifier(quarter, top2, 500, seed=0).verified
    result = subset_falsifier(top2, quarter, 1000, seed=0)
    assert not result.verified
    assert result.counterexample is not None
    assert find_member(bottom2, 200, seed=1).verified
    assert not find_member(quarter, 1000, seed=1).verified
