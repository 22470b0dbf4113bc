from pathlib import Path

import pytest

from ortholattice.domain.cone import Frame, standard_frame
from ortholattice.domain.lattice import LatticeElement, standard_bottom, standard_top

FIXTURES = Path(__file__).parent / 'fixtures'


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def quarter() -> LatticeElement:
    """円周の弧 [0°, 90°)。"""
    return LatticeElement(standard_frame(2), Frame(((0, 1), (-1, 0))))


@pytest.fixture
def tail45() -> LatticeElement:
    """円周の弧 [45°, 180°)。"""
    return LatticeElement(standard_frame(2), Frame(((-1, -1), (1, -1))))


@pytest.fixture
def top2() -> LatticeElement:
    return standard_top(2)


@pytest.fixture
def bottom2() -> LatticeElement:
    return standard_bottom(2)
