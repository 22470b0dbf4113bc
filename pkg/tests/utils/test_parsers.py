import pytest

from ortholattice.shared.exceptions import InvalidInputError
from ortholattice.utils.ray_parser import parse_dims, parse_ray
from ortholattice.utils.stats import summarize_ms


def test_parse_ray():
    assert parse_ray('1,0') == (1, 0)
    assert parse_ray(' -3, +2 ,0') == (-3, 2, 0)
    assert parse_ray(str(2**70) + ',1') == (2**70, 1)


@pytest.mark.parametrize('text', ['', '1,', '1.5,0', 'a,b', '0,0'])
def test_parse_ray_rejects(text):
    with pytest.raises(InvalidInputError):
        parse_ray(text)


@pytest.mark.parametrize(
    'text, expected',
    [('2..5', (2, 3, 4, 5)), ('3', (3,)), ('4,2,4', (2, 4)), (' 2..2 ', (2,))],
)
def test_parse_dims(text, expected):
    assert parse_dims(text) == expected


@pytest.mark.parametrize('text', ['1..3', '5..2', '0', '2..x', ''])
def test_parse_dims_rejects(text):
    with pytest.raises(InvalidInputError):
        parse_dims(text)


def test_summarize_ms():
    assert summarize_ms([]) == (0.0, 0.0)
    median, p95 = summarize_ms([0.001, 0.002, 0.003])
    assert median == pytest.approx(2.0)
    assert p95 == pytest.approx(2.9)
