import json

import pytest

from ortholattice.domain.cone import Frame, standard_frame
from ortholattice.infrastructure.repositories.filesystem import (
    FileSystemElementRepository,
)
from ortholattice.shared.exceptions import ElementFileError

QUARTER_BYTES = (
    b'{"ambient":2,"frame":[["0","1"],["-1","0"]],'
    b'"reference":[["-1","0"],["0","-1"]]}'
)


@pytest.fixture
def repository():
    return FileSystemElementRepository()


def write(tmp_path, payload, name='element.json'):
    path = tmp_path / name
    text = payload if isinstance(payload, str) else json.dumps(payload)
    path.write_text(text, encoding='utf-8')
    return path


def test_load_fills_in_the_standard_reference(repository, fixtures_dir, quarter):
    element = repository.load(fixtures_dir / 'quarter.json')
    assert element == quarter
    assert element.reference == standard_frame(2)


def test_load_explicit_reference(repository, fixtures_dir, tail45):
    assert repository.load(fixtures_dir / 'tail45.json') == tail45


def test_dumps_is_canonical(repository, quarter):
    assert repository.dumps(quarter) == QUARTER_BYTES


def test_save_and_reload(repository, tmp_path, tail45):
    path = tmp_path / 'out' / 'tail45.json'
    repository.save(tail45, path)
    assert repository.load(path) == tail45
    assert path.read_bytes() == repository.dumps(tail45)


def test_big_integers_survive(repository, tmp_path):
    big = 2**80 + 1
    path = write(
        tmp_path, {'ambient': 2, 'frame': [[str(big), '1'], ['-1', str(big)]]}
    )
    element = repository.load(path)
    assert element.cone == Frame(((big, 1), (-1, big)))
    assert str(big).encode() in repository.dumps(element)


def test_invalid_json(repository, tmp_path):
    path = write(tmp_path, '{"ambient": 2,')
    with pytest.raises(ElementFileError) as excinfo:
        repository.load(path)
    assert excinfo.value.path == str(path)


def test_missing_file(repository, tmp_path):
    with pytest.raises(ElementFileError):
        repository.load(tmp_path / 'missing.json')


@pytest.mark.parametrize(
    'payload',
    [
        {'ambient': 2, 'frame': [['1', '0'], ['0']]},
        {'ambient': 2, 'frame': [['1.5', '0'], ['0', '1']]},
        {'ambient': 2, 'frame': [['1', '0'], ['0', '1']], 'extra': 1},
        {'ambient': 2, 'frame': []},
        {'ambient': 0, 'frame': [[]]},
        {'frame': [['1', '0'], ['0', '1']]},
    ],
)
def test_schema_errors(repository, tmp_path, payload):
    with pytest.raises(ElementFileError):
        repository.load(write(tmp_path, payload))


def test_non_primitive_row_is_reported(repository, tmp_path):
    path = write(tmp_path, {'ambient': 2, 'frame': [['2', '0'], ['0', '1']]})
    with pytest.raises(ElementFileError, match='行 1'):
        repository.load(path)


def test_non_orthogonal_rows_are_reported(repository, fixtures_dir):
    with pytest.raises(ElementFileError, match='行 1 と 2'):
        repository.load(fixtures_dir / 'not_orthogonal.json')


def test_span_mismatch(repository, tmp_path):
    path = write(
        tmp_path,
        {'ambient': 3, 'frame': [['1', '0', '0'], ['0', '1', '0']]},
    )
    with pytest.raises(ElementFileError):
        repository.load(path)
