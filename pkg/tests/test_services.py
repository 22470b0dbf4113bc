from types import SimpleNamespace

import pytest

from ortholattice import services
from ortholattice.infrastructure.repositories.filesystem import (
    FileSystemElementRepository,
)
from ortholattice.services import ApplicationService
from ortholattice.shared.enums import BackendName
from ortholattice.shared.exceptions import InvalidInputError
from ortholattice.shared.settings import Settings


@pytest.fixture
def service():
    return ApplicationService(Settings(), FileSystemElementRepository())


@pytest.mark.parametrize('backend', list(BackendName))
def test_bench_times_only_the_untraced_join(service, monkeypatch, backend):
    events: list[str] = []
    real_join = services.join

    def recording_join(left, right, trace=None):
        events.append('plain' if trace is None else 'traced')
        return real_join(left, right, trace)

    ticks = iter(range(1000))

    def clock():
        events.append('clock')
        return float(next(ticks))

    monkeypatch.setattr(services, 'join', recording_join)
    monkeypatch.setattr(services, 'time', SimpleNamespace(perf_counter=clock))
    report = service.bench(dim=3, iters=4, backend=backend, seed=1)

    timing = False
    timed: list[str] = []
    for event in events:
        if event == 'clock':
            timing = not timing
        elif timing:
            timed.append(event)
    assert timed == ['plain'] * 4
    assert events.count('traced') == 4
    # 各区間はちょうど 1 tick
    assert report.median_ms == pytest.approx(1000.0)


def test_check_shrinks_a_failure_to_the_smallest_dimension(service):
    report = service.check(
        dims=(2, 3), iters=3, suites=['lattice_axioms'], use_broken_join=True
    )
    assert not report.passed
    assert report.shrunk is not None
    assert report.shrunk.dim == 2
    assert report.shrunk.result.name == 'lattice_axioms'
    assert not report.shrunk.result.passed
    assert 1 <= report.shrunk.coefficient_bound <= 20


def test_passing_check_has_nothing_to_shrink(service):
    report = service.check(dims=(2,), iters=2, suites=['lattice_axioms'])
    assert report.passed
    assert report.shrunk is None


def test_explicit_iters_replace_suite_iters(service):
    report = service.check(dims=(2,), iters=2, suites=['duality'])
    (result,) = report.results
    assert result.cases == 2


def test_unknown_suite_in_suite_iters():
    settings = Settings(check={'suite_iters': {'no_such_suite': 1}})
    service = ApplicationService(settings, FileSystemElementRepository())
    with pytest.raises(InvalidInputError):
        service.check(dims=(2,), suites=['order'])
