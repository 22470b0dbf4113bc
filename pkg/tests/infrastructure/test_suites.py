import pytest

from ortholattice.infrastructure.suites import (
    ALL_SUITES,
    LatticeOps,
    SuiteContext,
    broken_join,
    run_suites,
    select_suites,
    shrink_failure,
    suite_names,
)
from ortholattice.shared.enums import SuiteStatus
from ortholattice.shared.exceptions import InvalidInputError
from ortholattice.shared.settings import CheckSettings

SMALL = CheckSettings(
    samples=20,
    ray_samples=20,
    falsifier_samples=500,
    exhaustive_bound=2,
    exhaustive_pair_bound=1,
    oracle_pairs=10,
    suite_iters={},
)


def context(dims=(2, 3), iters=3, seed=0, ops=None):
    return SuiteContext(
        dims=dims, iters=iters, seed=seed, check=SMALL, ops=ops or LatticeOps()
    )


def test_suite_names_are_unique():
    names = suite_names()
    assert len(names) == len(set(names)) == len(ALL_SUITES)
    assert names[0] == 'lattice_axioms'


def test_all_suites_pass_on_the_exact_join():
    results = run_suites(select_suites(), context())
    failures = [(r.name, r.message) for r in results if not r.passed]
    assert failures == []
    assert all(r.status is SuiteStatus.PASSED for r in results)
    assert all(r.cases > 0 for r in results)


@pytest.mark.parametrize('name', ['lattice_axioms', 'oracle_equivalence'])
def test_broken_join_is_detected(name):
    ops = LatticeOps(join=broken_join)
    (result,) = run_suites(select_suites([name]), context(dims=(2,), iters=5, ops=ops))
    assert result.status is SuiteStatus.FAILED
    assert result.witness is not None
    assert result.witness['message'] == result.message
    assert result.witness['elements']


def test_suite_iters_override_the_shared_count():
    check = SMALL.model_copy(update={'suite_iters': {'duality': 7, 'order': 0}})
    ctx = SuiteContext(dims=(2,), iters=3, seed=0, check=check)
    axioms, order, duality = run_suites(
        select_suites(['duality', 'order', 'lattice_axioms']), ctx
    )
    assert (duality.name, duality.cases) == ('duality', 7)
    assert (order.name, order.status) == ('order', SuiteStatus.SKIPPED)
    assert (axioms.name, axioms.cases) == ('lattice_axioms', 3)


def test_zero_iterations_skip_everything():
    results = run_suites(select_suites(), context(iters=0))
    assert {r.status for r in results} == {SuiteStatus.SKIPPED}


def test_circle_suites_need_dimension_two():
    suites = select_suites(['oracle_equivalence', 'classification'])
    results = run_suites(suites, context(dims=(3,)))
    assert [r.status for r in results] == [SuiteStatus.SKIPPED] * 2


def test_select_suites():
    selected = select_suites(['duality', 'lattice_axioms'])
    assert [s.get_suite_name() for s in selected] == ['lattice_axioms', 'duality']
    with pytest.raises(InvalidInputError):
        select_suites(['no_such_suite'])


def test_results_are_deterministic():
    suites = select_suites(['lattice_axioms', 'upper_bound'])
    first = run_suites(suites, context(seed=42))
    second = run_suites(suites, context(seed=42))
    assert [(r.name, r.status, r.cases) for r in first] == [
        (r.name, r.status, r.cases) for r in second
    ]


def test_shrink_failure_picks_the_smallest_failing_dimension():
    (suite,) = select_suites(['lattice_axioms'])
    ops = LatticeOps(join=broken_join)
    shrunk = shrink_failure(suite, context(dims=(3, 2), iters=5, ops=ops))
    assert shrunk is not None
    assert shrunk.dim == 2
    assert shrunk.result.witness is not None
    assert 1 <= shrunk.coefficient_bound <= 20


def test_shrink_failure_without_a_failure():
    (suite,) = select_suites(['duality'])
    assert shrink_failure(suite, context(dims=(2,))) is None
