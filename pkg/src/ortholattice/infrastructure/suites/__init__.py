# FILE: src/ortholattice/infrastructure/suites/__init__.py
"""
性質検査スイートのレジストリと実行器。

スイートは ALL_SUITES の順に実行され、結果の順序は並列度に依存しません。
"""

import concurrent.futures
from collections.abc import Sequence
from dataclasses import replace

from loguru import logger

from ...models.results import ShrunkFailure, SuiteResult
from ...shared.exceptions import InvalidInputError
from .algebra import (
    DualitySuite,
    JoinTrivialIntersectionSuite,
    LatticeAxiomsSuite,
    MinimalitySuite,
    OrderSuite,
)
from .base import BaseSuite, LatticeOps, SuiteContext, Witness, broken_join
from .oracle import ClassificationSuite, OracleEquivalenceSuite
from .sampling import (
    BottomUniquenessSuite,
    BoundarySuite,
    FalsifierCrossCheckSuite,
    UpperBoundSuite,
)
from .structure import CanonicalizationSuite, ConeCalculusSuite, ProjectionSuite

ALL_SUITES: tuple[type[BaseSuite], ...] = (
    LatticeAxiomsSuite,
    OrderSuite,
    DualitySuite,
    UpperBoundSuite,
    MinimalitySuite,
    BottomUniquenessSuite,
    JoinTrivialIntersectionSuite,
    OracleEquivalenceSuite,
    ClassificationSuite,
    FalsifierCrossCheckSuite,
    BoundarySuite,
    ProjectionSuite,
    CanonicalizationSuite,
    ConeCalculusSuite,
)


def suite_names() -> list[str]:
    return [suite.get_suite_name() for suite in ALL_SUITES]


def select_suites(names: Sequence[str] | None = None) -> list[type[BaseSuite]]:
    """名前でスイートを選びます。None または空なら全スイート。"""
    if not names:
        return list(ALL_SUITES)
    by_name = {suite.get_suite_name(): suite for suite in ALL_SUITES}
    unknown = [name for name in names if name not in by_name]
    if unknown:
        raise InvalidInputError(
            f'未知のスイートです: {", ".join(unknown)} '
            f'(利用可能: {", ".join(by_name)})'
        )
    # 指定の順序ではなくレジストリの順序で実行する
    return [suite for suite in ALL_SUITES if suite.get_suite_name() in names]


def _run_one(suite_cls: type[BaseSuite], context: SuiteContext) -> SuiteResult:
    return suite_cls(context).run()


def run_suites(
    suites: Sequence[type[BaseSuite]], context: SuiteContext, max_workers: int = 1
) -> list[SuiteResult]:
    """スイートを実行します。max_workers > 1 ならプロセスプールで並列に実行します。"""
    if max_workers <= 1 or len(suites) <= 1:
        return [_run_one(suite, context) for suite in suites]

    logger.bind(workers=max_workers, suites=len(suites)).debug(
        'スイートを並列に実行します。'
    )
    with concurrent.futures.ProcessPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(_run_one, suites, [context] * len(suites)))


def shrink_failure(
    suite_cls: type[BaseSuite], context: SuiteContext
) -> ShrunkFailure | None:
    """
    失敗したスイートを縮小して再実行し、より小さな証拠を探します。

    1. 次元を一つずつ昇順に試し、最初に失敗した次元を選びます。
    2. その次元で係数の上限を半分にしながら、失敗が再現する限り縮めます。

    ストリームはスイート名と次元から派生するので、次元を絞っても
    その次元のケース列は元の実行と同じです。どの次元でも再現しなければ None。
    """
    for dim in sorted(context.dims):
        trial = replace(context, dims=(dim,))
        result = _run_one(suite_cls, trial)
        if not result.passed:
            break
    else:
        return None

    bound = context.generator.coefficient_bound
    shrunk = ShrunkFailure(result, dim, bound)
    while bound > 1:
        bound //= 2
        generator = context.generator.model_copy(update={'coefficient_bound': bound})
        result = _run_one(suite_cls, replace(trial, generator=generator))
        if result.passed:
            break
        shrunk = ShrunkFailure(result, dim, bound)
    logger.bind(
        suite=suite_cls.get_suite_name(), dim=shrunk.dim, bound=shrunk.coefficient_bound
    ).info('失敗の証拠を縮小しました。')
    return shrunk


__all__ = [
    'ALL_SUITES',
    'BaseSuite',
    'LatticeOps',
    'SuiteContext',
    'Witness',
    'broken_join',
    'run_suites',
    'select_suites',
    'shrink_failure',
    'suite_names',
]
