# FILE: src/ortholattice/models/results.py
"""検証スイートとベンチマークの結果を格納するデータモデル。"""

from dataclasses import dataclass, field
from typing import Any

from ..shared.enums import BackendName, SuiteStatus


@dataclass
class SuiteResult:
    """一つの検証スイートの実行結果。"""

    name: str
    status: SuiteStatus
    cases: int = 0
    witness: dict[str, Any] | None = None
    message: str | None = None
    duration: float | None = None

    @property
    def passed(self) -> bool:
        return self.status is not SuiteStatus.FAILED


@dataclass
class ShrunkFailure:
    """
    失敗を縮小した結果。失敗したスイートを次元ごとに再実行して最小の次元を選び、
    さらに乱数の係数の上限を半分ずつにしても失敗する限り縮めます。
    """

    result: SuiteResult
    dim: int
    coefficient_bound: int


@dataclass
class CheckReport:
    """check コマンド全体の結果。スイートの並びはシードから決定的に定まります。"""

    seed: int
    dims: tuple[int, ...]
    results: list[SuiteResult] = field(default_factory=list)
    shrunk: ShrunkFailure | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def first_failure(self) -> SuiteResult | None:
        return next((r for r in self.results if not r.passed), None)


@dataclass
class BenchReport:
    """join のベンチマーク結果。時間はミリ秒単位です。"""

    dim: int
    iters: int
    backend: BackendName
    median_ms: float
    p95_ms: float
    disagreement_rate: float | None = None
    max_depth: int = 0
    bit_lengths: dict[int, int] = field(default_factory=dict)
