# FILE: src/ortholattice/infrastructure/suites/base.py
import time
import zlib
from abc import ABC, abstractmethod
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any, ClassVar

from loguru import logger
from numpy.random import SeedSequence

from ...domain.arith import IntVector
from ...domain.cone import Frame
from ...domain.generators import RandomSource
from ...domain.lattice import (
    JoinFunction,
    LatticeElement,
    bottom,
    complement,
    is_bottom,
    join,
    top,
)
from ...models.element import ElementFile
from ...models.results import SuiteResult
from ...shared.enums import SuiteStatus
from ...shared.settings import CheckSettings, GeneratorSettings


def broken_join(left: LatticeElement, right: LatticeElement) -> LatticeElement:
    """検証ハーネスの自己診断用に、意図的に誤った join (左の引数を返すだけ)。"""
    return right if is_bottom(left) else left


@dataclass(frozen=True)
class LatticeOps:
    """
    検証対象の束演算。join を差し替えると、meet・leq・畳み込みもそれに従います。
    プロセス間で受け渡すため、join はモジュールレベルの関数である必要があります。
    """

    join: JoinFunction = join

    def meet(self, left: LatticeElement, right: LatticeElement) -> LatticeElement:
        return complement(self.join(complement(left), complement(right)))

    def leq(self, left: LatticeElement, right: LatticeElement) -> bool:
        return self.join(left, right).same(right)

    def disjoint(self, left: LatticeElement, right: LatticeElement) -> bool:
        return self.leq(left, complement(right))

    def join_all(
        self, elements: Iterable[LatticeElement], reference: Frame
    ) -> LatticeElement:
        result = bottom(reference)
        for element in elements:
            result = self.join(result, element)
        return result

    def meet_all(
        self, elements: Iterable[LatticeElement], reference: Frame
    ) -> LatticeElement:
        result = top(reference)
        for element in elements:
            result = self.meet(result, element)
        return result


@dataclass(frozen=True)
class SuiteContext:
    """スイートに渡す実行条件。"""

    dims: tuple[int, ...]
    iters: int
    seed: int
    check: CheckSettings = field(default_factory=CheckSettings)
    generator: GeneratorSettings = field(default_factory=GeneratorSettings)
    ops: LatticeOps = field(default_factory=LatticeOps)


@dataclass
class Witness:
    """失敗したケースの証拠。要素とレイはシリアライズして報告します。"""

    message: str
    elements: dict[str, LatticeElement] = field(default_factory=dict)
    rays: dict[str, Sequence[int]] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            'message': self.message,
            'elements': {
                name: ElementFile.from_element(element).model_dump(mode='json')
                for name, element in self.elements.items()
            },
            'rays': {name: [str(c) for c in ray] for name, ray in self.rays.items()},
        }


class BaseSuite(ABC):
    """性質検査スイートの抽象基底クラス。"""

    # 特定の次元でしか意味を持たないスイート (円周オラクルなど)
    required_dim: ClassVar[int | None] = None

    def __init__(self, context: SuiteContext):
        """
        Args:
            context (SuiteContext): 次元、ケース数、シード、検証対象の演算。
        """
        self.context = context
        self.ops = context.ops
        self.cases = 0

    @property
    def iters(self) -> int:
        """次元あたりのケース数。suite_iters の個別指定があればそちらを使います。"""
        return self.context.check.suite_iters.get(self.get_suite_name(), self.context.iters)

    @classmethod
    @abstractmethod
    def get_suite_name(cls) -> str:
        """このスイートの一意な名前を返します。"""
        raise NotImplementedError

    @abstractmethod
    def _run(self) -> Witness | None:
        """
        検査を実行し、最初に見つかった失敗の証拠を返します (成功なら None)。
        実行したケース数は self.cases に数えます。
        """
        raise NotImplementedError

    def source(self, *key: int) -> RandomSource:
        """
        スイート名とキー (次元など) から決定的に派生した乱数ストリーム。
        実行順序や並列度に依存しません。
        """
        name_key = zlib.crc32(self.get_suite_name().encode('utf-8'))
        sequence = SeedSequence(self.context.seed, spawn_key=(name_key, *key))
        return RandomSource(
            sequence,
            coefficient_bound=self.context.generator.coefficient_bound,
            max_retries=self.context.generator.max_retries,
        )

    def run(self) -> SuiteResult:
        name = self.get_suite_name()
        if self.iters == 0 or (
            self.required_dim is not None and self.required_dim not in self.context.dims
        ):
            return SuiteResult(name=name, status=SuiteStatus.SKIPPED)

        started = time.perf_counter()
        with logger.contextualize(suite=name, seed=self.context.seed):
            logger.info('スイートを開始します。')
            witness = self._run()
        duration = time.perf_counter() - started

        if witness is not None:
            logger.bind(cases=self.cases, reason=witness.message).warning(
                'スイートが失敗しました。'
            )
            return SuiteResult(
                name=name,
                status=SuiteStatus.FAILED,
                cases=self.cases,
                witness=witness.to_dict(),
                message=witness.message,
                duration=duration,
            )
        logger.bind(suite=name, cases=self.cases, duration=round(duration, 3)).info(
            'スイートが成功しました。'
        )
        return SuiteResult(
            name=name, status=SuiteStatus.PASSED, cases=self.cases, duration=duration
        )

    def fail(
        self,
        message: str,
        rays: dict[str, IntVector] | None = None,
        **elements: LatticeElement,
    ) -> Witness:
        return Witness(message, dict(elements), dict(rays or {}))
