# FILE: src/ortholattice/services.py
import time
from collections.abc import Sequence
from pathlib import Path

from loguru import logger

from .domain.arith import FloatBackend, IntVector
from .domain.generators import GenSpec, RandomSource, random_element
from .domain.interfaces import IElementRepository
from .domain.lattice import (
    JoinTrace,
    LatticeElement,
    complement,
    convert_element,
    equator,
    is_bottom,
    join,
    leq,
    meet,
    member,
    restrict_element,
)
from .infrastructure.suites import (
    LatticeOps,
    SuiteContext,
    broken_join,
    run_suites,
    select_suites,
    shrink_failure,
)
from .models.results import BenchReport, CheckReport
from .shared.enums import BackendName
from .shared.exceptions import InvalidInputError, OrthoLatticeError
from .shared.settings import Settings
from .utils.stats import summarize_ms


class ApplicationService:
    """
    アプリケーションの全ユースケースを統括するサービスレイヤー。
    依存関係の構築(DI)はコンポジションルート(cli.py)で行われ、
    このクラスは注入された依存関係を利用して束の演算と検証を実行します。
    """

    def __init__(self, settings: Settings, repository: IElementRepository):
        self.settings = settings
        self.repository = repository
        logger.debug('ApplicationService が初期化されました。')

    # --- 要素ファイルに対する演算 ---

    def load(self, path: Path) -> LatticeElement:
        return self.repository.load(path)

    def render(self, element: LatticeElement) -> bytes:
        """元を正規形の JSON バイト列にします。CLI は常にこの形で出力します。"""
        return self.repository.dumps(element)

    def join(self, left: Path, right: Path) -> LatticeElement:
        return join(self.load(left), self.load(right))

    def meet(self, left: Path, right: Path) -> LatticeElement:
        return meet(self.load(left), self.load(right))

    def leq(self, left: Path, right: Path) -> bool:
        return leq(self.load(left), self.load(right))

    def member(self, path: Path, ray: IntVector) -> bool:
        element = self.load(path)
        if len(ray) != element.ambient_dim:
            raise InvalidInputError(
                f'レイの次元 ({len(ray)}) が元の次元 ({element.ambient_dim}) と一致しません。'
            )
        return member(ray, element)

    def canon(self, path: Path) -> LatticeElement:
        return self.load(path)

    def complement(self, path: Path) -> LatticeElement:
        return complement(self.load(path))

    def is_bottom(self, path: Path) -> bool:
        return is_bottom(self.load(path))

    def restrict(
        self, path: Path, drop_last: bool = False, normal: IntVector | None = None
    ) -> LatticeElement:
        """
        赤道 (--drop-last) または参照空間と normal^⊥ の共通部分へ制限します。

        Raises:
            InvalidInputError: 指定がちょうど一つでない、または制限先が零空間の場合。
        """
        if drop_last == (normal is not None):
            raise InvalidInputError(
                '--drop-last と --normal のどちらか一方を指定してください。'
            )
        element = self.load(path)
        if element.rank < 2:
            raise InvalidInputError('1 次元の元はこれ以上制限できません。')
        if drop_last:
            return equator(element)
        assert normal is not None
        if len(normal) != element.ambient_dim:
            raise InvalidInputError(
                f'法線の次元 ({len(normal)}) が元の次元 ({element.ambient_dim}) と一致しません。'
            )
        return restrict_element(element, element.reference.span().hyperplane(normal))

    def random(self, dim: int, seed: int) -> LatticeElement:
        """GenSpec から決定的に元を生成します。"""
        try:
            spec = GenSpec(
                seed=seed,
                ambient_dim=dim,
                coefficient_bound=self.settings.generator.coefficient_bound,
            )
        except OrthoLatticeError as e:
            raise InvalidInputError(str(e)) from e
        return random_element(spec)

    # --- 検証スイート ---

    def check(
        self,
        dims: tuple[int, ...] | None = None,
        iters: int | None = None,
        seed: int | None = None,
        samples: int | None = None,
        suites: Sequence[str] | None = None,
        use_broken_join: bool = False,
    ) -> CheckReport:
        """
        性質検査スイートを実行します。引数で指定しなかった値は設定から取ります。
        iters を明示するとスイートごとのケース数 (suite_iters) は使いません。
        失敗した場合は、その証拠を縮小したものを report.shrunk に入れます。
        """
        config = self.settings.check
        dims = dims or tuple(range(config.dim_min, config.dim_max + 1))
        if iters is not None:
            config = config.model_copy(update={'suite_iters': {}})
        iters = config.iters if iters is None else iters
        seed = config.seed if seed is None else seed
        if iters < 0:
            raise InvalidInputError(f'ケース数は 0 以上である必要があります: {iters}')
        if not 0 <= seed < 2**64:
            raise InvalidInputError(f'シードは 0 以上 2^64 未満である必要があります: {seed}')
        if samples is not None:
            if samples < 1:
                raise InvalidInputError(f'サンプル数は 1 以上である必要があります: {samples}')
            config = config.model_copy(update={'samples': samples})
        # suite_iters の名前も --suite と同じ規則で検証する
        select_suites(list(config.suite_iters))

        selected = select_suites(suites)
        context = SuiteContext(
            dims=dims,
            iters=iters,
            seed=seed,
            check=config,
            generator=self.settings.generator,
            ops=LatticeOps(join=broken_join) if use_broken_join else LatticeOps(),
        )
        if use_broken_join:
            logger.warning('意図的に誤った join で検証ハーネスを自己診断します。')

        with logger.contextualize(seed=seed, dims=list(dims), iters=iters):
            logger.bind(suites=len(selected)).info('検証を開始します。')
            results = run_suites(selected, context, max_workers=config.max_workers)

        report = CheckReport(seed=seed, dims=dims, results=results)
        if report.passed:
            logger.bind(suites=len(results)).success('✅ すべてのスイートが成功しました。')
            return report

        failure = report.first_failure
        assert failure is not None
        logger.bind(suite=failure.name).error('❌ 性質の違反が見つかりました。')
        suite_cls = next(s for s in selected if s.get_suite_name() == failure.name)
        report.shrunk = shrink_failure(suite_cls, context)
        return report

    # --- ベンチマーク ---

    def bench(
        self,
        dim: int | None = None,
        iters: int | None = None,
        backend: BackendName = BackendName.EXACT,
        seed: int | None = None,
    ) -> BenchReport:
        """
        ランダムな組に対する join の所要時間を計測します。浮動小数点バックエンドでは
        同じ入力に対する厳密な結果との不一致率も求めます。

        Raises:
            InvalidInputError: 次元が 2 未満、またはケース数が 1 未満の場合。
        """
        config = self.settings.bench
        dim = config.dim if dim is None else dim
        iters = config.iters if iters is None else iters
        seed = config.seed if seed is None else seed
        if dim < 2:
            raise InvalidInputError(f'ベンチマークの次元は 2 以上である必要があります: {dim}')
        if iters < 1:
            raise InvalidInputError(f'ケース数は 1 以上である必要があります: {iters}')

        source = RandomSource(
            seed,
            coefficient_bound=self.settings.generator.coefficient_bound,
            max_retries=self.settings.generator.max_retries,
        )
        pairs = [(source.element(dim), source.element(dim)) for _ in range(iters)]
        float_backend = FloatBackend(self.settings.arith.float_tolerance)

        durations: list[float] = []
        disagreements = 0
        trace = JoinTrace()
        with logger.contextualize(dim=dim, backend=backend.value, seed=seed):
            for left, right in pairs:
                # 計測区間にはトレースを含めない
                expected = join(left, right, trace)
                if backend is BackendName.EXACT:
                    started = time.perf_counter()
                    join(left, right)
                    durations.append(time.perf_counter() - started)
                    continue
                x = convert_element(left, float_backend)
                y = convert_element(right, float_backend)
                started = time.perf_counter()
                try:
                    result = join(x, y)
                except OrthoLatticeError:
                    # 丸め誤差でフレームの不変条件が壊れた場合も不一致に数える
                    durations.append(time.perf_counter() - started)
                    disagreements += 1
                    continue
                durations.append(time.perf_counter() - started)
                if not convert_element(expected, float_backend).cone.same(result.cone):
                    disagreements += 1

            for depth, bits in sorted(trace.bit_lengths.items()):
                logger.bind(depth=depth, bits=bits).debug('係数のビット長')

        median_ms, p95_ms = summarize_ms(durations)
        report = BenchReport(
            dim=dim,
            iters=iters,
            backend=backend,
            median_ms=median_ms,
            p95_ms=p95_ms,
            disagreement_rate=(
                disagreements / iters if backend is BackendName.FLOAT else None
            ),
            max_depth=trace.max_depth,
            bit_lengths=dict(trace.bit_lengths),
        )
        logger.bind(median_ms=round(median_ms, 3), p95_ms=round(p95_ms, 3)).info(
            'ベンチマークが完了しました。'
        )
        return report
