# FILE: src/ortholattice/entrypoints/cli.py
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Any

import canonicaljson
import typer
from loguru import logger
from rich.console import Console
from rich.table import Table

from ..domain.lattice import LatticeElement
from ..infrastructure.repositories.filesystem import FileSystemElementRepository
from ..infrastructure.suites import suite_names
from ..models.results import BenchReport, CheckReport
from ..services import ApplicationService
from ..shared.constants import EXIT_CODES
from ..shared.enums import BackendName, SuiteStatus
from ..shared.exceptions import (
    ArithmeticDomainError,
    ElementFileError,
    InvalidFrameError,
    InvalidInputError,
    OrthoLatticeError,
    ReferenceMismatchError,
    SettingsError,
    SubspaceError,
)
from ..shared.settings import Settings
from ..utils.logging import setup_logging
from ..utils.ray_parser import parse_dims, parse_ray

app = typer.Typer(
    help='直交群 O(n+1) の弱順序束の元を正規フレームで表し、結び・交わり・順序を厳密に計算するコマンドラインツールです。',
    rich_markup_mode='markdown',
    no_args_is_help=True,
)

FileArgument = Annotated[
    Path,
    typer.Argument(
        help='要素ファイル (UTF-8 JSON) へのパス。',
        dir_okay=False,
        metavar='FILE',
    ),
]


def _initialize_settings(config_file: Path | None, log_level: str | None) -> Settings:
    """設定オブジェクトを初期化するヘルパー関数。log_level が None なら設定の値を使います。"""
    overrides: dict[str, Any] = {} if log_level is None else {'log_level': log_level}
    try:
        return Settings(_config_file=config_file, **overrides)
    except SettingsError as e:
        logger.bind(error=str(e)).error('❌ 設定エラーが発生しました。')
        raise typer.Exit(code=EXIT_CODES.INPUT_ERROR) from e


@contextmanager
def _exit_on_error() -> Iterator[None]:
    """ドメインの例外を終了コードに対応付けます。"""
    try:
        yield
    except ReferenceMismatchError as e:
        logger.bind(error=str(e)).error('❌ 参照フレームが一致しません。')
        raise typer.Exit(code=EXIT_CODES.INCOMPATIBLE) from e
    except (
        ElementFileError,
        InvalidInputError,
        InvalidFrameError,
        SubspaceError,
        ArithmeticDomainError,
    ) as e:
        logger.bind(error=str(e)).error('❌ 入力が不正です: {}', e)
        raise typer.Exit(code=EXIT_CODES.INPUT_ERROR) from e


def _emit_element(service: ApplicationService, element: LatticeElement) -> None:
    typer.echo(service.render(element).decode('utf-8'))


def _emit_verdict(verdict: bool) -> None:
    """true/false を出力し、終了コード 0/1 で終了します。"""
    typer.echo('true' if verdict else 'false')
    raise typer.Exit(code=EXIT_CODES.TRUE if verdict else EXIT_CODES.FALSE)


@app.callback()
def main_callback(
    ctx: typer.Context,
    verbose: Annotated[
        bool,
        typer.Option(
            '-v',
            '--verbose',
            help='詳細なデバッグログ (join の分岐と再帰の深さ) を有効にします。',
            show_default=False,
        ),
    ] = False,
    config: Annotated[
        Path | None,
        typer.Option(
            '-c',
            '--config',
            help='カスタム設定TOMLファイルへのパス。',
            exists=True,
            file_okay=True,
            dir_okay=False,
            readable=True,
            resolve_path=True,
        ),
    ] = None,
    log_file: Annotated[
        bool,
        typer.Option(
            '--log-file',
            help='ログをJSON形式でファイルに出力します。',
            show_default=False,
        ),
    ] = False,
) -> None:
    """
    Weak-order lattice of O(n+1)
    """
    setup_logging('DEBUG' if verbose else 'INFO', serialize_to_file=log_file)

    settings = _initialize_settings(config, 'DEBUG' if verbose else None)
    if not verbose and settings.log_level != 'INFO':
        # -v がなければ設定ファイルや環境変数のログレベルに従う
        setup_logging(settings.log_level, serialize_to_file=log_file)
    ctx.obj = ApplicationService(
        settings=settings, repository=FileSystemElementRepository()
    )


@app.command()
def join(ctx: typer.Context, file1: FileArgument, file2: FileArgument) -> None:
    """二つの元の結び (最小上界) を正規形で出力します。"""
    service: ApplicationService = ctx.obj
    with _exit_on_error():
        _emit_element(service, service.join(file1, file2))


@app.command()
def meet(ctx: typer.Context, file1: FileArgument, file2: FileArgument) -> None:
    """二つの元の交わり (最大下界) を正規形で出力します。"""
    service: ApplicationService = ctx.obj
    with _exit_on_error():
        _emit_element(service, service.meet(file1, file2))


@app.command()
def leq(ctx: typer.Context, file1: FileArgument, file2: FileArgument) -> None:
    """FILE1 ≤ FILE2 なら true (終了コード 0)、そうでなければ false (1)。"""
    service: ApplicationService = ctx.obj
    with _exit_on_error():
        verdict = service.leq(file1, file2)
    _emit_verdict(verdict)


@app.command()
def member(
    ctx: typer.Context,
    file: FileArgument,
    ray: Annotated[
        str,
        typer.Option('--ray', help="カンマ区切りの整数で表したレイ (例: '1,0')。"),
    ],
) -> None:
    """レイが元に属するなら true (終了コード 0)、そうでなければ false (1)。"""
    service: ApplicationService = ctx.obj
    with _exit_on_error():
        verdict = service.member(file, parse_ray(ray))
    _emit_verdict(verdict)


@app.command()
def canon(ctx: typer.Context, file: FileArgument) -> None:
    """要素ファイルを検証し、正規形で出力し直します。"""
    service: ApplicationService = ctx.obj
    with _exit_on_error():
        _emit_element(service, service.canon(file))


@app.command()
def complement(ctx: typer.Context, file: FileArgument) -> None:
    """正系における補元を出力します。"""
    service: ApplicationService = ctx.obj
    with _exit_on_error():
        _emit_element(service, service.complement(file))


@app.command('is-bottom')
def is_bottom(ctx: typer.Context, file: FileArgument) -> None:
    """元が空集合 (bottom) なら true (終了コード 0)、そうでなければ false (1)。"""
    service: ApplicationService = ctx.obj
    with _exit_on_error():
        verdict = service.is_bottom(file)
    _emit_verdict(verdict)


@app.command()
def restrict(
    ctx: typer.Context,
    file: FileArgument,
    drop_last: Annotated[
        bool,
        typer.Option(
            '--drop-last',
            help='参照フレームの最後のベクトルを除いた部分空間 (赤道) に制限します。',
            show_default=False,
        ),
    ] = False,
    normal: Annotated[
        str | None,
        typer.Option('--normal', help='参照空間と normal^⊥ の共通部分に制限します。'),
    ] = None,
) -> None:
    """元を部分空間に制限し、部分束の元として出力します。"""
    service: ApplicationService = ctx.obj
    with _exit_on_error():
        normal_ray = parse_ray(normal) if normal is not None else None
        _emit_element(
            service, service.restrict(file, drop_last=drop_last, normal=normal_ray)
        )


@app.command()
def random(
    ctx: typer.Context,
    dim: Annotated[int, typer.Option('--dim', help='全空間の次元。')],
    seed: Annotated[int, typer.Option('--seed', help='シード (十進整数)。')] = 0,
) -> None:
    """シードから決定的に生成した元を出力します。"""
    service: ApplicationService = ctx.obj
    with _exit_on_error():
        _emit_element(service, service.random(dim, seed))


def _print_check_report(report: CheckReport) -> None:
    console = Console()
    table = Table(title=f'check (seed={report.seed}, dims={list(report.dims)})')
    table.add_column('suite')
    table.add_column('status')
    table.add_column('cases', justify='right')
    table.add_column('time (s)', justify='right')
    styles = {
        SuiteStatus.PASSED: 'green',
        SuiteStatus.FAILED: 'bold red',
        SuiteStatus.SKIPPED: 'dim',
    }
    for result in report.results:
        table.add_row(
            result.name,
            f'[{styles[result.status]}]{result.status.value}[/]',
            str(result.cases),
            f'{result.duration:.2f}' if result.duration is not None else '-',
        )
    console.print(table)


@app.command()
def check(
    ctx: typer.Context,
    dims: Annotated[
        str | None,
        typer.Option('--dims', help="検証する次元 ('2..5'、'3'、'2,4')。"),
    ] = None,
    iters: Annotated[
        int | None, typer.Option(
            '--iters',
            help='全スイート共通の次元ごとのケース数 (設定の suite_iters より優先)。',
        )
    ] = None,
    seed: Annotated[int | None, typer.Option('--seed', help='ルートシード。')] = None,
    samples: Annotated[
        int | None,
        typer.Option('--samples', help='上界の検査で join ごとに引くレイの数。'),
    ] = None,
    suite: Annotated[
        list[str] | None,
        typer.Option(
            '--suite',
            help=f'実行するスイート (複数指定可)。利用可能: {", ".join(suite_names())}',
        ),
    ] = None,
    broken_join: Annotated[
        bool,
        typer.Option('--broken-join', hidden=True),
    ] = False,
) -> None:
    """性質検査スイートを実行し、スイートごとの結果を表で出力します。"""
    service: ApplicationService = ctx.obj
    with _exit_on_error():
        report = service.check(
            dims=parse_dims(dims) if dims is not None else None,
            iters=iters,
            seed=seed,
            samples=samples,
            suites=suite,
            use_broken_join=broken_join,
        )
    _print_check_report(report)

    failure = report.first_failure
    if failure is None:
        raise typer.Exit(code=EXIT_CODES.TRUE)
    # 縮小できた場合は最小の次元と係数の上限で再現した証拠を出す
    payload: dict[str, Any] = {'suite': failure.name, 'witness': failure.witness}
    if report.shrunk is not None:
        payload = {
            'suite': failure.name,
            'dim': report.shrunk.dim,
            'coefficient_bound': report.shrunk.coefficient_bound,
            'witness': report.shrunk.result.witness,
        }
    typer.echo(canonicaljson.encode_canonical_json(payload).decode('utf-8'))
    raise typer.Exit(code=EXIT_CODES.FALSE)


def _print_bench_report(report: BenchReport) -> None:
    console = Console()
    table = Table(title=f'bench (dim={report.dim}, iters={report.iters})')
    table.add_column('backend')
    table.add_column('median (ms)', justify='right')
    table.add_column('p95 (ms)', justify='right')
    table.add_column('disagreement', justify='right')
    table.add_column('max depth', justify='right')
    table.add_row(
        report.backend.value,
        f'{report.median_ms:.3f}',
        f'{report.p95_ms:.3f}',
        f'{report.disagreement_rate:.4f}' if report.disagreement_rate is not None else '-',
        str(report.max_depth),
    )
    console.print(table)


@app.command()
def bench(
    ctx: typer.Context,
    dim: Annotated[int | None, typer.Option('--dim', help='次元 (2 以上)。')] = None,
    iters: Annotated[
        int | None, typer.Option('--iters', help='計測する join の回数。')
    ] = None,
    backend: Annotated[
        BackendName,
        typer.Option('--backend', help='スカラー演算バックエンド。', case_sensitive=False),
    ] = BackendName.EXACT,
    seed: Annotated[int | None, typer.Option('--seed', help='入力を生成するシード。')] = None,
) -> None:
    """ランダムな組に対する join の所要時間 (中央値・p95) を計測します。"""
    service: ApplicationService = ctx.obj
    with _exit_on_error():
        report = service.bench(dim=dim, iters=iters, backend=backend, seed=seed)
    _print_bench_report(report)


@logger.catch(exclude=OrthoLatticeError)
def run_app() -> None:
    """
    アプリケーション全体を@logger.catchでラップし、
    制御下の例外は個別処理、それ以外をLoguruに記録させるためのラッパー関数。
    """
    try:
        app()
    except OrthoLatticeError as e:
        logger.bind(error=str(e)).error('❌ 処理中にエラーが発生しました。')
        raise typer.Exit(code=EXIT_CODES.INPUT_ERROR) from e
