# FILE: src/ortholattice/utils/logging.py
from loguru import logger
from rich.console import Console
from rich.logging import RichHandler

from ..shared.constants import VERIFICATION_PATHS


def setup_logging(level: str = 'INFO', serialize_to_file: bool = False) -> None:
    """
    LoguruをRichHandlerとJSONファイル出力用に設定します。
    標準出力は結果の JSON 専用なので、コンソールのログは標準エラーに出します。
    """
    logger.remove()  # デフォルトハンドラの削除

    # コンソール用のハンドラ
    logger.add(
        RichHandler(
            console=Console(stderr=True),
            rich_tracebacks=True,
            show_path=False,
            markup=False,
            log_time_format='[%X]',
        ),
        level=level.upper(),
        format='{message}',  # RichHandlerにフォーマットを完全に委任
        backtrace=False,
        diagnose=False,
    )

    # ファイル出力用のハンドラ (JSON形式)
    if serialize_to_file:
        logger.add(
            VERIFICATION_PATHS.LOG_FILE_TEMPLATE,
            level='DEBUG',  # join の分岐と再帰の深さまで記録する
            serialize=True,
            enqueue=True,
            rotation='10 MB',
            retention='7 days',
            backtrace=True,
            diagnose=False,
        )

    logger.bind(level=level.upper(), file_output=serialize_to_file).debug(
        'ロガーが設定されました。'
    )
