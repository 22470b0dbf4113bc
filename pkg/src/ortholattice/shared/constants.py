# src/ortholattice/shared/constants.py
from dataclasses import dataclass
from typing import Final


# --- 1. Exit Codes ---
@dataclass(frozen=True)
class ExitCodes:
    """
    CLIの終了コード。
    0/1 は判定結果 (true/false)、2 は入力エラー、3 は参照フレームの不一致。
    """

    TRUE: int = 0
    FALSE: int = 1
    INPUT_ERROR: int = 2
    INCOMPATIBLE: int = 3


EXIT_CODES: Final = ExitCodes()


# --- 2. Element File Keys ---
@dataclass(frozen=True)
class ElementFileKeys:
    """要素ファイル(JSON)のキー名"""

    AMBIENT: str = 'ambient'
    FRAME: str = 'frame'
    REFERENCE: str = 'reference'


ELEMENT_KEYS: Final = ElementFileKeys()


# --- 3. Numeric Defaults ---
@dataclass(frozen=True)
class NumericDefaults:
    """乱数生成・浮動小数点バックエンドの既定値"""

    COEFFICIENT_BOUND: int = 20
    MAX_RETRIES: int = 1000
    FLOAT_TOLERANCE: float = 1e-9


NUMERIC_DEFAULTS: Final = NumericDefaults()


# --- 4. Verification ---
@dataclass(frozen=True)
class VerificationPaths:
    """検証・ベンチマークの出力先"""

    LOG_DIR_NAME: str = 'logs'
    LOG_FILE_TEMPLATE: str = 'logs/ortholattice_{time}.log'


VERIFICATION_PATHS: Final = VerificationPaths()
