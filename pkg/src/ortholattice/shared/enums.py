# src/ortholattice/shared/enums.py
from enum import Enum, IntEnum, auto


class BackendName(str, Enum):
    """
    スカラー演算バックエンド。
    strを継承することで、CLI引数との文字列比較とEnumの型安全性を両立する。
    """

    EXACT = 'exact'
    FLOAT = 'float'

    @classmethod
    def _missing_(cls, value: object) -> 'BackendName | None':
        # 'EXACT' のような大文字のキーでもアクセス可能にする
        for member in cls:
            if member.name == str(value).upper():
                return member
        return None


class LexSign(IntEnum):
    """レイのフレームに対する辞書式符号。"""

    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1
    OUTSIDE_SPAN = 2  # レイがフレームの張る部分空間の外にある


class ArcKind(Enum):
    """円周の場合 (n = 1) の格子元の分類"""

    EMPTY = auto()
    FULL = auto()
    INIT = auto()  # 0° から始まる弧
    TAIL = auto()  # 180° の手前で終わる弧


class JoinCase(str, Enum):
    """join の場合分け。トレースとログに使用する。"""

    TRIVIAL = 'trivial'  # bottom / top による短絡
    NESTED = 'nested'  # 閉包の包含 (支持超平面への制限)
    EQUATOR = 'equator'  # 両者が赤道に含まれる
    EXTENSION = 'extension'  # 赤道での join に開半球を付加


class SuiteStatus(str, Enum):
    """検証スイートの結果"""

    PASSED = 'pass'
    FAILED = 'fail'
    SKIPPED = 'skipped'
