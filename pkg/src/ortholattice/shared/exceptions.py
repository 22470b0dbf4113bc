# FILE: src/ortholattice/shared/exceptions.py


class OrthoLatticeError(Exception):
    """アプリケーションの基底例外クラス。"""

    pass


class SettingsError(OrthoLatticeError):
    """設定関連のエラー。"""

    pass


class InvalidInputError(OrthoLatticeError):
    """不正なコマンドライン引数(レイ、次元、範囲など)が入力された場合のエラー。"""

    pass


class ArithmeticDomainError(OrthoLatticeError):
    """厳密演算カーネルの事前条件違反の基底クラス。"""

    pass


class DimensionMismatchError(ArithmeticDomainError):
    """ベクトルの次元が一致しないエラー。"""

    def __init__(self, left: int, right: int):
        super().__init__(f'次元が一致しません: {left} != {right}')
        self.left = left
        self.right = right


class ZeroVectorError(ArithmeticDomainError):
    """ゼロベクトルが許されない箇所にゼロベクトルが渡されたエラー。"""

    pass


class DependentVectorsError(ArithmeticDomainError):
    """入力ベクトルが一次従属であるエラー。"""

    def __init__(self, index: int):
        super().__init__(f'{index} 番目のベクトルがそれ以前のベクトルに一次従属です。')
        self.index = index


class InvalidFrameError(OrthoLatticeError):
    """フレームの不変条件(非零・原始的・直交)が満たされないエラー。"""

    def __init__(self, message: str, rows: tuple[int, ...] = ()):
        if rows:
            label = ' と '.join(str(r) for r in rows)
            super().__init__(f'[行 {label}] {message}')
        else:
            super().__init__(message)
        self.rows = rows


class SubspaceError(OrthoLatticeError):
    """部分空間の包含関係など、制限操作の事前条件違反。"""

    pass


class ReferenceMismatchError(OrthoLatticeError):
    """二つの格子元の参照フレームが一致しないエラー。"""

    pass


class GenerationError(OrthoLatticeError):
    """乱数生成器がリトライ上限までに有効な値を得られなかったエラー。"""

    pass


class OracleError(OrthoLatticeError):
    """円周オラクルの適用条件(2次元・標準参照)を満たさないエラー。"""

    pass


class ElementFileError(OrthoLatticeError):
    """要素ファイルの読み込み・検証中のエラー。"""

    def __init__(self, message: str, path: str | None = None):
        if path:
            super().__init__(f'[{path}] {message}')
        else:
            super().__init__(message)
        self.path = path
