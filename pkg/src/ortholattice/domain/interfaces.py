# FILE: src/ortholattice/domain/interfaces.py

from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, Protocol, TypeAlias, runtime_checkable

from ..shared.enums import BackendName

if TYPE_CHECKING:
    from .lattice import LatticeElement

Scalar: TypeAlias = int | Fraction | float
Vec: TypeAlias = tuple[Scalar, ...]


@runtime_checkable
class IScalarBackend(Protocol):
    """
    フレームとレイの座標演算を抽象化するプロトコル。
    符号判定のみがアルゴリズムの分岐を決めるため、実装はこの判定を
    どの精度で行うかだけが異なります。
    """

    name: BackendName

    def vector(self, coords: Sequence[Scalar]) -> Vec:
        """入力座標をこのバックエンドの表現に変換します。"""
        ...

    def dot(self, u: Vec, v: Vec) -> Scalar: ...

    def sign(self, value: Scalar, scale: float = 1.0) -> int:
        """
        値の符号を -1, 0, +1 で返します。scale は値の大きさの目安で、
        浮動小数点バックエンドは |value| <= tolerance * scale をゼロとみなします。
        """
        ...

    def dot_sign(self, u: Vec, v: Vec) -> int:
        """<u,v> の符号。許容誤差は ‖u‖‖v‖ に対する相対値です。"""
        ...

    def ratio(self, numerator: Scalar, denominator: Scalar) -> Scalar: ...

    def sub_scaled(self, v: Vec, coefficient: Scalar, u: Vec) -> Vec:
        """v - coefficient * u を返します。"""
        ...

    def negate(self, v: Vec) -> Vec: ...

    def canonical(self, v: Vec) -> Vec:
        """
        レイの正規代表元を返します。

        Raises:
            ZeroVectorError: v がゼロベクトルの場合。
        """
        ...

    def is_canonical(self, v: Vec) -> bool: ...

    def is_zero(self, v: Vec) -> bool: ...

    def equal(self, u: Vec, v: Vec) -> bool: ...

    def bit_length(self, v: Vec) -> int:
        """係数の最大ビット長。浮動小数点バックエンドでは 0 を返します。"""
        ...


@runtime_checkable
class IElementRepository(Protocol):
    """格子元の永続化を抽象化するインターフェース。"""

    def load(self, path: Path) -> 'LatticeElement':
        """
        要素ファイルから格子元を読み込みます。

        Raises:
            ElementFileError: 解析または検証に失敗した場合。
        """
        ...

    def dumps(self, element: 'LatticeElement') -> bytes:
        """正規形のバイト列を返します。"""
        ...

    def save(self, element: 'LatticeElement', path: Path) -> None: ...
