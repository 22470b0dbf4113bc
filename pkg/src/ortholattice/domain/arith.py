# FILE: src/ortholattice/domain/arith.py
"""
有理数・整数ベクトルの厳密演算カーネル。

内積、射影、原始的整数代表元、順序を保つグラム・シュミット直交化を提供します。
平方根は一切使用しません。正規直交基底は直交する原始的整数ベクトルの列で表現され、
すべての判定は内積の符号のみに依存するため、正のスカラー倍に対して不変です。

ベンチマーク専用に、相対許容誤差付きの倍精度バックエンド (FloatBackend) も提供します。
受け入れテストでは使用しないでください。
"""

import math
import re
from collections.abc import Iterable, Sequence
from fractions import Fraction

from ..shared.constants import NUMERIC_DEFAULTS
from ..shared.enums import BackendName
from ..shared.exceptions import (
    DependentVectorsError,
    DimensionMismatchError,
    InvalidInputError,
    ZeroVectorError,
)
from .interfaces import IScalarBackend, Scalar, Vec

Rational = Fraction
Vector = tuple[Fraction, ...]
IntVector = tuple[int, ...]

_RATIONAL_PATTERN = re.compile(r'^-?\d+(?:/\d+)?$')


def _check_dims(u: Sequence[object], v: Sequence[object]) -> None:
    if len(u) != len(v):
        raise DimensionMismatchError(len(u), len(v))


# --- スカラーのシリアライズ ---


def format_rational(value: Fraction | int) -> str:
    """有理数を 'p/q' (q = 1 のときは 'p') 形式の文字列に変換します。"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def parse_rational(text: str) -> Fraction:
    """'p/q' または 'p' 形式の文字列を有理数に変換します。"""
    stripped = text.strip()
    if not _RATIONAL_PATTERN.match(stripped):
        raise InvalidInputError(f"有理数として解釈できません: '{text}'")
    try:
        return Fraction(stripped)
    except ZeroDivisionError as e:
        raise InvalidInputError(f"分母がゼロです: '{text}'") from e


# --- 厳密演算カーネル ---


def dot(u: Sequence[Fraction | int], v: Sequence[Fraction | int]) -> Fraction:
    """厳密な内積 <u, v> を返します。"""
    _check_dims(u, v)
    return Fraction(sum(a * b for a, b in zip(u, v, strict=True)))


def project_off(v: Sequence[Fraction | int], u: Sequence[Fraction | int]) -> Vector:
    """
    v から u 方向の成分を取り除いた v - (<v,u>/<u,u>) u を返します。
    結果は u と厳密に直交します。
    """
    _check_dims(v, u)
    norm = dot(u, u)
    if norm == 0:
        raise ZeroVectorError('射影の方向ベクトルがゼロです。')
    coefficient = dot(v, u) / norm
    return tuple(Fraction(a) - coefficient * b for a, b in zip(v, u, strict=True))


def primitive(v: Sequence[Fraction | int]) -> IntVector:
    """
    分母を払い、最大公約数で割った原始的整数ベクトルを返します。
    同じレイの一意な代表元です (正のスカラー倍で向きは保たれます)。
    """
    integers = _clear_denominators(v)
    divisor = math.gcd(*integers)
    if divisor == 0:
        raise ZeroVectorError('ゼロベクトルには原始的代表元がありません。')
    if divisor == 1:
        return integers
    return tuple(c // divisor for c in integers)


def _clear_denominators(v: Sequence[Fraction | int]) -> IntVector:
    """分母の最小公倍数を掛けた整数ベクトル (v の正のスカラー倍)。"""
    if all(type(c) is int for c in v):
        return tuple(v)  # type: ignore[arg-type]
    fractions = [Fraction(c) for c in v]
    denominator = math.lcm(*(c.denominator for c in fractions))
    return tuple(int(c * denominator) for c in fractions)


def is_primitive(v: Sequence[int]) -> bool:
    """v が非零で、成分の最大公約数が 1 の整数ベクトルかどうか。"""
    if not all(isinstance(c, int) for c in v):
        return False
    return any(v) and math.gcd(*v) == 1


def orthogonalize(
    basis: Sequence[Sequence[Scalar]],
    backend: IScalarBackend | None = None,
) -> tuple[Vec, ...]:
    """
    順序付き基底を、同じ旗 (先頭 k 本の張る空間) をもつ直交フレームに変換します。
    各出力は入力の第 k ベクトルからそれ以前の成分を除いたものの正のスカラー倍です。

    Raises:
        DependentVectorsError: 入力が一次従属な場合。
    """
    backend = backend or EXACT
    vectors = [backend.vector(v) for v in basis]
    result: list[Vec] = []
    for index, v in enumerate(vectors):
        if result:
            _check_dims(v, result[0])
        residual = _reject_direction(v, result, backend)
        if backend.is_zero(residual):
            raise DependentVectorsError(index)
        result.append(backend.canonical(residual))
    return tuple(result)


def span_basis(
    vectors: Iterable[Sequence[Scalar]], backend: IScalarBackend | None = None
) -> tuple[Vec, ...]:
    """従属なベクトルを読み飛ばしながら、張る空間の直交基底を返します。"""
    backend = backend or EXACT
    result: list[Vec] = []
    for v in vectors:
        residual = _reject_direction(backend.vector(v), result, backend)
        if not backend.is_zero(residual):
            result.append(backend.canonical(residual))
    return tuple(result)


def _reject(v: Vec, orthogonal: Sequence[Vec], backend: IScalarBackend) -> Vec:
    """直交系 orthogonal への射影成分を v から取り除きます。"""
    residual = v
    for w in orthogonal:
        coefficient = backend.ratio(backend.dot(residual, w), backend.dot(w, w))
        residual = backend.sub_scaled(residual, coefficient, w)
    return residual


def _reject_direction(v: Vec, orthogonal: Sequence[Vec], backend: IScalarBackend) -> Vec:
    """
    _reject の結果の正のスカラー倍。厳密バックエンドでは分数を作らず、
    r ← <w,w>·r − <r,w>·w の整数更新と gcd による約分だけで計算します。
    """
    if not isinstance(backend, ExactBackend):
        return _reject(v, orthogonal, backend)
    residual = _clear_denominators(v)  # type: ignore[arg-type]
    for w in orthogonal:
        w_int = _clear_denominators(w)  # type: ignore[arg-type]
        _check_dims(residual, w_int)
        c = sum(a * b for a, b in zip(residual, w_int, strict=True))
        if c == 0:
            continue
        ww = sum(b * b for b in w_int)
        residual = tuple(ww * a - c * b for a, b in zip(residual, w_int, strict=True))
        divisor = math.gcd(*residual)
        if divisor > 1:
            residual = tuple(a // divisor for a in residual)
    return residual


def reject_direction(
    v: Sequence[Scalar], orthogonal: Sequence[Vec], backend: IScalarBackend | None = None
) -> Vec:
    """
    直交補成分と同じ向きのベクトル。ゼロ判定・正規化・符号判定にはこれで足ります。
    """
    backend = backend or EXACT
    return _reject_direction(backend.vector(v), orthogonal, backend)


def project_direction(
    v: Sequence[Scalar], orthogonal: Sequence[Vec], backend: IScalarBackend | None = None
) -> Vec:
    """直交系の張る空間への正射影の正のスカラー倍。"""
    backend = backend or EXACT
    vector = backend.vector(v)
    if not isinstance(backend, ExactBackend):
        return project_onto(vector, orthogonal, backend)
    v_int = _clear_denominators(vector)  # type: ignore[arg-type]
    basis = [_clear_denominators(w) for w in orthogonal]  # type: ignore[arg-type]
    norms = [sum(b * b for b in w) for w in basis]
    scale = math.lcm(*norms) if norms else 1
    result = [0] * len(v_int)
    for w, norm in zip(basis, norms, strict=True):
        _check_dims(v_int, w)
        c = sum(a * b for a, b in zip(v_int, w, strict=True)) * (scale // norm)
        if c:
            for i, b in enumerate(w):
                result[i] += c * b
    divisor = math.gcd(*result)
    if divisor > 1:
        return tuple(a // divisor for a in result)
    return tuple(result)


def reject(
    v: Sequence[Scalar], orthogonal: Sequence[Vec], backend: IScalarBackend | None = None
) -> Vec:
    """直交系の張る空間に対する v の直交補成分 (残差) を返します。"""
    backend = backend or EXACT
    return _reject(backend.vector(v), orthogonal, backend)


def project_onto(
    v: Sequence[Scalar], orthogonal: Sequence[Vec], backend: IScalarBackend | None = None
) -> Vec:
    """直交系の張る空間への v の正射影を返します。"""
    backend = backend or EXACT
    vector = backend.vector(v)
    if not orthogonal:
        return tuple(backend.sub_scaled(vector, 1, vector))
    residual = _reject(vector, orthogonal, backend)
    return backend.sub_scaled(vector, 1, residual)


def coordinates(
    v: Sequence[Fraction | int], basis: Sequence[Sequence[Fraction | int]]
) -> Vector | None:
    """
    v = Σ cᵢ basis[i] を満たす係数を、有理数上のガウス・ジョルダン消去で求めます。
    基底は直交している必要はありません。v が張る空間の外にある場合は None を返します。

    Raises:
        DependentVectorsError: 基底が一次従属な場合 (最初に従属となる番号付き)。
    """
    size = len(basis)
    for b in basis:
        _check_dims(b, v)
    if size == 0:
        return () if all(c == 0 for c in v) else None

    # 列 = 基底ベクトル、最終列 = v の拡大係数行列
    rows = [[Fraction(b[j]) for b in basis] + [Fraction(v[j])] for j in range(len(v))]
    pivot_row = 0
    for column in range(size):
        found = next(
            (r for r in range(pivot_row, len(rows)) if rows[r][column] != 0), None
        )
        if found is None:
            raise DependentVectorsError(column)
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        pivot = rows[pivot_row][column]
        rows[pivot_row] = [c / pivot for c in rows[pivot_row]]
        for r, row in enumerate(rows):
            if r != pivot_row and row[column] != 0:
                factor = row[column]
                rows[r] = [a - factor * b for a, b in zip(row, rows[pivot_row], strict=True)]
        pivot_row += 1

    if any(row[size] != 0 for row in rows[size:]):
        return None
    return tuple(rows[r][size] for r in range(size))


# --- スカラーバックエンド ---


class ExactBackend:
    """任意精度整数と有理数による厳密バックエンド。符号判定に誤差はありません。"""

    name = BackendName.EXACT

    def vector(self, coords: Sequence[Scalar]) -> Vec:
        if any(isinstance(c, float) for c in coords):
            raise InvalidInputError('厳密バックエンドに浮動小数点数は渡せません。')
        return tuple(c if isinstance(c, int) else Fraction(c) for c in coords)

    def dot(self, u: Vec, v: Vec) -> Scalar:
        _check_dims(u, v)
        total = sum(a * b for a, b in zip(u, v, strict=True))
        if isinstance(total, Fraction) and total.denominator == 1:
            return total.numerator
        return total

    def sign(self, value: Scalar, scale: float = 1.0) -> int:
        return (value > 0) - (value < 0)

    def dot_sign(self, u: Vec, v: Vec) -> int:
        return self.sign(self.dot(u, v))

    def ratio(self, numerator: Scalar, denominator: Scalar) -> Scalar:
        return Fraction(numerator) / Fraction(denominator)

    def sub_scaled(self, v: Vec, coefficient: Scalar, u: Vec) -> Vec:
        _check_dims(v, u)
        if coefficient == 0:
            return v
        return tuple(a - coefficient * b for a, b in zip(v, u, strict=True))

    def negate(self, v: Vec) -> Vec:
        return tuple(-c for c in v)

    def canonical(self, v: Vec) -> Vec:
        return primitive(v)  # type: ignore[arg-type]

    def is_canonical(self, v: Vec) -> bool:
        return is_primitive(v)  # type: ignore[arg-type]

    def is_zero(self, v: Vec) -> bool:
        return all(c == 0 for c in v)

    def equal(self, u: Vec, v: Vec) -> bool:
        return tuple(u) == tuple(v)

    def bit_length(self, v: Vec) -> int:
        lengths = [
            max(Fraction(c).numerator.bit_length(), Fraction(c).denominator.bit_length())
            for c in v
        ]
        return max(lengths, default=0)

    def __repr__(self) -> str:
        return 'ExactBackend()'


class FloatBackend:
    """
    倍精度浮動小数点バックエンド (ベンチマーク専用)。
    フレームベクトルは単位長に正規化します。符号判定は相対許容誤差で、
    |値| <= tolerance * scale (内積なら scale = ‖u‖‖v‖) をゼロとみなします。
    """

    name = BackendName.FLOAT

    def __init__(self, tolerance: float = NUMERIC_DEFAULTS.FLOAT_TOLERANCE):
        self.tolerance = tolerance

    def vector(self, coords: Sequence[Scalar]) -> Vec:
        return tuple(float(c) for c in coords)

    def dot(self, u: Vec, v: Vec) -> Scalar:
        _check_dims(u, v)
        return math.sumprod(u, v)  # type: ignore[arg-type]

    def sign(self, value: Scalar, scale: float = 1.0) -> int:
        if abs(value) <= self.tolerance * scale:
            return 0
        return 1 if value > 0 else -1

    def dot_sign(self, u: Vec, v: Vec) -> int:
        scale = math.hypot(*u) * math.hypot(*v)  # type: ignore[arg-type]
        return self.sign(self.dot(u, v), scale)

    def ratio(self, numerator: Scalar, denominator: Scalar) -> Scalar:
        return float(numerator) / float(denominator)

    def sub_scaled(self, v: Vec, coefficient: Scalar, u: Vec) -> Vec:
        _check_dims(v, u)
        return tuple(
            float(a) - float(coefficient) * float(b) for a, b in zip(v, u, strict=True)
        )

    def negate(self, v: Vec) -> Vec:
        return tuple(-float(c) for c in v)

    def canonical(self, v: Vec) -> Vec:
        norm = math.hypot(*(float(c) for c in v))
        if norm <= self.tolerance:
            raise ZeroVectorError('ゼロベクトルは正規化できません。')
        return tuple(float(c) / norm for c in v)

    def is_canonical(self, v: Vec) -> bool:
        return math.isclose(math.hypot(*v), 1.0, abs_tol=self.tolerance)  # type: ignore[arg-type]

    def is_zero(self, v: Vec) -> bool:
        return math.hypot(*(float(c) for c in v)) <= self.tolerance

    def equal(self, u: Vec, v: Vec) -> bool:
        return len(u) == len(v) and all(
            math.isclose(a, b, rel_tol=self.tolerance, abs_tol=self.tolerance)  # type: ignore[arg-type]
            for a, b in zip(u, v, strict=True)
        )

    def bit_length(self, v: Vec) -> int:
        return 0

    def __repr__(self) -> str:
        return f'FloatBackend(tolerance={self.tolerance!r})'


EXACT: IScalarBackend = ExactBackend()
