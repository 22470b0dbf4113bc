# FILE: src/ortholattice/domain/cone.py
"""
正規フレームによる極大尖錐凸錐の計算。

フレーム F = (v₁,…,v_k) は、互いに直交する原始的整数ベクトルの順序付き列で、
錐 D(F) = { Σ cᵢvᵢ : 最後の非零係数 c_m が負 } ∪ {0} を表します。
二つの錐が等しいことと、正規フレームが成分ごとに等しいことは同値です。
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from ..shared.enums import LexSign
from ..shared.exceptions import (
    DependentVectorsError,
    InvalidFrameError,
    InvalidInputError,
    SubspaceError,
    ZeroVectorError,
)
from .arith import (
    EXACT,
    coordinates,
    orthogonalize,
    project_direction,
    project_onto,
    reject_direction,
    span_basis,
)
from .interfaces import IScalarBackend, Scalar, Vec


@dataclass(frozen=True)
class Frame:
    """
    極大尖錐凸錐の正規表現。

    構築時に非零・正規 (厳密バックエンドでは原始的)・直交の各条件を検査します。
    等価比較は vectors のみで行い、バックエンドは比較に含めません。
    """

    vectors: tuple[Vec, ...]
    backend: IScalarBackend = field(default=EXACT, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self.vectors:
            raise InvalidFrameError('フレームには少なくとも 1 本のベクトルが必要です。')
        vectors = tuple(self.backend.vector(v) for v in self.vectors)
        object.__setattr__(self, 'vectors', vectors)

        dim = len(vectors[0])
        if dim == 0:
            raise InvalidFrameError('0 次元のベクトルはフレームに使用できません。')
        if len(vectors) > dim:
            raise InvalidFrameError(
                f'ベクトルの本数 ({len(vectors)}) が次元 ({dim}) を超えています。'
            )
        for i, v in enumerate(vectors, start=1):
            if len(v) != dim:
                raise InvalidFrameError(
                    f'次元が一致しません: {len(v)} != {dim}', rows=(i,)
                )
            if self.backend.is_zero(v):
                raise InvalidFrameError('ゼロベクトルです。', rows=(i,))
            if not self.backend.is_canonical(v):
                raise InvalidFrameError('原始的なベクトルではありません。', rows=(i,))
        for (i, u), (j, v) in combinations(enumerate(vectors, start=1), 2):
            if self.backend.dot_sign(u, v) != 0:
                raise InvalidFrameError('ベクトルが直交していません。', rows=(i, j))

    @property
    def ambient_dim(self) -> int:
        return len(self.vectors[0])

    @property
    def rank(self) -> int:
        """張る部分空間の次元。"""
        return len(self.vectors)

    @property
    def last(self) -> Vec:
        return self.vectors[-1]

    def __len__(self) -> int:
        return len(self.vectors)

    def same(self, other: 'Frame') -> bool:
        """バックエンドの等価判定 (浮動小数点では許容誤差付き) によるフレームの比較。"""
        return len(self.vectors) == len(other.vectors) and all(
            self.backend.equal(u, v)
            for u, v in zip(self.vectors, other.vectors, strict=True)
        )

    @classmethod
    def _trusted(cls, vectors: tuple[Vec, ...], backend: IScalarBackend) -> 'Frame':
        """正規・直交であることが構成から分かっているベクトル列から検査なしで構築します。"""
        frame = object.__new__(cls)
        object.__setattr__(frame, 'vectors', vectors)
        object.__setattr__(frame, 'backend', backend)
        return frame

    @cached_property
    def _span(self) -> 'Subspace':
        return Subspace._trusted(self.vectors, self.ambient_dim, self.backend)

    def span(self) -> 'Subspace':
        return self._span

    def drop_last(self) -> 'Frame':
        """最後のベクトルを除いたフレーム。支持超平面への制限に相当します。"""
        if self.rank == 1:
            raise SubspaceError('1 本だけのフレームからは最後のベクトルを除けません。')
        return Frame._trusted(self.vectors[:-1], self.backend)

    def append(self, v: Sequence[Scalar]) -> 'Frame':
        """
        末尾にベクトルを加えたフレーム。検査するのは新しいベクトルの次元と非零性、
        および既存のベクトルとの直交性だけです。
        """
        backend = self.backend
        vector = backend.vector(v)
        row = self.rank + 1
        if len(vector) != self.ambient_dim:
            raise InvalidFrameError(
                f'次元が一致しません: {len(vector)} != {self.ambient_dim}', rows=(row,)
            )
        if row > self.ambient_dim:
            raise InvalidFrameError(
                f'ベクトルの本数 ({row}) が次元 ({self.ambient_dim}) を超えています。'
            )
        if backend.is_zero(vector):
            raise InvalidFrameError('ゼロベクトルです。', rows=(row,))
        vector = backend.canonical(vector)
        for i, u in enumerate(self.vectors, start=1):
            if backend.dot_sign(u, vector) != 0:
                raise InvalidFrameError('ベクトルが直交していません。', rows=(i, row))
        return Frame._trusted((*self.vectors, vector), backend)

    def with_backend(self, backend: IScalarBackend) -> 'Frame':
        """同じ錐を別のバックエンドで表したフレームを返します。"""
        return Frame(
            tuple(backend.canonical(backend.vector(v)) for v in self.vectors), backend
        )


@dataclass(frozen=True)
class Subspace:
    """
    直交基底で与えられる部分空間。基底は空 (零空間) でも構いません。
    """

    basis: tuple[Vec, ...]
    ambient_dim: int
    backend: IScalarBackend = field(default=EXACT, compare=False, repr=False)

    def __post_init__(self) -> None:
        basis = tuple(self.backend.vector(v) for v in self.basis)
        object.__setattr__(self, 'basis', basis)
        for i, v in enumerate(basis, start=1):
            if len(v) != self.ambient_dim:
                raise SubspaceError(f'{i} 番目の基底ベクトルの次元が一致しません。')
            if self.backend.is_zero(v) or not self.backend.is_canonical(v):
                raise SubspaceError(f'{i} 番目の基底ベクトルが正規ではありません。')
        for (i, u), (j, v) in combinations(enumerate(basis, start=1), 2):
            if self.backend.dot_sign(u, v) != 0:
                raise SubspaceError(f'基底ベクトル {i} と {j} が直交していません。')

    @classmethod
    def _trusted(
        cls, basis: tuple[Vec, ...], ambient_dim: int, backend: IScalarBackend
    ) -> 'Subspace':
        subspace = object.__new__(cls)
        object.__setattr__(subspace, 'basis', basis)
        object.__setattr__(subspace, 'ambient_dim', ambient_dim)
        object.__setattr__(subspace, 'backend', backend)
        return subspace

    @classmethod
    def spanned_by(
        cls,
        vectors: Sequence[Sequence[Scalar]],
        ambient_dim: int | None = None,
        backend: IScalarBackend = EXACT,
    ) -> 'Subspace':
        """任意のベクトル列の張る部分空間を構築します (従属なベクトルは無視)。"""
        if ambient_dim is None:
            if not vectors:
                raise SubspaceError('空のベクトル列からは次元を決定できません。')
            ambient_dim = len(vectors[0])
        return cls(span_basis(vectors, backend), ambient_dim, backend)

    @classmethod
    def full(cls, ambient_dim: int, backend: IScalarBackend = EXACT) -> 'Subspace':
        return cls(_unit_vectors(ambient_dim, 1), ambient_dim, backend)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[Scalar]) -> bool:
        return self.backend.is_zero(reject_direction(v, self.basis, self.backend))

    def is_within(self, other: 'Subspace') -> bool:
        return all(other.contains(b) for b in self.basis)

    def same(self, other: 'Subspace') -> bool:
        return self.dim == other.dim and self.is_within(other)

    def project(self, v: Sequence[Scalar]) -> Vec:
        """この部分空間への直交射影。"""
        return project_onto(v, self.basis, self.backend)

    def project_direction(self, v: Sequence[Scalar]) -> Vec:
        """射影と同じ向きのベクトル。厳密バックエンドでは整数のまま計算します。"""
        return project_direction(v, self.basis, self.backend)

    def hyperplane(self, w: Sequence[Scalar]) -> 'Subspace':
        """
        S ∩ w^⊥ を返します。w の S への射影がゼロなら S 自身です。
        """
        p = self.project_direction(w)
        if self.backend.is_zero(p):
            return self
        # p を先頭に置いて直交化すると、残りが p^⊥ ∩ S の基底になる
        rest = span_basis((p, *self.basis), self.backend)[1:]
        return Subspace._trusted(rest, self.ambient_dim, self.backend)


def _unit_vectors(dim: int, sign: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(sign if j == i else 0 for j in range(dim)) for i in range(dim)
    )


def standard_frame(dim: int, backend: IScalarBackend = EXACT) -> Frame:
    """標準参照フレーム E_std(d) = (−e₁,…,−e_d)。錐は正系 (最後の非零座標が正) です。"""
    if dim < 1:
        raise InvalidInputError(f'次元は 1 以上である必要があります: {dim}')
    return Frame(_unit_vectors(dim, -1), backend)


def frame_from_basis(
    basis: Sequence[Sequence[Scalar]], backend: IScalarBackend = EXACT
) -> Frame:
    """順序付き基底が生成する錐の正規フレーム。"""
    return Frame(orthogonalize(basis, backend), backend)


# --- 帰属判定 ---


def lex_sign(x: Sequence[Scalar], frame: Frame) -> LexSign:
    """
    フレームに対するレイの辞書式符号。
    cᵢ = <x,vᵢ>/<vᵢ,vᵢ> の最後の非零係数の符号を返し、
    x がフレームの張る空間の外にあれば OUTSIDE_SPAN を返します。
    """
    backend = frame.backend
    ray = backend.vector(x)
    if len(ray) != frame.ambient_dim:
        raise InvalidInputError(
            f'レイの次元 ({len(ray)}) がフレームの次元 ({frame.ambient_dim}) と異なります。'
        )
    if backend.is_zero(ray):
        raise ZeroVectorError('ゼロベクトルはレイではありません。')
    if not backend.is_zero(reject_direction(ray, frame.vectors, backend)):
        return LexSign.OUTSIDE_SPAN
    return trailing_sign(ray, frame)


def trailing_sign(ray: Vec, frame: Frame) -> LexSign:
    """張る空間に入っていると分かっているレイの辞書式符号。span の判定を省きます。"""
    backend = frame.backend
    # <vᵢ,vᵢ> > 0 なので cᵢ の符号は <x,vᵢ> の符号に等しい
    for v in reversed(frame.vectors):
        sign = backend.dot_sign(ray, v)
        if sign != 0:
            return LexSign(sign)
    return LexSign.ZERO


def cone_contains(frame: Frame, x: Sequence[Scalar]) -> bool:
    return lex_sign(x, frame) is LexSign.NEGATIVE


def leading_sign(x: Sequence[Scalar], basis: Sequence[Sequence[int]]) -> LexSign:
    """
    直交とは限らない順序付き基底に対する、最後の非零係数の符号。
    直交化された正規フレームとの整合性の検査に使います。
    """
    coefficients = coordinates(x, basis)  # type: ignore[arg-type]
    if coefficients is None:
        return LexSign.OUTSIDE_SPAN
    for c in reversed(coefficients):
        if c != 0:
            return LexSign.POSITIVE if c > 0 else LexSign.NEGATIVE
    raise ZeroVectorError('ゼロベクトルはレイではありません。')


def compare(frame: Frame, x: Sequence[Scalar], y: Sequence[Scalar]) -> int:
    """
    錐 D(F) が誘導する張る空間上の全順序 (y ≤ x ⟺ y − x ∈ D) で x と y を比較します。
    x > y なら +1、x = y なら 0、x < y なら −1。
    """
    backend = frame.backend
    difference = backend.sub_scaled(backend.vector(x), 1, backend.vector(y))
    if backend.is_zero(difference):
        return 0
    sign = lex_sign(difference, frame)
    if sign is LexSign.OUTSIDE_SPAN:
        raise SubspaceError('比較対象がフレームの張る空間の外にあります。')
    return int(sign)


# --- 錐の演算 ---


def support_normal(frame: Frame) -> Vec:
    """唯一の支持半空間 H_v = {x : <x,v> ≤ 0} の法線 v (= 最後のフレームベクトル)。"""
    return frame.last


def negate(frame: Frame) -> Frame:
    """−D(F) を表すフレーム。"""
    backend = frame.backend
    return Frame._trusted(tuple(backend.negate(v) for v in frame.vectors), backend)


def restrict(frame: Frame, subspace: Subspace, *, check: bool = True) -> Frame:
    """
    D(F) ∩ S の正規フレームを返します。

    最後のベクトル v_k の S への射影 w が支持法線になります。S ⊥ v_k なら
    v_k を捨てて再帰し、そうでなければ S ∩ w^⊥ で再帰して w を末尾に加えます。

    check=False は S ⊆ span(F) かつ S ≠ {0} が構成から分かっている内部呼び出し用です。

    Raises:
        SubspaceError: S が自明、または span(F) に含まれない場合。
    """
    if check:
        if subspace.dim == 0:
            raise SubspaceError('零部分空間への制限はできません。')
        if subspace.ambient_dim != frame.ambient_dim:
            raise SubspaceError(
                f'部分空間の次元 ({subspace.ambient_dim}) がフレームの次元 ({frame.ambient_dim}) と異なります。'
            )
        if not subspace.is_within(frame.span()):
            raise SubspaceError('部分空間がフレームの張る空間に含まれていません。')
    return Frame._trusted(_restrict(frame.vectors, subspace, frame.backend), frame.backend)


def _restrict(
    vectors: tuple[Vec, ...], subspace: Subspace, backend: IScalarBackend
) -> tuple[Vec, ...]:
    if subspace.dim == len(vectors):
        return vectors
    if subspace.dim == 0:
        return ()
    projected = subspace.project_direction(vectors[-1])
    if backend.is_zero(projected):
        return _restrict(vectors[:-1], subspace, backend)
    normal = backend.canonical(projected)
    return (*_restrict(vectors[:-1], subspace.hyperplane(normal), backend), normal)


def halfspace_pair_contains(
    u: Sequence[Scalar],
    e: Sequence[Scalar],
    v: Sequence[Scalar],
    backend: IScalarBackend = EXACT,
) -> bool:
    """
    H_u ∩ H_e ⊆ H_v を判定します (H_w = {x : <x,w> ≤ 0})。
    v = αu + βe と書けて α ≥ 0, β ≥ 0 のときに限り真です。

    Raises:
        DependentVectorsError: u と e が一次従属な場合。
    """
    u_, e_, v_ = backend.vector(u), backend.vector(e), backend.vector(v)
    if backend.is_zero(v_):
        return True
    if backend.is_zero(u_) or backend.is_zero(e_):
        raise DependentVectorsError(1)
    # 正のスカラー倍は α, β の符号を変えない。浮動小数点では単位長になり、
    # 以下の符号判定の許容誤差が入力の大きさに対して相対的になる
    u_, e_, v_ = backend.canonical(u_), backend.canonical(e_), backend.canonical(v_)
    uu, ue, ee = backend.dot(u_, u_), backend.dot(u_, e_), backend.dot(e_, e_)
    vu, ve = backend.dot(v_, u_), backend.dot(v_, e_)
    gram = uu * ee - ue * ue
    if backend.sign(gram) <= 0:
        raise DependentVectorsError(1)
    alpha = backend.ratio(vu * ee - ve * ue, gram)
    beta = backend.ratio(uu * ve - ue * vu, gram)
    residual = backend.sub_scaled(backend.sub_scaled(v_, alpha, u_), beta, e_)
    if not backend.is_zero(residual):
        return False
    return backend.sign(alpha) >= 0 and backend.sign(beta) >= 0


def same_direction(
    u: Sequence[Scalar], v: Sequence[Scalar], backend: IScalarBackend = EXACT
) -> bool:
    """u が v の正のスカラー倍かどうか。どちらかがゼロなら偽。"""
    u_, v_ = backend.vector(u), backend.vector(v)
    if len(u_) != len(v_) or backend.is_zero(u_) or backend.is_zero(v_):
        return False
    return backend.equal(backend.canonical(u_), backend.canonical(v_))


# --- 符号付き置換 ---


def validate_signed_permutation(
    perm: Sequence[int], signs: Sequence[int], dim: int
) -> None:
    """perm が 1..dim の置換で、signs が ±1 の列であることを確認します。"""
    if sorted(perm) != list(range(1, dim + 1)):
        raise InvalidInputError(f'1..{dim} の置換ではありません: {list(perm)}')
    if len(signs) != dim or any(s not in (1, -1) for s in signs):
        raise InvalidInputError(f'符号は長さ {dim} の ±1 の列である必要があります: {list(signs)}')


def signed_permute(
    v: Sequence[Scalar], perm: Sequence[int], signs: Sequence[int]
) -> tuple[Scalar, ...]:
    """(g·v)_{perm(i)} = signs[i]·v_i (1 始まりの置換)。"""
    result: list[Scalar] = [0] * len(v)
    for i, (target, sign) in enumerate(zip(perm, signs, strict=True)):
        result[target - 1] = sign * v[i]
    return tuple(result)


def apply_signed_permutation(
    frame: Frame, perm: Sequence[int], signs: Sequence[int]
) -> Frame:
    """
    符号付き置換行列 g によるフレームの像。x ∈ D(F) ⟺ g·x ∈ D(g·F) が成り立ちます。
    """
    validate_signed_permutation(perm, signs, frame.ambient_dim)
    return Frame(
        tuple(frame.backend.vector(signed_permute(v, perm, signs)) for v in frame.vectors),
        frame.backend,
    )
