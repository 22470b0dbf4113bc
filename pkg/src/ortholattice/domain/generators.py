# FILE: src/ortholattice/domain/generators.py
"""
シード付きの決定的な乱数生成器。

乱数源は numpy の Generator(PCG64) で、SeedSequence から初期化します。
PCG64 はプラットフォームに依存せずビット単位で再現可能です。スイートや次元ごとの
独立したストリームは SeedSequence.spawn で派生させます。引き出した整数は
厳密演算カーネルに渡す前に必ず Python の int に変換します。
"""

from collections.abc import Sequence
from dataclasses import dataclass

from numpy.random import PCG64, Generator, SeedSequence

from ..shared.constants import NUMERIC_DEFAULTS
from ..shared.exceptions import DependentVectorsError, GenerationError, InvalidInputError
from .arith import IntVector, orthogonalize, primitive
from .cone import Frame, Subspace, signed_permute, standard_frame, validate_signed_permutation
from .interfaces import Vec
from .lattice import LatticeElement

_MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class GenSpec:
    """生成のパラメータ。同じ GenSpec からは常に同じ値が得られます。"""

    seed: int
    ambient_dim: int
    coefficient_bound: int = NUMERIC_DEFAULTS.COEFFICIENT_BOUND

    def __post_init__(self) -> None:
        if not 0 <= self.seed <= _MAX_SEED:
            raise InvalidInputError(f'シードは 0 以上 2^64 未満である必要があります: {self.seed}')
        if self.ambient_dim < 1:
            raise InvalidInputError(f'次元は 1 以上である必要があります: {self.ambient_dim}')
        if self.coefficient_bound < 1:
            raise InvalidInputError(
                f'係数の上限は 1 以上である必要があります: {self.coefficient_bound}'
            )


class RandomSource:
    """
    PCG64 のストリームから、レイ・フレーム・格子元を引き出します。
    """

    def __init__(
        self,
        seed: int | SeedSequence,
        coefficient_bound: int = NUMERIC_DEFAULTS.COEFFICIENT_BOUND,
        max_retries: int = NUMERIC_DEFAULTS.MAX_RETRIES,
    ):
        self.seed_sequence = seed if isinstance(seed, SeedSequence) else SeedSequence(seed)
        self.rng = Generator(PCG64(self.seed_sequence))
        self.coefficient_bound = coefficient_bound
        self.max_retries = max_retries

    @classmethod
    def from_spec(cls, spec: GenSpec) -> 'RandomSource':
        return cls(spec.seed, coefficient_bound=spec.coefficient_bound)

    def spawn(self, count: int) -> list['RandomSource']:
        """互いに独立な子ストリームを決定的に派生させます。"""
        return [
            RandomSource(child, self.coefficient_bound, self.max_retries)
            for child in self.seed_sequence.spawn(count)
        ]

    def integers(self, dim: int, bound: int | None = None) -> IntVector:
        bound = bound or self.coefficient_bound
        drawn = self.rng.integers(-bound, bound, size=dim, endpoint=True)
        return tuple(int(c) for c in drawn)

    def index(self, upper: int) -> int:
        """[0, upper) の一様な整数。"""
        return int(self.rng.integers(0, upper))

    def ray(self, dim: int) -> IntVector:
        for _ in range(self.max_retries):
            v = self.integers(dim)
            if any(v):
                return primitive(v)
        raise GenerationError(f'{self.max_retries} 回の試行で非零のレイが得られませんでした。')

    def frame(self, dim: int) -> Frame:
        """一次独立な整数基底を引き、直交化した正規フレームを返します。"""
        for _ in range(self.max_retries):
            basis = [self.integers(dim) for _ in range(dim)]
            try:
                return Frame(orthogonalize(basis))
            except DependentVectorsError:
                continue
        raise GenerationError(
            f'{self.max_retries} 回の試行で一次独立な基底が得られませんでした。'
        )

    def element(self, dim: int) -> LatticeElement:
        return LatticeElement(standard_frame(dim), self.frame(dim))

    def signed_permutation(self, dim: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        perm = tuple(int(p) + 1 for p in self.rng.permutation(dim))
        signs = tuple(1 if s else -1 for s in self.rng.integers(0, 2, size=dim))
        return perm, signs

    def degenerate_element(self, dim: int) -> LatticeElement:
        """錐フレームの最後のベクトルが ±e_d の元 (半球を含む元、または赤道上の元)。"""
        sign = 1 if self.index(2) else -1
        last = tuple(sign if i == dim - 1 else 0 for i in range(dim))
        if dim == 1:
            return LatticeElement(standard_frame(1), Frame((last,)))
        head = self.frame(dim - 1)
        vectors = tuple((*v, 0) for v in head.vectors)
        return LatticeElement(standard_frame(dim), Frame((*vectors, last)))

    def mixed_element(self, dim: int) -> LatticeElement:
        """
        一般の元に、符号付き置換の元と退化した元を混ぜて返します。
        性質検査で測度ゼロの場合分けを確実に通すために使います。
        """
        mode = self.index(4)
        if mode == 2:
            return self.degenerate_element(dim)
        if mode == 3:
            return signed_permutation_element(*self.signed_permutation(dim))
        return self.element(dim)

    def ray_in(self, subspace: Subspace) -> IntVector:
        """部分空間内のレイ。基底の整数係数の一次結合を原始化します。"""
        if subspace.dim == 0:
            raise GenerationError('零部分空間にはレイがありません。')
        for _ in range(self.max_retries):
            coefficients = self.integers(subspace.dim)
            if not any(coefficients):
                continue
            combined = [
                sum(c * b[i] for c, b in zip(coefficients, subspace.basis, strict=True))
                for i in range(subspace.ambient_dim)
            ]
            if any(combined):
                return primitive(combined)
        raise GenerationError(f'{self.max_retries} 回の試行で部分空間内のレイが得られませんでした。')

    def guided_ray(self, dim: int, frames: Sequence[Frame]) -> IntVector:
        """
        一様なレイと、フレームベクトルの小さな整数係数の組み合わせを半々に混ぜます。
        後者は低次元の面 (境界のレイ) に確率正で当たります。
        """
        if not frames or self.index(2) == 0:
            return self.ray(dim)
        frame = frames[self.index(len(frames))]
        for _ in range(self.max_retries):
            weights = self.integers(frame.rank, bound=2)
            mask = self.rng.integers(0, 2, size=frame.rank)
            combined = [
                sum(
                    w * int(m) * v[i]
                    for w, m, v in zip(weights, mask, frame.vectors, strict=True)
                )
                for i in range(dim)
            ]
            if any(combined):
                return primitive(combined)
        return self.ray(dim)


# --- GenSpec からの純粋な生成関数 ---


def random_ray(spec: GenSpec) -> IntVector:
    return RandomSource.from_spec(spec).ray(spec.ambient_dim)


def random_frame(spec: GenSpec) -> Frame:
    return RandomSource.from_spec(spec).frame(spec.ambient_dim)


def random_element(spec: GenSpec) -> LatticeElement:
    """参照 E_std(d) と、ランダムな錐フレームからなる元。"""
    return RandomSource.from_spec(spec).element(spec.ambient_dim)


def signed_permutation_element(
    perm: Sequence[int], signs: Sequence[int]
) -> LatticeElement:
    """i 番目のベクトルが signs[i]·e_{perm(i)} である錐フレームの元。"""
    dim = len(perm)
    validate_signed_permutation(perm, signs, dim)
    identity: list[Vec] = [
        tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)
    ]
    # e_{perm(i)} は単位ベクトル e_i の置換による像
    vectors = tuple(signed_permute(identity[i], perm, signs) for i in range(dim))
    return LatticeElement(standard_frame(dim), Frame(vectors))
