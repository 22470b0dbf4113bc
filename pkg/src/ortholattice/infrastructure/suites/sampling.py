# FILE: src/ortholattice/infrastructure/suites/sampling.py
"""レイのサンプリングによる反証型のスイート。"""

from ...domain.cone import lex_sign, negate
from ...domain.lattice import boundary_split, is_bottom, member
from ...domain.oracle import find_member, subset_falsifier
from ...shared.enums import LexSign
from .base import BaseSuite, Witness


class UpperBoundSuite(BaseSuite):
    """x または y に属するレイは必ず x ∨ y に属します。"""

    @classmethod
    def get_suite_name(cls) -> str:
        return 'upper_bound'

    def _run(self) -> Witness | None:
        samples = self.context.check.samples
        for dim in self.context.dims:
            source = self.source(dim)
            for _ in range(self.iters):
                x, y = source.mixed_element(dim), source.mixed_element(dim)
                joined = self.ops.join(x, y)
                frames = (x.cone, y.cone, x.reference)
                self.cases += 1
                for _ in range(samples):
                    ray = source.guided_ray(dim, frames)
                    if (member(ray, x) or member(ray, y)) and not member(ray, joined):
                        return self.fail(
                            'x ∪ y のレイが x ∨ y に属していません。',
                            rays={'ray': ray},
                            x=x,
                            y=y,
                            join=joined,
                        )
        return None


class BottomUniquenessSuite(BaseSuite):
    """
    is_bottom は錐フレームが参照の反転と一致することと同値で、
    bottom でない元にはサンプリングで帰属レイが見つかります。
    """

    @classmethod
    def get_suite_name(cls) -> str:
        return 'bottom_uniqueness'

    def _run(self) -> Witness | None:
        draws = self.context.check.falsifier_samples
        for dim in self.context.dims:
            source = self.source(dim)
            for i in range(self.iters):
                x = source.mixed_element(dim)
                self.cases += 1
                if is_bottom(x) != (x.cone == negate(x.reference)):
                    return self.fail('is_bottom が錐フレームの比較と一致しません。', x=x)
                if is_bottom(x):
                    continue
                found = find_member(x, draws, seed=self.context.seed + i)
                if found.verified:
                    return self.fail(
                        f'bottom でない元に {draws} 回の試行で帰属レイが見つかりません。',
                        x=x,
                    )
        return None


class FalsifierCrossCheckSuite(BaseSuite):
    """leq(x, y) が真なら、サンプリング反証器は反例を見つけません。"""

    @classmethod
    def get_suite_name(cls) -> str:
        return 'falsifier_crosscheck'

    def _run(self) -> Witness | None:
        samples = self.context.check.samples
        for dim in self.context.dims:
            source = self.source(dim)
            for i in range(self.iters):
                x, r = source.mixed_element(dim), source.mixed_element(dim)
                y = self.ops.join(x, r) if i % 2 else r
                self.cases += 1
                if not self.ops.leq(x, y):
                    continue
                result = subset_falsifier(x, y, samples, seed=self.context.seed + i)
                if not result.verified:
                    assert result.counterexample is not None
                    return self.fail(
                        'leq(x, y) が真なのに x ⊄ y の反例が見つかりました。',
                        rays={'counterexample': result.counterexample},
                        x=x,
                        y=y,
                    )
        return None


class BoundarySuite(BaseSuite):
    """X = (X ∩ H(u_X)) ∪ {x ∈ Φ⁺ : <x,u_X> < 0} をサンプルしたレイで確かめます。"""

    @classmethod
    def get_suite_name(cls) -> str:
        return 'boundary'

    def _run(self) -> Witness | None:
        samples = self.context.check.ray_samples
        for dim in self.context.dims:
            source = self.source(dim)
            for _ in range(self.iters):
                x = source.mixed_element(dim)
                split = boundary_split(x)
                frames = (x.cone, x.reference, split.trace.cone)
                self.cases += 1
                for _ in range(samples):
                    ray = source.guided_ray(dim, frames)
                    if member(ray, x) != split.contains(ray):
                        return self.fail(
                            '支持超平面による分割が元と一致しません。',
                            rays={'ray': ray},
                            x=x,
                            trace=split.trace,
                        )
                    if member(ray, x) and lex_sign(ray, x.reference) is not LexSign.NEGATIVE:
                        return self.fail('正系の外のレイが元に属しています。', rays={'ray': ray}, x=x)
        return None
