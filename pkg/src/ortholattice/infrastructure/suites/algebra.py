# FILE: src/ortholattice/infrastructure/suites/algebra.py
"""束の公理・順序・双対性・最小性・JTP を厳密な正規フレームの比較で検査するスイート。"""

from ...domain.lattice import complement
from .base import BaseSuite, Witness


class LatticeAxiomsSuite(BaseSuite):
    """join / meet の冪等性・可換性・結合性と吸収律。"""

    @classmethod
    def get_suite_name(cls) -> str:
        return 'lattice_axioms'

    def _run(self) -> Witness | None:
        ops = self.ops
        for dim in self.context.dims:
            source = self.source(dim)
            for _ in range(self.iters):
                x, y, z = (source.mixed_element(dim) for _ in range(3))
                self.cases += 1
                for name, op in (('join', ops.join), ('meet', ops.meet)):
                    if not op(x, x).same(x):
                        return self.fail(f'{name} が冪等ではありません。', x=x)
                    if not op(x, y).same(op(y, x)):
                        return self.fail(f'{name} が可換ではありません。', x=x, y=y)
                    if not op(op(x, y), z).same(op(x, op(y, z))):
                        return self.fail(f'{name} が結合的ではありません。', x=x, y=y, z=z)
                if not ops.join(x, ops.meet(x, y)).same(x):
                    return self.fail('吸収律 x ∨ (x ∧ y) = x が成り立ちません。', x=x, y=y)
                if not ops.meet(x, ops.join(x, y)).same(x):
                    return self.fail('吸収律 x ∧ (x ∨ y) = x が成り立ちません。', x=x, y=y)
        return None


class OrderSuite(BaseSuite):
    """leq の反射律・反対称律・推移律。比較可能な組は join で作ります。"""

    @classmethod
    def get_suite_name(cls) -> str:
        return 'order'

    def _run(self) -> Witness | None:
        ops = self.ops
        for dim in self.context.dims:
            source = self.source(dim)
            for _ in range(self.iters):
                x, r, s = (source.mixed_element(dim) for _ in range(3))
                y = ops.join(x, r)
                z = ops.join(y, s)
                self.cases += 1
                if not ops.leq(x, x):
                    return self.fail('leq が反射的ではありません。', x=x)
                if not ops.leq(x, y) or not ops.leq(r, y):
                    return self.fail('join が上界になっていません。', x=x, r=r, join=y)
                if ops.leq(x, r) and ops.leq(r, x) and not x.same(r):
                    return self.fail('leq が反対称的ではありません。', x=x, r=r)
                if not ops.leq(x, z):
                    return self.fail('leq が推移的ではありません。', x=x, y=y, z=z)
        return None


class DualitySuite(BaseSuite):
    """補元は対合で、順序を反転します。"""

    @classmethod
    def get_suite_name(cls) -> str:
        return 'duality'

    def _run(self) -> Witness | None:
        ops = self.ops
        for dim in self.context.dims:
            source = self.source(dim)
            for i in range(self.iters):
                x, r = source.mixed_element(dim), source.mixed_element(dim)
                # 半分は比較可能な組にする
                y = ops.join(x, r) if i % 2 else r
                self.cases += 1
                if not complement(complement(x)).same(x):
                    return self.fail('補元が対合ではありません。', x=x)
                if ops.leq(x, y) != ops.leq(complement(y), complement(x)):
                    return self.fail('補元が順序を反転しません。', x=x, y=y)
        return None


class MinimalitySuite(BaseSuite):
    """x ∨ y は x と y を含む任意の上界 W = x ∨ (y ∨ r) 以下です。"""

    @classmethod
    def get_suite_name(cls) -> str:
        return 'minimality'

    def _run(self) -> Witness | None:
        ops = self.ops
        for dim in self.context.dims:
            source = self.source(dim)
            for _ in range(self.iters):
                x, y, r = (source.mixed_element(dim) for _ in range(3))
                joined = ops.join(x, y)
                upper = ops.join(x, ops.join(y, r))
                self.cases += 1
                if not ops.leq(joined, upper):
                    return self.fail(
                        'join が上界 x ∨ (y ∨ r) 以下ではありません。',
                        x=x,
                        y=y,
                        r=r,
                        join=joined,
                    )
        return None


class JoinTrivialIntersectionSuite(BaseSuite):
    """B と交わらない元の族の join も B と交わりません。"""

    @classmethod
    def get_suite_name(cls) -> str:
        return 'jtp'

    def _run(self) -> Witness | None:
        ops = self.ops
        for dim in self.context.dims:
            source = self.source(dim)
            for _ in range(self.iters):
                b = source.mixed_element(dim)
                size = source.index(4) + 1
                family = [
                    ops.meet(source.mixed_element(dim), complement(b))
                    for _ in range(size)
                ]
                self.cases += 1
                for candidate in family:
                    if not ops.disjoint(candidate, b):
                        return self.fail('meet(R, ¬B) が B と交わっています。', a=candidate, b=b)
                joined = ops.join_all(family, b.reference)
                if not ops.disjoint(joined, b):
                    elements = {f'a{i}': a for i, a in enumerate(family, start=1)}
                    return self.fail(
                        'B と交わらない族の join が B と交わっています。',
                        b=b,
                        join=joined,
                        **elements,
                    )
        return None
