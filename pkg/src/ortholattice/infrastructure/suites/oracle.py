# FILE: src/ortholattice/infrastructure/suites/oracle.py
"""円周 (2 次元) の解析モデルと厳密に突き合わせるスイート。"""

from ...domain.lattice import LatticeElement, complement, member
from ...domain.oracle import (
    arc_complement,
    arc_contains,
    arc_join,
    arc_leq,
    arc_meet,
    arc_to_element,
    classify,
    exhaustive_arcs,
    grid_rays,
    verify_classification,
)
from ...shared.exceptions import OracleError
from .base import BaseSuite, Witness

_CIRCLE = 2


class OracleEquivalenceSuite(BaseSuite):
    """
    円周の格子元について、join・meet・leq・補元が弧の演算と一致することを確かめます。
    境界の座標が小さい弧の組は総当たり、それ以外はランダムな組で比較します。
    """

    required_dim = _CIRCLE

    @classmethod
    def get_suite_name(cls) -> str:
        return 'oracle_equivalence'

    def _run(self) -> Witness | None:
        check = self.context.check
        source = self.source(_CIRCLE)
        probes = list(grid_rays(check.exhaustive_pair_bound))

        for arc in exhaustive_arcs(check.exhaustive_bound):
            element = arc_to_element(arc)
            self.cases += 1
            if classify(element) != arc:
                return self.fail(f'弧 {arc} の往復変換が一致しません。', x=element)
            if classify(complement(element)) != arc_complement(arc):
                return self.fail(f'弧 {arc} の補元が弧の補集合と一致しません。', x=element)
            for ray in probes:
                if member(ray, element) != arc_contains(arc, ray):
                    return self.fail(
                        f'弧 {arc} の帰属が一致しません。', rays={'ray': ray}, x=element
                    )
            witness = self._compare(element, source.mixed_element(_CIRCLE))
            if witness is not None:
                return witness

        family = [arc_to_element(a) for a in exhaustive_arcs(check.exhaustive_pair_bound)]
        for x in family:
            for y in family:
                witness = self._compare(x, y)
                if witness is not None:
                    return witness

        for _ in range(check.oracle_pairs):
            witness = self._compare(
                source.mixed_element(_CIRCLE), source.mixed_element(_CIRCLE)
            )
            if witness is not None:
                return witness
        return None

    def _compare(self, x: LatticeElement, y: LatticeElement) -> Witness | None:
        self.cases += 1
        a, b = classify(x), classify(y)
        joined = self.ops.join(x, y)
        if classify(joined) != arc_join(a, b):
            return self.fail(
                f'join が弧の和 {arc_join(a, b)} と一致しません。', x=x, y=y, join=joined
            )
        met = self.ops.meet(x, y)
        if classify(met) != arc_meet(a, b):
            return self.fail(
                f'meet が弧の共通部分 {arc_meet(a, b)} と一致しません。', x=x, y=y, meet=met
            )
        if self.ops.leq(x, y) != arc_leq(a, b):
            return self.fail('leq が弧の包含と一致しません。', x=x, y=y)
        return None


class ClassificationSuite(BaseSuite):
    """小さな座標のすべての錐フレームについて、帰属集合が分類された弧と一致します。"""

    required_dim = _CIRCLE

    @classmethod
    def get_suite_name(cls) -> str:
        return 'classification'

    def _run(self) -> Witness | None:
        report = verify_classification()
        self.cases = report.frames_checked
        if report.mismatches:
            element, ray = report.mismatches[0]
            return self.fail(
                f'帰属集合が弧 {self._describe(element)} と一致しません。',
                rays={'ray': ray},
                x=element,
            )
        if report.roundtrip_failures:
            return self.fail(
                '分類から元への逆写像が一致しません。', x=report.roundtrip_failures[0]
            )
        return None

    @staticmethod
    def _describe(element: LatticeElement) -> str:
        try:
            return str(classify(element))
        except OracleError:
            return '?'

