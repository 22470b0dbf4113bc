# FILE: src/ortholattice/infrastructure/suites/structure.py
"""部分空間への制限、正規化、錐の計算規則を検査するスイート。"""

from ...domain.cone import (
    Subspace,
    apply_signed_permutation,
    compare,
    cone_contains,
    frame_from_basis,
    leading_sign,
    lex_sign,
    negate,
    restrict,
    signed_permute,
    support_normal,
)
from ...domain.lattice import LatticeElement, equator, member, restrict_element
from ...shared.enums import LexSign
from ...shared.exceptions import DependentVectorsError
from .base import BaseSuite, Witness


class ProjectionSuite(BaseSuite):
    """
    最上位の元を span(e₁,…,e_{d−1}) とランダムな超平面に制限すると、
    部分束の正しい元になり、部分空間内のレイの帰属が親と一致します。
    """

    @classmethod
    def get_suite_name(cls) -> str:
        return 'projection'

    def _run(self) -> Witness | None:
        samples = self.context.check.ray_samples
        for dim in self.context.dims:
            source = self.source(dim)
            for _ in range(self.iters):
                x = source.mixed_element(dim)
                hyperplane = Subspace.full(dim).hyperplane(source.ray(dim))
                self.cases += 1
                restricted = equator(x)
                for _ in range(samples):
                    ray = source.guided_ray(dim, (restricted.cone, restricted.reference))
                    if member(ray, restricted) != member(ray, x):
                        return self.fail(
                            '赤道への制限の帰属が親と一致しません。',
                            rays={'ray': ray},
                            x=x,
                            restricted=restricted,
                        )
                sliced = restrict_element(x, hyperplane)
                cone_slice = restrict(x.cone, hyperplane)
                for _ in range(samples):
                    ray = source.ray_in(hyperplane)
                    if member(ray, sliced) != member(ray, x):
                        return self.fail(
                            '超平面への制限の帰属が親と一致しません。',
                            rays={'ray': ray},
                            x=x,
                            restricted=sliced,
                        )
                    if cone_contains(cone_slice, ray) != cone_contains(x.cone, ray):
                        return self.fail(
                            '錐の制限の帰属が元の錐と一致しません。',
                            rays={'ray': ray},
                            x=x,
                        )
        return None


class CanonicalizationSuite(BaseSuite):
    """
    正規フレームは、基底ベクトルの正の定数倍と、前のベクトルの倍数を
    後のベクトルに加える操作で不変です。元の基底に対する最後の非零係数の
    符号は、正規フレームでの辞書式符号と一致します。
    """

    @classmethod
    def get_suite_name(cls) -> str:
        return 'canonicalization'

    def _run(self) -> Witness | None:
        samples = self.context.check.ray_samples
        for dim in self.context.dims:
            source = self.source(dim)
            for _ in range(self.iters):
                basis = [source.integers(dim) for _ in range(dim)]
                try:
                    frame = frame_from_basis(basis)
                except DependentVectorsError:
                    continue
                self.cases += 1
                as_top = LatticeElement(frame, frame)
                scaled = [
                    tuple((source.index(5) + 1) * c for c in v) for v in basis
                ]
                sheared: list[tuple[int, ...]] = []
                for k, v in enumerate(basis):
                    row = list(v)
                    for earlier in basis[:k]:
                        factor = source.index(7) - 3
                        row = [a + factor * b for a, b in zip(row, earlier, strict=True)]
                    sheared.append(tuple(row))
                for name, variant in (('scaled', scaled), ('sheared', sheared)):
                    if frame_from_basis(variant) != frame:
                        return self.fail(
                            f'基底の変形 ({name}) で正規フレームが変わりました。',
                            frame=as_top,
                        )
                if frame_from_basis(frame.vectors) != frame:
                    return self.fail('正規化が冪等ではありません。', frame=as_top)
                for _ in range(samples):
                    ray = source.ray(dim)
                    if leading_sign(ray, scaled) is not lex_sign(ray, frame):
                        return self.fail(
                            '基底での最後の係数の符号が正規フレームと一致しません。',
                            rays={'ray': ray},
                            frame=as_top,
                        )
        return None


class ConeCalculusSuite(BaseSuite):
    """
    極大尖錐凸錐の基本性質: x と −x のちょうど一方が属すること、支持半空間、
    誘導される全順序の反対称性、符号付き置換との可換性。
    """

    @classmethod
    def get_suite_name(cls) -> str:
        return 'cone_calculus'

    def _run(self) -> Witness | None:
        samples = self.context.check.ray_samples
        for dim in self.context.dims:
            source = self.source(dim)
            for _ in range(self.iters):
                frame = source.frame(dim)
                element = LatticeElement(frame, frame)
                perm, signs = source.signed_permutation(dim)
                moved = apply_signed_permutation(frame, perm, signs)
                normal = support_normal(frame)
                self.cases += 1
                if not cone_contains(frame, tuple(-c for c in normal)):
                    return self.fail('−u が錐に属していません。', frame=element)
                for _ in range(samples):
                    ray = source.guided_ray(dim, (frame,))
                    inside = cone_contains(frame, ray)
                    if inside == cone_contains(negate(frame), ray):
                        return self.fail(
                            'x は D と −D のちょうど一方に属する必要があります。',
                            rays={'ray': ray},
                            frame=element,
                        )
                    if inside and frame.backend.dot_sign(ray, normal) > 0:
                        return self.fail(
                            '錐の元が支持半空間の外にあります。', rays={'ray': ray}, frame=element
                        )
                    if cone_contains(moved, signed_permute(ray, perm, signs)) != inside:
                        return self.fail(
                            '符号付き置換が帰属と可換ではありません。',
                            rays={'ray': ray},
                            frame=element,
                        )
                    other = source.ray(dim)
                    if compare(frame, ray, other) != -compare(frame, other, ray):
                        return self.fail(
                            '誘導される順序が反対称ではありません。',
                            rays={'x': ray, 'y': other},
                            frame=element,
                        )
                    if lex_sign(ray, frame) is LexSign.OUTSIDE_SPAN:
                        return self.fail(
                            '全次元のフレームで OUTSIDE_SPAN が返りました。',
                            rays={'ray': ray},
                            frame=element,
                        )
        return None
