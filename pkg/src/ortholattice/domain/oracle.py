# FILE: src/ortholattice/domain/oracle.py
"""
独立した検証用オラクル。

- 円周 (2 次元) の場合の厳密な解析モデル。元を弧として分類し、弧の演算と比較します。
  角度は浮動小数点で表さず、すべて 2×2 行列式の符号で比較します。
- 高次元用の帰属サンプリングによる反証器。
"""

import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cmp_to_key

from ..shared.enums import ArcKind
from ..shared.exceptions import OracleError, ZeroVectorError
from .arith import IntVector, is_primitive
from .cone import Frame, standard_frame
from .generators import RandomSource
from .lattice import LatticeElement, bottom, is_bottom, is_top, member, top

_ORIGIN_DIRECTION: IntVector = (1, 0)


def _cross(p: IntVector, q: IntVector) -> int:
    return p[0] * q[1] - p[1] * q[0]


def _angle_order(p: IntVector, q: IntVector) -> int:
    """上半平面 [0°,180°) の方向 p, q の角度比較。p が先なら −1、同じなら 0、後なら +1。"""
    c = _cross(p, q)
    return (c < 0) - (c > 0)


def _in_positive_half(x: IntVector) -> bool:
    return x[1] > 0 or (x[1] == 0 and x[0] > 0)


@dataclass(frozen=True)
class ArcClass:
    """
    円周の格子元の記号的分類。

    INIT(b) は 0° から b まで (inclusive なら [0°,b]、そうでなければ [0°,b))、
    TAIL(b) は b から 180° の手前まで (inclusive なら [b,180°)、そうでなければ (b,180°))。
    b = (1,0) は INIT の閉区間 {0°} と TAIL の開区間 (0°,180°) にのみ現れます。
    """

    kind: ArcKind
    boundary: IntVector | None = None
    inclusive: bool = False

    def __post_init__(self) -> None:
        if self.kind in (ArcKind.EMPTY, ArcKind.FULL):
            if self.boundary is not None:
                raise OracleError(f'{self.kind.name} は境界を持ちません。')
            return
        b = self.boundary
        if b is None or len(b) != 2 or not is_primitive(b):
            raise OracleError(f'境界は原始的な 2 次元整数ベクトルである必要があります: {b}')
        if not _in_positive_half(b):
            raise OracleError(f'境界が上半平面 [0°,180°) にありません: {b}')
        if b == _ORIGIN_DIRECTION and self.inclusive != (self.kind is ArcKind.INIT):
            raise OracleError(f'0° を境界とする {self.kind.name} 弧は表現できません。')

    @classmethod
    def empty(cls) -> 'ArcClass':
        return cls(ArcKind.EMPTY)

    @classmethod
    def full(cls) -> 'ArcClass':
        return cls(ArcKind.FULL)

    @classmethod
    def init(cls, boundary: IntVector, inclusive: bool = False) -> 'ArcClass':
        return cls(ArcKind.INIT, tuple(boundary), inclusive)

    @classmethod
    def tail(cls, boundary: IntVector, inclusive: bool = True) -> 'ArcClass':
        return cls(ArcKind.TAIL, tuple(boundary), inclusive)

    def __str__(self) -> str:
        if self.boundary is None:
            return self.kind.name
        degrees = math.degrees(math.atan2(self.boundary[1], self.boundary[0]))
        if self.kind is ArcKind.INIT:
            return f'[0°, {degrees:.1f}°{"]" if self.inclusive else ")"}'
        return f'{"[" if self.inclusive else "("}{degrees:.1f}°, 180°)'


# --- 分類と逆写像 ---


def _check_circle(element: LatticeElement) -> None:
    if element.ambient_dim != 2 or element.reference != standard_frame(2):
        raise OracleError('円周オラクルは参照 E_std(2) の 2 次元の元にのみ適用できます。')


def classify(element: LatticeElement) -> ArcClass:
    """
    錐フレーム (v₁,v₂) の元は {x ∈ Φ⁺ : <x,v₂> < 0} ∪ ({−v₁} ∩ Φ⁺) です。
    n = −v₂ の向きで弧の種類と境界を読み取ります。
    """
    _check_circle(element)
    if is_bottom(element):
        return ArcClass.empty()
    if is_top(element):
        return ArcClass.full()
    v1, v2 = element.cone.vectors
    n = (-int(v2[0]), -int(v2[1]))
    antipode = (-int(v1[0]), -int(v1[1]))
    if n[0] == 0:
        # n = (0,1) なら開上半平面 (0°,180°)、n = (0,−1) なら {−v₁} のみ
        if n[1] > 0:
            return ArcClass.tail(_ORIGIN_DIRECTION, inclusive=False)
        return ArcClass.init(_ORIGIN_DIRECTION, inclusive=True)
    if n[0] > 0:
        boundary = (-n[1], n[0])
        return ArcClass.init(boundary, inclusive=antipode == boundary)
    boundary = (n[1], -n[0])
    return ArcClass.tail(boundary, inclusive=antipode == boundary)


def arc_to_element(arc: ArcClass) -> LatticeElement:
    """classify の逆写像。"""
    reference = standard_frame(2)
    if arc.kind is ArcKind.EMPTY:
        return bottom(reference)
    if arc.kind is ArcKind.FULL:
        return top(reference)
    b = arc.boundary
    assert b is not None
    if arc.kind is ArcKind.INIT:
        v2 = (-b[1], b[0])
    else:
        v2 = (b[1], -b[0])
    v1 = (-b[0], -b[1]) if arc.inclusive else b
    return LatticeElement(reference, Frame((v1, v2)))


def arc_contains(arc: ArcClass, x: IntVector) -> bool:
    """レイ x が弧に属するかを厳密に判定します。"""
    if len(x) != 2:
        raise OracleError(f'円周のレイは 2 次元である必要があります: {x}')
    if not any(x):
        raise ZeroVectorError('ゼロベクトルはレイではありません。')
    if not _in_positive_half(x):
        return False
    if arc.kind is ArcKind.EMPTY:
        return False
    if arc.kind is ArcKind.FULL:
        return True
    assert arc.boundary is not None
    order = _angle_order(x, arc.boundary)
    if arc.kind is ArcKind.INIT:
        return order < 0 or (order == 0 and arc.inclusive)
    return order > 0 or (order == 0 and arc.inclusive)


# --- 弧の束演算 ---


def arc_complement(arc: ArcClass) -> ArcClass:
    if arc.kind is ArcKind.EMPTY:
        return ArcClass.full()
    if arc.kind is ArcKind.FULL:
        return ArcClass.empty()
    kind = ArcKind.TAIL if arc.kind is ArcKind.INIT else ArcKind.INIT
    return ArcClass(kind, arc.boundary, not arc.inclusive)


def arc_join(left: ArcClass, right: ArcClass) -> ArcClass:
    if left.kind is ArcKind.EMPTY:
        return right
    if right.kind is ArcKind.EMPTY:
        return left
    if ArcKind.FULL in (left.kind, right.kind) or left.kind is not right.kind:
        return ArcClass.full()
    assert left.boundary is not None and right.boundary is not None
    order = _angle_order(left.boundary, right.boundary)
    if order == 0:
        return ArcClass(left.kind, left.boundary, left.inclusive or right.inclusive)
    # INIT は角度の大きい方、TAIL は小さい方が広い
    left_wins = (order > 0) == (left.kind is ArcKind.INIT)
    return left if left_wins else right


def arc_meet(left: ArcClass, right: ArcClass) -> ArcClass:
    return arc_complement(arc_join(arc_complement(left), arc_complement(right)))


def arc_leq(left: ArcClass, right: ArcClass) -> bool:
    """弧の包含 left ⊆ right。"""
    if left.kind is ArcKind.EMPTY or right.kind is ArcKind.FULL:
        return True
    if left.kind is ArcKind.FULL or right.kind is ArcKind.EMPTY:
        return False
    if left.kind is not right.kind:
        return False
    assert left.boundary is not None and right.boundary is not None
    order = _angle_order(left.boundary, right.boundary)
    if order == 0:
        return right.inclusive or not left.inclusive
    return order < 0 if left.kind is ArcKind.INIT else order > 0


# --- 網羅的な族 ---


def boundary_directions(bound: int) -> list[IntVector]:
    """座標の絶対値が bound 以下の、[0°,180°) の原始的方向 (角度順)。"""
    directions = [
        (x, y)
        for x in range(-bound, bound + 1)
        for y in range(0, bound + 1)
        if (x, y) != (0, 0) and math.gcd(x, y) == 1 and _in_positive_half((x, y))
    ]
    return sorted(directions, key=cmp_to_key(_angle_order))


def exhaustive_arcs(bound: int) -> list[ArcClass]:
    """EMPTY、FULL と、境界の座標が bound 以下のすべての弧。"""
    arcs = [ArcClass.empty(), ArcClass.full()]
    for b in boundary_directions(bound):
        if b == _ORIGIN_DIRECTION:
            arcs.extend(
                [ArcClass.init(b, inclusive=True), ArcClass.tail(b, inclusive=False)]
            )
            continue
        arcs.extend(
            ArcClass(kind, b, inclusive)
            for kind in (ArcKind.INIT, ArcKind.TAIL)
            for inclusive in (False, True)
        )
    return arcs


def grid_rays(bound: int) -> Iterator[IntVector]:
    """座標の絶対値が bound 以下のすべての原始的レイ (円周全体)。"""
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if (x, y) != (0, 0) and math.gcd(x, y) == 1:
                yield (x, y)


@dataclass
class ClassificationReport:
    """分類の総当たり検証の結果。"""

    frames_checked: int = 0
    rays_checked: int = 0
    mismatches: list[tuple[LatticeElement, IntVector]] = field(default_factory=list)
    roundtrip_failures: list[LatticeElement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.roundtrip_failures


def verify_classification(frame_bound: int = 5, grid_bound: int = 12) -> ClassificationReport:
    """
    座標が frame_bound 以下の原始的ベクトルの組から作ったすべてのフレームについて、
    細かい有理角度の格子上で、帰属集合が分類された弧とちょうど一致することを確かめます。
    """
    report = ClassificationReport()
    reference = standard_frame(2)
    rays = list(grid_rays(grid_bound))
    seen: set[Frame] = set()
    for v in grid_rays(frame_bound):
        # 2 次元では v に直交する原始的ベクトルは ±(−v₂, v₁) のみ
        for w in ((-v[1], v[0]), (v[1], -v[0])):
            frame = Frame((v, w))
            if frame in seen:
                continue
            seen.add(frame)
            element = LatticeElement(reference, frame)
            arc = classify(element)
            report.frames_checked += 1
            for ray in rays:
                report.rays_checked += 1
                if member(ray, element) != arc_contains(arc, ray):
                    report.mismatches.append((element, ray))
            if arc_to_element(arc) != element:
                report.roundtrip_failures.append(element)
    return report


# --- サンプリングによる反証 ---


@dataclass(frozen=True)
class FalsifierResult:
    """反例が見つからなければ verified (サンプリングの範囲で検証済み)。"""

    draws: int
    counterexample: IntVector | None = None

    @property
    def verified(self) -> bool:
        return self.counterexample is None


def subset_falsifier(
    left: LatticeElement, right: LatticeElement, n_samples: int, seed: int
) -> FalsifierResult:
    """X ⊆ Y をレイのサンプリングで反証します。X に属し Y に属さない最初のレイを返します。"""
    source = RandomSource(seed)
    frames = (left.cone, left.reference)
    for draw in range(1, n_samples + 1):
        ray = source.guided_ray(left.ambient_dim, frames)
        if member(ray, left) and not member(ray, right):
            return FalsifierResult(draws=draw, counterexample=ray)
    return FalsifierResult(draws=n_samples)


def find_member(element: LatticeElement, n_samples: int, seed: int) -> FalsifierResult:
    """X に属するレイを探します。見つかれば counterexample に入ります (X = ∅ への反例)。"""
    return subset_falsifier(element, bottom(element.reference), n_samples, seed)
