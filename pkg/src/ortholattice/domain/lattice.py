# FILE: src/ortholattice/domain/lattice.py
"""
弱順序束の元と、その上の順序・補元・結び (join)・交わり (meet)。

元 X は参照フレーム E と錐フレーム D の組で、集合 X = D(D) ∩ D(E) の
レイを表します。最上位では E = E_std(n+1) です。結びは参照フレームを
部分空間に制限した部分束で再帰的に計算し、再帰のたびに張る空間の次元が
1 つ下がります。
"""

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

from loguru import logger

from ..shared.enums import JoinCase, LexSign
from ..shared.exceptions import (
    InvalidFrameError,
    InvalidInputError,
    ReferenceMismatchError,
    SubspaceError,
    ZeroVectorError,
)
from .arith import reject_direction
from .cone import (
    Frame,
    Subspace,
    halfspace_pair_contains,
    negate,
    restrict,
    same_direction,
    standard_frame,
    trailing_sign,
)
from .interfaces import IScalarBackend, Scalar, Vec


@dataclass(frozen=True)
class LatticeElement:
    """参照フレームと錐フレームの組。両者は同じ部分空間を張ります。"""

    reference: Frame
    cone: Frame

    def __post_init__(self) -> None:
        if self.reference.ambient_dim != self.cone.ambient_dim:
            raise InvalidFrameError(
                f'参照フレームと錐フレームの次元が異なります: '
                f'{self.reference.ambient_dim} != {self.cone.ambient_dim}'
            )
        if not self.cone.span().same(self.reference.span()):
            raise InvalidFrameError('錐フレームが参照フレームと同じ部分空間を張っていません。')

    @classmethod
    def _trusted(cls, reference: Frame, cone: Frame) -> 'LatticeElement':
        """両フレームが同じ部分空間を張ることが構成から分かっている場合の構築。"""
        element = object.__new__(cls)
        object.__setattr__(element, 'reference', reference)
        object.__setattr__(element, 'cone', cone)
        return element

    @property
    def ambient_dim(self) -> int:
        return self.cone.ambient_dim

    @property
    def rank(self) -> int:
        return self.cone.rank

    @property
    def backend(self) -> IScalarBackend:
        return self.cone.backend

    @property
    def normal(self) -> Vec:
        """u_X: 錐フレームの最後のベクトル。"""
        return self.cone.last

    def same(self, other: 'LatticeElement') -> bool:
        return self.reference.same(other.reference) and self.cone.same(other.cone)


@dataclass
class JoinTrace:
    """
    join の再帰を観測するオブザーバ。
    深さごとの分岐と、錐フレームの係数の最大ビット長を記録します。
    """

    cases: list[tuple[int, JoinCase]] = field(default_factory=list)
    bit_lengths: dict[int, int] = field(default_factory=dict)
    traces_coincided: list[tuple[int, bool]] = field(default_factory=list)

    def record(self, depth: int, case: JoinCase, result: LatticeElement) -> None:
        self.cases.append((depth, case))
        backend = result.backend
        bits = max(backend.bit_length(v) for v in result.cone.vectors)
        self.bit_lengths[depth] = max(self.bit_lengths.get(depth, 0), bits)

    @property
    def max_depth(self) -> int:
        return max((d for d, _ in self.cases), default=0)


# --- 基本元 ---


def top(reference: Frame) -> LatticeElement:
    return LatticeElement._trusted(reference, reference)


def bottom(reference: Frame) -> LatticeElement:
    return LatticeElement._trusted(reference, negate(reference))


def standard_top(dim: int) -> LatticeElement:
    return top(standard_frame(dim))


def standard_bottom(dim: int) -> LatticeElement:
    return bottom(standard_frame(dim))


def is_top(element: LatticeElement) -> bool:
    return element.cone.same(element.reference)


def is_bottom(element: LatticeElement) -> bool:
    return element.cone.same(negate(element.reference))


def member(x: Sequence[Scalar], element: LatticeElement) -> bool:
    """レイ x が X に属するか。張る空間の外のレイは属しません。"""
    backend = element.backend
    ray = backend.vector(x)
    if backend.is_zero(ray):
        raise ZeroVectorError('ゼロベクトルはレイではありません。')
    reference = element.reference
    if len(ray) != reference.ambient_dim:
        raise InvalidInputError(
            f'レイの次元 ({len(ray)}) が元の次元 ({reference.ambient_dim}) と異なります。'
        )
    if not backend.is_zero(reject_direction(ray, reference.vectors, backend)):
        return False
    return (
        trailing_sign(ray, element.cone) is LexSign.NEGATIVE
        and trailing_sign(ray, reference) is LexSign.NEGATIVE
    )


def complement(element: LatticeElement) -> LatticeElement:
    """正系における補集合 Φ⁺ ∖ X。"""
    return LatticeElement._trusted(element.reference, negate(element.cone))


def _check_reference(left: LatticeElement, right: LatticeElement) -> None:
    if not left.reference.same(right.reference):
        raise ReferenceMismatchError('二つの元の参照フレームが一致しません。')


# --- 退化判定と制限 ---


def degenerate_side(element: LatticeElement) -> int | None:
    """
    u_X が e* に平行なら +1 (閉包は半球全体)、a = −e* に平行なら −1
    (X は赤道に含まれる)、それ以外は None。
    """
    backend = element.backend
    u, e = element.normal, element.reference.last
    if same_direction(u, e, backend):
        return 1
    if same_direction(u, backend.negate(e), backend):
        return -1
    return None


def restrict_element(
    element: LatticeElement, subspace: Subspace, *, check: bool = True
) -> LatticeElement:
    """X ∩ S を部分束の元として返します。制限後の両フレームはともに S を張ります。"""
    return LatticeElement._trusted(
        restrict(element.reference, subspace, check=check),
        restrict(element.cone, subspace, check=check),
    )


def equator(element: LatticeElement) -> LatticeElement:
    """参照フレームの支持超平面 S′ = span(E′) への制限。"""
    if element.rank < 2:
        raise SubspaceError('1 次元の元には赤道がありません。')
    equatorial = element.reference.drop_last()
    return LatticeElement._trusted(
        equatorial, restrict(element.cone, equatorial.span(), check=False)
    )


def traces_coincide(left: LatticeElement, right: LatticeElement) -> bool:
    """H(u_X) ∩ S′ = H(u_Y) ∩ S′ かどうか。u の S′ への射影が平行か、ともにゼロのとき真。"""
    _check_reference(left, right)
    backend = left.backend
    equatorial = left.reference.drop_last().span()
    p = equatorial.project_direction(left.normal)
    q = equatorial.project_direction(right.normal)
    if backend.is_zero(p) or backend.is_zero(q):
        return backend.is_zero(p) and backend.is_zero(q)
    return same_direction(p, q, backend) or same_direction(p, backend.negate(q), backend)


@dataclass(frozen=True)
class BoundarySplit:
    """X = (X ∩ H(u_X)) ∪ {x ∈ Φ⁺ : <x,u_X> < 0} の二つの部分。"""

    element: LatticeElement
    trace: LatticeElement

    def open_part_contains(self, x: Sequence[Scalar]) -> bool:
        backend = self.element.backend
        ray = backend.vector(x)
        return (
            member(ray, top(self.element.reference))
            and backend.dot_sign(ray, self.element.normal) < 0
        )

    def contains(self, x: Sequence[Scalar]) -> bool:
        return member(x, self.trace) or self.open_part_contains(x)


def boundary_split(element: LatticeElement) -> BoundarySplit:
    if element.rank < 2:
        raise SubspaceError('1 次元の元は支持超平面で分割できません。')
    wall = element.reference.span().hyperplane(element.normal)
    return BoundarySplit(element, restrict_element(element, wall, check=False))


# --- 閉包の包含 ---


def closure_contains_halfspace(element: LatticeElement, v: Sequence[Scalar]) -> bool:
    """閉包 X̄ が半空間 H_v = {x : <x,v> ≤ 0} に含まれるかを厳密に判定します。"""
    if is_bottom(element):
        return True
    backend = element.backend
    projected = element.reference.span().project_direction(backend.vector(v))
    if backend.is_zero(projected):
        return True
    side = degenerate_side(element)
    if side == 1:
        return same_direction(projected, element.reference.last, backend)
    if side == -1:
        return closure_contains_halfspace(equator(element), projected)
    return halfspace_pair_contains(
        element.normal, element.reference.last, projected, backend
    )


def closure_contains(left: LatticeElement, right: LatticeElement) -> bool:
    """X̄ ⊆ Ȳ を厳密に判定します。"""
    _check_reference(left, right)
    if is_bottom(left):
        return True
    if is_bottom(right):
        return False
    side = degenerate_side(right)
    if side == 1:
        return True
    if side == -1:
        if degenerate_side(left) != -1:
            return False
        return closure_contains(equator(left), equator(right))
    return closure_contains_halfspace(left, right.normal)


# --- 結びと交わり ---


def join(
    left: LatticeElement,
    right: LatticeElement,
    trace: JoinTrace | None = None,
    _depth: int = 0,
) -> LatticeElement:
    """
    最小上界 X ∨ Y。

    1. bottom / top による短絡。
    2. 閉包が入れ子なら、外側の支持超平面 H(u_Y) に制限して再帰し u_Y を付加。
    3. 両者が赤道に含まれるなら、赤道で再帰して a を付加。
    4. それ以外は赤道で再帰して e* (開半球) を付加。

    Raises:
        ReferenceMismatchError: 参照フレームが一致しない場合。
    """
    _check_reference(left, right)

    result: LatticeElement
    case: JoinCase
    if is_bottom(left) or is_top(right):
        result, case = right, JoinCase.TRIVIAL
    elif is_bottom(right) or is_top(left):
        result, case = left, JoinCase.TRIVIAL
    elif closure_contains(left, right):
        result, case = _join_nested(left, right, trace, _depth), JoinCase.NESTED
    elif closure_contains(right, left):
        result, case = _join_nested(right, left, trace, _depth), JoinCase.NESTED
    else:
        reference = left.reference
        backend = left.backend
        inner = join(equator(left), equator(right), trace, _depth + 1)
        if degenerate_side(left) == -1 and degenerate_side(right) == -1:
            appended, case = backend.negate(reference.last), JoinCase.EQUATOR
        else:
            appended, case = reference.last, JoinCase.EXTENSION
            if trace is not None:
                trace.traces_coincided.append((_depth, traces_coincide(left, right)))
        result = LatticeElement._trusted(reference, inner.cone.append(appended))

    logger.debug('join: 深さ {} / 階数 {} / 分岐 {}', _depth, left.rank, case.value)
    if trace is not None:
        trace.record(_depth, case, result)
    return result


def _join_nested(
    inner: LatticeElement,
    outer: LatticeElement,
    trace: JoinTrace | None,
    depth: int,
) -> LatticeElement:
    """inner の閉包が outer の閉包に含まれる場合。H(u_outer) 上で結んで u_outer を付加します。"""
    wall = outer.reference.span().hyperplane(outer.normal)
    restricted = join(
        restrict_element(inner, wall, check=False),
        restrict_element(outer, wall, check=False),
        trace,
        depth + 1,
    )
    return LatticeElement._trusted(outer.reference, restricted.cone.append(outer.normal))


JoinFunction = Callable[[LatticeElement, LatticeElement], LatticeElement]


def meet(left: LatticeElement, right: LatticeElement) -> LatticeElement:
    """最大下界。補元による双対で join に帰着します。"""
    return complement(join(complement(left), complement(right)))


def leq(left: LatticeElement, right: LatticeElement) -> bool:
    """X ≤ Y ⟺ X ∨ Y = Y (正規フレームの一致)。"""
    return join(left, right).same(right)


def disjoint(left: LatticeElement, right: LatticeElement) -> bool:
    """X ∩ Y = ∅ ⟺ X ≤ Φ⁺ ∖ Y。"""
    return leq(left, complement(right))


def _fold_reference(
    elements: Sequence[LatticeElement], reference: Frame | None
) -> Frame:
    if elements:
        return elements[0].reference
    if reference is None:
        raise InvalidInputError('空の列の畳み込みには参照フレームが必要です。')
    return reference


def join_all(
    elements: Iterable[LatticeElement], reference: Frame | None = None
) -> LatticeElement:
    """有限族の結び (左畳み込み)。空の族は bottom です。"""
    items = list(elements)
    result = bottom(_fold_reference(items, reference))
    for element in items:
        result = join(result, element)
    return result


def meet_all(
    elements: Iterable[LatticeElement], reference: Frame | None = None
) -> LatticeElement:
    """有限族の交わり。空の族は top です。"""
    items = list(elements)
    result = top(_fold_reference(items, reference))
    for element in items:
        result = meet(result, element)
    return result


def convert_element(element: LatticeElement, backend: IScalarBackend) -> LatticeElement:
    """ベンチマーク用に、元を別のスカラーバックエンドへ移します。"""
    return LatticeElement(
        element.reference.with_backend(backend), element.cone.with_backend(backend)
    )
