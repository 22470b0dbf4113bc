# FILE: src/ortholattice/models/element.py
"""
要素ファイル (JSON) のデータモデル。

整数は任意精度を保つため十進文字列で表します。出力は常に正規形で、
参照フレームも必ず含めます。正規形のバイト列はそのまま等価性の証明になります。
"""

import re
from typing import Any

import canonicaljson
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..domain.cone import Frame, standard_frame
from ..domain.lattice import LatticeElement

_INTEGER_PATTERN = re.compile(r'^-?\d+$')

Matrix = list[list[str]]


def _validate_matrix(rows: Matrix) -> Matrix:
    if not rows:
        raise ValueError('フレームには少なくとも 1 行が必要です。')
    for i, row in enumerate(rows, start=1):
        for entry in row:
            if not _INTEGER_PATTERN.match(entry):
                raise ValueError(f"[行 {i}] 整数として解釈できない成分です: '{entry}'")
    return rows


def _to_vectors(rows: Matrix) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(entry) for entry in row) for row in rows)


def _to_rows(frame: Frame) -> Matrix:
    return [[str(c) for c in v] for v in frame.vectors]


class ElementFile(BaseModel):
    """
    格子元のシリアライズ形式。

    Attributes:
        ambient: 全空間の次元。
        frame: 錐フレームの各行 (整数文字列)。
        reference: 参照フレーム。省略時は E_std(ambient)。
    """

    model_config = ConfigDict(frozen=True, extra='forbid')

    ambient: int = Field(..., ge=1, description='全空間の次元。')
    frame: Matrix = Field(..., description='錐フレーム (行ごとの整数文字列)。')
    reference: Matrix | None = Field(default=None, description='参照フレーム。')

    @field_validator('frame')
    @classmethod
    def validate_frame(cls, rows: Matrix) -> Matrix:
        return _validate_matrix(rows)

    @field_validator('reference')
    @classmethod
    def validate_reference(cls, rows: Matrix | None) -> Matrix | None:
        return None if rows is None else _validate_matrix(rows)

    @model_validator(mode='after')
    def check_row_lengths(self) -> 'ElementFile':
        for name, rows in (('frame', self.frame), ('reference', self.reference or [])):
            for i, row in enumerate(rows, start=1):
                if len(row) != self.ambient:
                    raise ValueError(
                        f'[{name} 行 {i}] 成分の数 ({len(row)}) が ambient ({self.ambient}) と一致しません。'
                    )
        return self

    def to_element(self) -> LatticeElement:
        """
        格子元を構築します。

        Raises:
            InvalidFrameError: 行が原始的でない、直交しない、または張る空間が異なる場合。
        """
        reference = (
            Frame(_to_vectors(self.reference))
            if self.reference is not None
            else standard_frame(self.ambient)
        )
        return LatticeElement(reference, Frame(_to_vectors(self.frame)))

    @classmethod
    def from_element(cls, element: LatticeElement) -> 'ElementFile':
        return cls(
            ambient=element.ambient_dim,
            frame=_to_rows(element.cone),
            reference=_to_rows(element.reference),
        )

    def canonical_bytes(self) -> bytes:
        """キー順・空白なしの正規 JSON。"""
        payload: dict[str, Any] = self.model_dump(mode='json')
        return canonicaljson.encode_canonical_json(payload)
