# FILE: src/ortholattice/utils/ray_parser.py
"""コマンドライン引数 (レイ、次元の範囲) の解析。"""

import re

from ..domain.arith import IntVector
from ..shared.exceptions import InvalidInputError

_INTEGER_PATTERN = re.compile(r'^[+-]?\d+$')
_RANGE_PATTERN = re.compile(r'^(\d+)\.\.(\d+)$')


def parse_ray(text: str) -> IntVector:
    """
    '1,0,-2' のようなカンマ区切りの十進整数をレイとして解析します。

    Raises:
        InvalidInputError: 空、整数でない成分、またはゼロベクトルの場合。
    """
    parts = [p.strip() for p in text.split(',')]
    if not text.strip() or any(not _INTEGER_PATTERN.match(p) for p in parts):
        raise InvalidInputError(
            f"レイはカンマ区切りの整数で指定してください (例: '1,0'): '{text}'"
        )
    ray = tuple(int(p) for p in parts)
    if not any(ray):
        raise InvalidInputError('ゼロベクトルはレイではありません。')
    return ray


def parse_dims(text: str) -> tuple[int, ...]:
    """
    次元の指定を解析します。'2..5' (両端を含む範囲)、'3'、'2,4' の形式を受け付けます。

    Raises:
        InvalidInputError: 形式が不正、範囲が空、または 2 未満の次元を含む場合。
    """
    text = text.strip()
    match = _RANGE_PATTERN.match(text)
    if match:
        low, high = int(match.group(1)), int(match.group(2))
        if low > high:
            raise InvalidInputError(f'次元の範囲が空です: {text}')
        dims = tuple(range(low, high + 1))
    else:
        parts = [p.strip() for p in text.split(',')]
        if not all(p.isdigit() for p in parts):
            raise InvalidInputError(
                f"次元は '2..5'、'3' または '2,4' の形式で指定してください: '{text}'"
            )
        dims = tuple(sorted({int(p) for p in parts}))
    if dims[0] < 2:
        raise InvalidInputError(f'検証する次元は 2 以上である必要があります: {text}')
    return dims
