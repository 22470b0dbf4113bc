# src/ortholattice/infrastructure/repositories/filesystem.py

import json
from pathlib import Path

from loguru import logger
from pydantic import ValidationError

from ...domain.interfaces import IElementRepository
from ...domain.lattice import LatticeElement
from ...models.element import ElementFile
from ...shared.exceptions import ElementFileError, OrthoLatticeError


class FileSystemElementRepository(IElementRepository):
    """要素ファイル (UTF-8 JSON) を読み書きするリポジトリ。"""

    def load_file(self, path: Path) -> ElementFile:
        """
        JSON を読み込み、スキーマを検証します。

        Raises:
            ElementFileError: 読み込み、JSON の解析、スキーマ検証のいずれかに失敗した場合。
        """
        try:
            raw = path.read_text(encoding='utf-8')
        except OSError as e:
            raise ElementFileError(f'ファイルを読み込めません: {e}', str(path)) from e
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as e:
            raise ElementFileError(f'JSON として解析できません: {e}', str(path)) from e
        try:
            return ElementFile.model_validate(data)
        except ValidationError as e:
            raise ElementFileError(f'要素ファイルの検証に失敗しました:\n{e}', str(path)) from e

    def load(self, path: Path) -> LatticeElement:
        """
        要素ファイルから格子元を構築します。フレームの不変条件違反も
        ElementFileError として、違反した行を添えて報告します。
        """
        element_file = self.load_file(path)
        try:
            element = element_file.to_element()
        except OrthoLatticeError as e:
            raise ElementFileError(str(e), str(path)) from e
        logger.bind(path=str(path), ambient=element.ambient_dim).debug(
            '要素ファイルを読み込みました。'
        )
        return element

    def dumps(self, element: LatticeElement) -> bytes:
        """正規形のバイト列。"""
        return ElementFile.from_element(element).canonical_bytes()

    def save(self, element: LatticeElement, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(self.dumps(element))
        logger.bind(path=str(path)).debug('要素ファイルを保存しました。')
