# FILE: src/ortholattice/shared/settings.py

import tomllib
from contextvars import ContextVar
from pathlib import Path
from typing import Any, cast

from pydantic import (
    BaseModel,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)

from .constants import NUMERIC_DEFAULTS
from .exceptions import SettingsError

# Settings の初期化中だけ --config のパスを settings_customise_sources に渡す
_CONFIG_FILE: ContextVar[Path | None] = ContextVar('_CONFIG_FILE', default=None)

_LOG_LEVELS = ('TRACE', 'DEBUG', 'INFO', 'SUCCESS', 'WARNING', 'ERROR', 'CRITICAL')


# --- TOMLファイル読み込みロジック ---
def load_toml_config(toml_file: Path) -> dict[str, Any]:
    """指定されたTOMLファイルを読み込みます。"""
    if not toml_file.is_file():
        return {}
    try:
        with toml_file.open('rb') as f:
            return tomllib.load(f)
    except Exception as e:
        raise SettingsError(
            f"設定ファイル '{toml_file}' の解析に失敗しました: {e}"
        ) from e


class TomlConfigSettingsSource(PydanticBaseSettingsSource):
    """--config で指定されたTOML設定ファイルを読み込むカスタムソース。"""

    def __init__(self, settings_cls: type[BaseSettings], config_file: Path | None):
        super().__init__(settings_cls)
        self._toml_config: dict[str, Any] = (
            load_toml_config(config_file) if config_file else {}
        )

    def get_field_value(self, field: object, field_name: str) -> tuple[Any, str, bool]:
        # フィールド単位の取得はサポートせず、__call__ で一括して返す
        return None, field_name, False

    def __call__(self) -> dict[str, Any]:
        return self._toml_config


class PyProjectTomlSource(PydanticBaseSettingsSource):
    """pyproject.tomlから[tool.ortholattice]セクションを読み込むソース。"""

    def __init__(self, settings_cls: type[BaseSettings]):
        super().__init__(settings_cls)
        pyproject_path = Path.cwd() / 'pyproject.toml'
        config = load_toml_config(pyproject_path)
        self._config = cast(dict[str, Any], config.get('tool', {}).get('ortholattice', {}))

    def get_field_value(self, field: object, field_name: str) -> tuple[Any, str, bool]:
        return None, field_name, False

    def __call__(self) -> dict[str, Any]:
        return self._config


# --- 設定モデル定義 ---


class ArithSettings(BaseModel):
    """スカラー演算に関する設定。"""

    float_tolerance: float = Field(
        default=NUMERIC_DEFAULTS.FLOAT_TOLERANCE,
        gt=0,
        description='浮動小数点バックエンドでゼロとみなす相対許容誤差 τ。',
    )


class GeneratorSettings(BaseModel):
    """乱数生成器に関する設定。"""

    coefficient_bound: int = Field(
        default=NUMERIC_DEFAULTS.COEFFICIENT_BOUND,
        ge=1,
        description='ランダムな整数ベクトルの成分の絶対値の上限。',
    )
    max_retries: int = Field(
        default=NUMERIC_DEFAULTS.MAX_RETRIES,
        ge=1,
        description='一次独立な基底が得られるまでの最大試行回数。',
    )


class CheckSettings(BaseModel):
    """検証スイート (check コマンド) に関する設定。"""

    dim_min: int = Field(default=2, ge=2, description='検証する最小の次元。')
    dim_max: int = Field(default=5, ge=2, description='検証する最大の次元。')
    iters: int = Field(default=200, ge=0, description='次元ごとのケース数。')
    suite_iters: dict[str, int] = Field(
        default_factory=lambda: {'duality': 500, 'canonicalization': 500},
        description=(
            'スイートごとの次元あたりケース数。ここにないスイートは iters を使います。'
            'check の --iters を指定すると無視されます。'
        ),
    )
    seed: int = Field(default=0, ge=0, lt=2**64, description='ルートシード。')
    samples: int = Field(
        default=10_000,
        ge=1,
        description='上界の健全性検査で join ごとに引くレイの数。',
    )
    ray_samples: int = Field(
        default=1000,
        ge=1,
        description='射影・正規化の検査で引く部分空間内のレイの数。',
    )
    falsifier_samples: int = Field(
        default=10_000,
        ge=1,
        description='非空な元の帰属レイを探す際の最大試行回数。',
    )
    exhaustive_bound: int = Field(
        default=10, ge=1, description='円周オラクルの網羅的な族の境界座標の上限。'
    )
    exhaustive_pair_bound: int = Field(
        default=3, ge=1, description='二項演算を網羅的に比較する族の境界座標の上限。'
    )
    oracle_pairs: int = Field(
        default=1000, ge=0, description='円周オラクルと比較するランダムな組の数。'
    )
    max_workers: int = Field(
        default=1,
        ge=1,
        description='スイートを並列実行するプロセス数。1 なら逐次実行。',
    )

    @model_validator(mode='after')
    def check_ranges(self) -> 'CheckSettings':
        if self.dim_min > self.dim_max:
            raise ValueError(
                f'dim_min ({self.dim_min}) が dim_max ({self.dim_max}) を超えています。'
            )
        negative = sorted(name for name, n in self.suite_iters.items() if n < 0)
        if negative:
            raise ValueError(f'suite_iters のケース数が負です: {", ".join(negative)}')
        return self


class BenchSettings(BaseModel):
    """ベンチマークに関する設定。"""

    dim: int = Field(default=10, ge=2, description='ベンチマークの次元。')
    iters: int = Field(default=100, ge=1, description='計測する join の回数。')
    seed: int = Field(default=0, ge=0, lt=2**64, description='入力を生成するシード。')


class Settings(BaseSettings):
    """
    アプリケーションの階層的設定管理クラス。
    以下の優先順位で設定を読み込みます:
    1. Pythonコードからの直接初期化
    2. --config で指定されたカスタムTOMLファイル
    3. 環境変数 (例: ORTHOLATTICE_CHECK__ITERS=50)
    4. .env ファイル
    5. pyproject.toml内の [tool.ortholattice] セクション
    6. モデルで定義されたデフォルト値
    """

    arith: ArithSettings = Field(default_factory=ArithSettings)
    generator: GeneratorSettings = Field(default_factory=GeneratorSettings)
    check: CheckSettings = Field(default_factory=CheckSettings)
    bench: BenchSettings = Field(default_factory=BenchSettings)
    log_level: str = Field(
        default='INFO',
        description='-v を指定しないときのコンソールのログレベル (loguru のレベル名)。',
    )

    def __init__(self, **values: object):
        config_file_path = values.pop('_config_file', None)
        token = _CONFIG_FILE.set(
            Path(cast(Path | str, config_file_path)) if config_file_path else None
        )
        try:
            super().__init__(**values)  # type: ignore [arg-type]
        except (ValidationError, ValueError) as e:
            raise SettingsError(f'設定の検証に失敗しました:\n{e}') from e
        finally:
            _CONFIG_FILE.reset(token)

    @field_validator('log_level')
    @classmethod
    def normalize_log_level(cls, value: str) -> str:
        level = value.upper()
        if level not in _LOG_LEVELS:
            raise ValueError(
                f'未知のログレベルです: {value} (利用可能: {", ".join(_LOG_LEVELS)})'
            )
        return level

    model_config = SettingsConfigDict(
        env_nested_delimiter='__',
        env_prefix='ORTHOLATTICE_',
        env_file='.env',
        env_file_encoding='utf-8',
        extra='ignore',
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (
            init_settings,
            TomlConfigSettingsSource(settings_cls, _CONFIG_FILE.get()),
            env_settings,
            dotenv_settings,
            PyProjectTomlSource(settings_cls),
        )
