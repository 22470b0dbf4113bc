# whitelist.py
"""
このファイルは Vulture が検出した「デッドコード」の誤検知を
抑制するためのホワイトリストです。

Pydanticモデルのバリデータ、Typerのコマンド、
Protocolのメソッド定義など、Vulture が静的解析で
「未使用」と判断してしまう項目をここで定義することで、
Vulture のレポートから除外します。
"""

# --- Pydantic のバリデータと設定 ---
model_config
validate_frame
validate_reference
check_row_lengths
check_ranges
normalize_log_level
settings_customise_sources
get_field_value

# --- Typer のコマンドとコールバック (デコレータ経由で登録) ---
main_callback
join
meet
leq
member
canon
complement
is_bottom
restrict
random
check
bench
run_app

# --- 公開 API (テストとライブラリ利用者向け) ---
random_ray
random_frame
spawn
standard_top
standard_bottom
join_all
meet_all
compare
same_direction
first_failure
open_part_contains
traces_coincide
parse_rational
format_rational

# --- Protocol の引数 (厳密バックエンドは誤差の尺度を使わない) ---
scale
