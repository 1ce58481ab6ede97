"""
設定管理モジュール

YAML設定ファイルと環境変数から設定を読み込み、local、ci、prodの3つの環境に対応する
"""
import os
from enum import Enum
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic_settings import BaseSettings, SettingsConfigDict

from app.constants.error_codes import ErrorCode
from app.exceptions import PolychromaticError

# 探索上限を一括で上書きする環境変数
ORACLE_MAX_ENV = "POLY_ORACLE_MAX"


class Environment(str, Enum):
    """実行環境の列挙型"""
    LOCAL = "local"  # ローカル開発環境
    CI = "ci"  # CI環境（検証スイープ用）
    PROD = "prod"  # 本番運用（CLI配布・APIサーバー）


def load_yaml_config(config_path: Path) -> dict[str, Any]:
    """
    YAML設定ファイルを読み込む

    Args:
        config_path: YAMLファイルのパス

    Returns:
        dict[str, Any]: 設定値の辞書（ファイルが存在しない場合は空の辞書）
    """
    if config_path.exists() and config_path.is_file():
        with open(config_path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}
    return {}


def get_config_files(env: str) -> list[Path]:
    """
    実行環境に応じた設定ファイルのパスリストを取得する

    読み込み順序:
    1. config.yaml - 共通設定
    2. config.{environment}.yaml - 環境固有設定（共通設定を上書き）

    Args:
        env: 実行環境名

    Returns:
        list[Path]: 設定ファイルのパスリスト
    """
    config_files = [Path("config.yaml")]
    if env in {e.value for e in Environment}:
        config_files.append(Path(f"config.{env}.yaml"))
    return config_files


def _deep_merge(base: dict[str, Any], update: dict[str, Any]) -> dict[str, Any]:
    """
    2つの辞書を深くマージする

    Args:
        base: ベースとなる辞書
        update: 更新する辞書

    Returns:
        dict[str, Any]: マージされた辞書
    """
    result = base.copy()
    for key, value in update.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _deep_merge(result[key], value)
        else:
            result[key] = value
    return result


def load_all_configs(env: str) -> dict[str, Any]:
    """
    すべての設定ファイルを読み込んでマージする（後から読み込んだ設定が優先）

    Args:
        env: 実行環境名

    Returns:
        dict[str, Any]: マージされた設定値の辞書
    """
    merged: dict[str, Any] = {}
    for config_file in get_config_files(env):
        merged = _deep_merge(merged, load_yaml_config(config_file))
    return merged


def flatten_config(config: dict[str, Any], parent_key: str = "", sep: str = "_") -> dict[str, Any]:
    """
    ネストされた辞書をフラット化する

    YAMLのネスト構造（oracle.max_poly）をフィールド名（oracle_max_poly）に変換する

    Args:
        config: ネストされた設定辞書
        parent_key: 親キー（再帰呼び出し用）
        sep: キーの区切り文字

    Returns:
        dict[str, Any]: フラット化された辞書
    """
    items: list[tuple[str, Any]] = []
    for key, value in config.items():
        new_key = f"{parent_key}{sep}{key}" if parent_key else key
        if isinstance(value, dict):
            items.extend(flatten_config(value, new_key, sep=sep).items())
        else:
            items.append((new_key, value))
    return dict(items)


def _read_oracle_override() -> Optional[int]:
    """
    POLY_ORACLE_MAX環境変数を読み取る

    Returns:
        Optional[int]: 上書き値（未設定の場合はNone）

    Raises:
        PolychromaticError: 正の整数でない場合
    """
    raw = os.getenv(ORACLE_MAX_ENV)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise PolychromaticError(
            f"{ORACLE_MAX_ENV}={raw!r} は正の整数ではありません",
            error_code=ErrorCode.CONFIG_ERROR,
        )
    return value


class Settings(BaseSettings):
    """
    アプリケーション設定クラス

    優先順位: 明示的な引数 > 環境変数 > 環境固有YAML > 共通YAML > デフォルト値
    """

    # 実行環境
    environment: Environment = Environment.LOCAL

    # API設定
    api_title: str = "Polychromatic Zn API"
    api_version: str = "0.1.0"
    api_description: str = "巡回群 Z_n における多色数の分類・証拠彩色・全探索検証"
    debug: bool = False

    # サーバー設定
    host: str = "127.0.0.1"
    port: int = 8080

    # ログ設定
    log_level: str = "INFO"
    log_file: Optional[str] = None
    log_max_bytes: Optional[int] = None  # Noneの場合はサイズローテーション無効
    log_backup_count: int = 5
    log_when: Optional[str] = None  # 日付ベースローテーション間隔（'D'、'H'、'midnight'）

    # 全探索の上限（nの最大値）
    oracle_max_poly: int = 40  # 多色数の全探索
    oracle_max_tile: int = 60  # 完全被覆によるタイリング探索
    oracle_max_blocking: int = 24  # 最小ブロッキング集合の探索
    table_oracle_max: int = 30  # tableコマンドの既定 --oracle-max

    # その他の設定
    project_name: str = "polychromatic-zn"

    model_config = SettingsConfigDict(
        case_sensitive=False,
        extra="ignore"
    )

    def __init__(self, **kwargs: Any):
        """
        設定を初期化し、環境に応じた設定を適用する

        Args:
            **kwargs: 設定値のキーワード引数
        """
        env_str = str(
            kwargs.get("environment") or os.getenv("ENVIRONMENT", "local")
        ).lower()
        if env_str not in {e.value for e in Environment}:
            env_str = Environment.LOCAL.value

        # YAML設定をフラット化してkwargsにマージ（kwargsが優先）
        yaml_config = flatten_config(load_all_configs(env_str))
        # 環境変数で指定された項目はYAMLより優先させる
        yaml_config = {
            key: value for key, value in yaml_config.items()
            if os.getenv(key.upper()) is None
        }
        merged_kwargs = {**yaml_config, **kwargs}
        merged_kwargs["environment"] = env_str

        override = _read_oracle_override()
        if override is not None:
            for key in ("oracle_max_poly", "oracle_max_tile", "oracle_max_blocking"):
                if key not in kwargs:
                    merged_kwargs[key] = override

        super().__init__(**merged_kwargs)

        # 環境に応じたデフォルト値を設定
        if self.is_local:
            if "log_level" not in merged_kwargs and not os.getenv("LOG_LEVEL"):
                self.log_level = "DEBUG"
        elif self.environment == Environment.PROD:
            self.debug = False

    @property
    def is_local(self) -> bool:
        """ローカル開発環境かどうかを判定"""
        return self.environment == Environment.LOCAL

    @property
    def is_prod(self) -> bool:
        """本番運用かどうかを判定"""
        return self.environment == Environment.PROD


# グローバル設定インスタンス
settings = Settings()
