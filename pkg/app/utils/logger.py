"""
ログ設定ユーティリティ

Loguruを使用したログ設定
CLIの標準出力を汚さないよう、コンソール出力は既定で標準エラーに送る
"""
import sys
from pathlib import Path
from typing import Any, Optional, TextIO

from loguru import logger


def _rotation_from_bytes(max_bytes: int) -> str:
    """
    バイト数をloguruのローテーション指定（"10.0 MB"など）に変換する

    Args:
        max_bytes: ログファイルの最大サイズ（バイト）

    Returns:
        str: loguru形式のサイズ指定
    """
    if max_bytes >= 1024 * 1024 * 1024:
        return f"{max_bytes / (1024 * 1024 * 1024):.1f} GB"
    if max_bytes >= 1024 * 1024:
        return f"{max_bytes / (1024 * 1024):.1f} MB"
    if max_bytes >= 1024:
        return f"{max_bytes / 1024:.1f} KB"
    return f"{max_bytes} B"


def setup_logging(
    log_level: str = "INFO",
    log_file: Optional[str] = None,
    log_format: Optional[str] = None,
    max_bytes: Optional[int] = None,
    backup_count: int = 5,
    when: Optional[str] = None,
    sink: Optional[TextIO] = None,
) -> None:
    """
    ログ設定を初期化する（Loguruを使用）

    Args:
        log_level: ログレベル (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: ログファイルパス（指定しない場合はコンソールのみ）
        log_format: ログフォーマット（デフォルトは標準フォーマット）
        max_bytes: ログファイルの最大サイズ（バイト）。指定するとサイズベースのローテーションが有効
        backup_count: 保持するバックアップファイル数（デフォルト: 5）
        when: 日付ベースのローテーション間隔（'H', 'D', 'midnight'など）
        sink: コンソール出力先（デフォルト: 呼び出し時点の標準エラー）
    """
    # 既存のハンドラーを削除
    logger.remove()
    if sink is None:
        sink = sys.stderr

    if log_format is None:
        log_format = (
            "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
            "<level>{level: <8}</level> | "
            "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
            "<level>{message}</level>"
        )

    logger.add(
        sink,
        format=log_format,
        level=log_level.upper(),
        colorize=sink.isatty() if hasattr(sink, "isatty") else False,
        backtrace=True,
        diagnose=False,
    )

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)

        file_format = (
            "{time:YYYY-MM-DD HH:mm:ss} | "
            "{level: <8} | "
            "{name}:{function}:{line} | "
            "{message}"
        )

        rotation: Any = None
        if when:
            rotation = when
        elif max_bytes:
            rotation = _rotation_from_bytes(max_bytes)

        logger.add(
            log_file,
            format=file_format,
            level=log_level.upper(),
            rotation=rotation,
            retention=backup_count,
            compression="zip",  # 古いログファイルを自動的に圧縮
            encoding="utf-8",
            backtrace=True,
            diagnose=False,
        )


def get_logger(name: Optional[str] = None):
    """
    ロガーインスタンスを取得する

    Args:
        name: ロガー名（省略可能、loguruはグローバルロガーを使用）

    Returns:
        loguru.Logger: ロガーインスタンス
    """
    if name:
        return logger.bind(name=name)
    return logger
