"""
定数定義

アプリケーション全体で使用する定数の定義
"""
from app.constants.error_codes import ErrorCode, ErrorMessage, ExitCode, SuccessMessage

__all__ = ["ErrorCode", "ErrorMessage", "ExitCode", "SuccessMessage"]
