"""
ドメイン例外定義

ライブラリ・CLI・HTTPの各層で共通に扱う例外クラス
"""
from typing import Optional

from app.constants.error_codes import ErrorCode, ErrorMessage


class PolychromaticError(Exception):
    """
    ドメイン例外の基底クラス

    エラーコードと詳細情報を保持し、ErrorMessageからメッセージを組み立てる
    """

    default_code: ErrorCode = ErrorCode.INTERNAL_SERVER_ERROR

    def __init__(self, detail: Optional[str] = None, error_code: Optional[ErrorCode] = None):
        """
        例外を初期化する

        Args:
            detail: 追加の詳細情報（オプション）
            error_code: エラーコード（省略時はクラスの既定値）
        """
        self.error_code = error_code or self.default_code
        self.detail = detail
        super().__init__(ErrorMessage.get_message(self.error_code, detail))

    @property
    def message(self) -> str:
        """利用者向けメッセージ"""
        return ErrorMessage.get_message(self.error_code, self.detail)


class InvalidInputError(PolychromaticError, ValueError):
    """入力値・前提条件の違反"""

    default_code = ErrorCode.PRECONDITION_FAILED


class SearchBoundExceededError(PolychromaticError):
    """全探索の上限超過"""

    default_code = ErrorCode.SEARCH_BOUND_EXCEEDED


class VerificationDefectError(PolychromaticError):
    """構成した彩色が自己検証に失敗した（起こり得ない内部不整合）"""

    default_code = ErrorCode.VERIFICATION_DEFECT
