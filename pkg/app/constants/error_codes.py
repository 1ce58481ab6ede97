"""
エラーコード定義

統一されたエラーコード・メッセージ・終了コードの定義
"""
from enum import Enum, IntEnum
from typing import Dict, Optional


class ErrorCode(str, Enum):
    """エラーコード定義"""
    # 共通エラー
    VALIDATION_ERROR = "VALIDATION_ERROR"
    INTERNAL_SERVER_ERROR = "INTERNAL_SERVER_ERROR"
    BAD_REQUEST = "BAD_REQUEST"

    # 剰余集合・彩色関連エラー
    INVALID_RESIDUE_SET = "INVALID_RESIDUE_SET"
    INVALID_COLORING = "INVALID_COLORING"
    INVALID_TRANSFORM = "INVALID_TRANSFORM"
    PRECONDITION_FAILED = "PRECONDITION_FAILED"

    # 探索・検証関連エラー
    SEARCH_BOUND_EXCEEDED = "SEARCH_BOUND_EXCEEDED"
    VERIFICATION_DEFECT = "VERIFICATION_DEFECT"

    # 設定・入出力エラー
    CONFIG_ERROR = "CONFIG_ERROR"
    IO_ERROR = "IO_ERROR"


class ErrorMessage:
    """エラーメッセージ定義"""

    # 共通エラーメッセージ
    VALIDATION_ERROR = "リクエストのバリデーションに失敗しました"
    INTERNAL_SERVER_ERROR = "サーバー内部エラーが発生しました"
    BAD_REQUEST = "不正なリクエストです"

    # 剰余集合・彩色関連エラーメッセージ
    INVALID_RESIDUE_SET = "剰余集合が不正です"
    INVALID_COLORING = "彩色が不正です"
    INVALID_TRANSFORM = "変換チェーンが不正です"
    PRECONDITION_FAILED = "前提条件を満たしていません"

    # 探索・検証関連エラーメッセージ
    SEARCH_BOUND_EXCEEDED = "探索上限を超えています"
    VERIFICATION_DEFECT = "構成した彩色が検証に失敗しました（内部不整合）"

    # 設定・入出力エラーメッセージ
    CONFIG_ERROR = "設定値が不正です"
    IO_ERROR = "ファイルの入出力に失敗しました"

    @classmethod
    def get_message(cls, error_code: ErrorCode, detail: Optional[str] = None) -> str:
        """
        エラーコードに対応するメッセージを取得する

        Args:
            error_code: エラーコード
            detail: 追加の詳細情報（オプション）

        Returns:
            str: エラーメッセージ
        """
        message_map: Dict[ErrorCode, str] = {
            ErrorCode.VALIDATION_ERROR: cls.VALIDATION_ERROR,
            ErrorCode.INTERNAL_SERVER_ERROR: cls.INTERNAL_SERVER_ERROR,
            ErrorCode.BAD_REQUEST: cls.BAD_REQUEST,
            ErrorCode.INVALID_RESIDUE_SET: cls.INVALID_RESIDUE_SET,
            ErrorCode.INVALID_COLORING: cls.INVALID_COLORING,
            ErrorCode.INVALID_TRANSFORM: cls.INVALID_TRANSFORM,
            ErrorCode.PRECONDITION_FAILED: cls.PRECONDITION_FAILED,
            ErrorCode.SEARCH_BOUND_EXCEEDED: cls.SEARCH_BOUND_EXCEEDED,
            ErrorCode.VERIFICATION_DEFECT: cls.VERIFICATION_DEFECT,
            ErrorCode.CONFIG_ERROR: cls.CONFIG_ERROR,
            ErrorCode.IO_ERROR: cls.IO_ERROR,
        }

        base_message = message_map.get(error_code, cls.INTERNAL_SERVER_ERROR)

        if detail:
            return f"{base_message}: {detail}"

        return base_message


class SuccessMessage:
    """成功メッセージ定義"""

    # 共通成功メッセージ
    OPERATION_SUCCESS = "処理が正常に完了しました"

    # 多色数関連成功メッセージ
    POLY_NUMBER_COMPUTED = "多色数を計算しました"
    WITNESS_CONSTRUCTED = "証拠彩色を構成しました"
    COLORING_VERIFIED = "彩色の検証が完了しました"
    ORACLE_COMPLETED = "全探索が完了しました"
    TILING_SEARCHED = "タイリング探索が完了しました"
    NEWMAN_CHECKED = "Newman条件を判定しました"
    BLOCKING_SEARCHED = "最小ブロッキング集合の探索が完了しました"


class ExitCode(IntEnum):
    """CLI終了コード定義"""
    SUCCESS = 0  # 成功・全行一致
    SEMANTIC_FAILURE = 1  # 違反・不一致・証拠なし
    USAGE_ERROR = 2  # 入力不正・探索上限超過
    INTERNAL_DEFECT = 3  # 構成の自己検証失敗
    IO_ERROR = 4  # ファイル入出力失敗
