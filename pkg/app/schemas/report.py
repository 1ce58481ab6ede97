"""
レポートスキーマ

CLIのJSON出力とAPIレスポンスで共通に使うレポートの定義
"""
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

# CSV出力の列
TABLE_HEADER = ("n", "a", "b", "p_closed_form", "p_oracle", "agree")


class RunReport(BaseModel):
    """多色数・証拠彩色の計算結果"""
    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(..., description="法")
    residue_set: list[int] = Field(..., alias="set", description="集合 S")
    p: int = Field(..., description="多色数")
    case_tag: Optional[str] = Field(None, description="場合分け（全探索の場合はNone）")
    method: Literal["closed_form", "oracle"] = Field(..., description="計算方法")
    witness: Optional[str] = Field(None, description="証拠彩色（色インデックスの文字列）")
    transform: Optional[str] = Field(None, description="正規形への変換チェーンの要約")
    timing_ms: float = Field(..., description="処理時間（ミリ秒）")


class ViolationItem(BaseModel):
    """色が欠けている平行移動"""
    shift: int = Field(..., description="平行移動量 a")
    translate: list[int] = Field(..., description="a + S の元")
    missing_colors: list[int] = Field(..., description="欠けている色")


class VerifyReport(BaseModel):
    """彩色の検証結果"""
    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(..., description="法")
    residue_set: list[int] = Field(..., alias="set", description="集合 S")
    colors: int = Field(..., description="色数 k")
    ok: bool = Field(..., description="多色的かどうか")
    violations: list[ViolationItem] = Field(default_factory=list, description="違反の一覧")


class VerifyRequest(BaseModel):
    """彩色検証リクエスト"""
    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(..., ge=1, description="法")
    residue_set: str = Field(..., alias="set", description="カンマ区切りの剰余（例: 0,1,3）")
    coloring: str = Field(..., min_length=1, description="彩色文字列（例: 012012012 または RBYRBY）")
    colors: int = Field(..., ge=1, le=36, description="色数 k")


class TileReport(BaseModel):
    """タイリング探索の結果"""
    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(..., description="法")
    residue_set: list[int] = Field(..., alias="set", description="集合 S")
    found: bool = Field(..., description="補集合が見つかったか")
    complement: Optional[list[int]] = Field(None, description="補集合 T（0 を含む）")
    exhausted: bool = Field(..., description="探索空間を網羅したか")
    closure: Optional[bool] = Field(None, description="x ∈ T ⇒ x + (a+b) ∈ T（|S| = 3 で補集合がある場合）")
    timing_ms: float = Field(..., description="処理時間（ミリ秒）")


class NewmanReport(BaseModel):
    """Newman条件の判定結果"""
    model_config = ConfigDict(populate_by_name=True)

    residue_set: list[int] = Field(..., alias="set", description="整数集合 S")
    p: int = Field(..., description="素数")
    alpha: int = Field(..., description="指数")
    valuations: list[int] = Field(..., description="差の p 進付値")
    tiles: bool = Field(..., description="Z をタイルするか")


class BlockingReport(BaseModel):
    """最小ブロッキング集合の探索結果"""
    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(..., description="法")
    residue_set: list[int] = Field(..., alias="set", description="集合 S")
    size: int = Field(..., description="最小サイズ")
    blocking_set: list[int] = Field(..., description="辞書順最初の最小ブロッキング集合")
    timing_ms: float = Field(..., description="処理時間（ミリ秒）")


class TableRow(BaseModel):
    """閉じた式と全探索の比較表の1行"""
    n: int
    a: Optional[int] = Field(None, description="|S| = 2 の場合は空欄")
    b: int
    p_closed_form: int
    p_oracle: Optional[int] = Field(None, description="全探索の上限を超える場合は空欄")
    agree: Optional[bool] = None

    @property
    def disagrees(self) -> bool:
        return self.agree is False

    def to_csv_row(self) -> list[str]:
        """CSVの1行（空欄は空文字列、真偽値は小文字）"""
        def cell(value: Optional[object]) -> str:
            if value is None:
                return ""
            if isinstance(value, bool):
                return "true" if value else "false"
            return str(value)

        return [cell(self.n), cell(self.a), cell(self.b), cell(self.p_closed_form), cell(self.p_oracle), cell(self.agree)]
