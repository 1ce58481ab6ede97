"""
分類結果モデル

閉じた式で求めた多色数 p_n(S) と、それを与えた場合分けの定義
"""
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CaseTag(str, Enum):
    """多色数を決めた場合分け"""
    MOD3_TILING = "Mod3Tiling"  # p = 3（mod 3 条件、タイリング）
    FANO_CASE = "FanoCase"  # p = 1（位数7の部分群上の {0,1,3} 型）
    GENERIC_TWO = "GenericTwo"  # p = 2（3元集合のその他）
    SIZE2_EVEN = "Size2Even"  # p = 2（|<b>| が偶数）
    SIZE2_ODD = "Size2Odd"  # p = 1（|<b>| が奇数）


# 場合分けごとの多色数
CASE_POLY_NUMBER: dict[CaseTag, int] = {
    CaseTag.MOD3_TILING: 3,
    CaseTag.FANO_CASE: 1,
    CaseTag.GENERIC_TWO: 2,
    CaseTag.SIZE2_EVEN: 2,
    CaseTag.SIZE2_ODD: 1,
}


class Classification(BaseModel):
    """多色数の分類結果"""
    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=1, le=3, description="多色数 p_n(S)")
    case_tag: CaseTag = Field(..., description="場合分け")
    detail: dict[str, int] = Field(
        default_factory=dict,
        description="場合分けのパラメータ（j, m_a, m_b、位数7の生成元、|<b>| など）",
    )

    @model_validator(mode="after")
    def _check_case(self) -> "Classification":
        expected = CASE_POLY_NUMBER[self.case_tag]
        if self.p != expected:
            raise ValueError(f"{self.case_tag.value} の多色数は {expected} ですが p={self.p} です")
        return self
