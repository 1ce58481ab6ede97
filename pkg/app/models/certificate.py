"""
検証結果モデル

多色性の違反と、タイリングの補集合証明書の定義
"""
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.models.residue import ResidueSet


class Violation(BaseModel):
    """色が欠けている平行移動 a + S"""
    model_config = ConfigDict(frozen=True)

    shift: int = Field(..., ge=0, description="平行移動量 a")
    translate: ResidueSet = Field(..., description="平行移動 a + S")
    missing_colors: tuple[int, ...] = Field(..., description="欠けている色")

    @model_validator(mode="after")
    def _check_missing(self) -> "Violation":
        if not self.missing_colors:
            raise ValueError("missing_colors は空であってはなりません")
        return self


class TileCertificate(BaseModel):
    """
    S ⊕ T = Z_n となる補集合 T、または非存在の記録

    exhausted は探索空間を網羅したかどうか
    """
    model_config = ConfigDict(frozen=True)

    complement: Optional[ResidueSet] = Field(None, description="補集合 T（存在しない場合はNone）")
    exhausted: bool = Field(..., description="探索空間を網羅したか")

    @model_validator(mode="after")
    def _check_complement(self) -> "TileCertificate":
        if self.complement is not None and 0 not in self.complement:
            raise ValueError("補集合は 0 を含まなければなりません")
        return self

    @property
    def found(self) -> bool:
        return self.complement is not None
