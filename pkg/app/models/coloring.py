"""
彩色モデル

Z_n の k-彩色と、ell-tile 2-彩色のための行列の定義
"""
from typing import Iterable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.constants.error_codes import ErrorCode
from app.exceptions import InvalidInputError

# 色インデックスの文字表現（0-9, a-z）
COLOR_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
# 表示用の色名（0↔R, 1↔B, 2↔Y）
COLOR_LETTERS = "RBY"


class Coloring(BaseModel):
    """Z_n の k-彩色（colors[i] が元 i の色）"""
    model_config = ConfigDict(frozen=True)

    modulus: int = Field(..., ge=1, description="法 n")
    num_colors: int = Field(..., ge=1, description="色数 k")
    colors: tuple[int, ...] = Field(..., description="長さ n の色インデックス列")

    @model_validator(mode="after")
    def _check_colors(self) -> "Coloring":
        if len(self.colors) != self.modulus:
            raise ValueError(f"彩色の長さ {len(self.colors)} が法 {self.modulus} と一致しません")
        if any(not 0 <= c < self.num_colors for c in self.colors):
            raise ValueError(f"色インデックスは [0, {self.num_colors}) でなければなりません")
        return self

    @classmethod
    def from_sequence(cls, colors: Iterable[int], num_colors: Optional[int] = None) -> "Coloring":
        """
        色インデックス列から彩色を作成する

        Args:
            colors: 色インデックス列
            num_colors: 色数（省略時は最大インデックス + 1）

        Returns:
            Coloring: 作成された彩色
        """
        values = tuple(int(c) for c in colors)
        k = num_colors if num_colors is not None else (max(values) + 1 if values else 1)
        return cls(modulus=len(values), num_colors=k, colors=values)

    @classmethod
    def constant(cls, modulus: int) -> "Coloring":
        """単色彩色"""
        return cls(modulus=modulus, num_colors=1, colors=(0,) * modulus)

    @classmethod
    def from_text(cls, text: str, num_colors: Optional[int] = None) -> "Coloring":
        """
        文字列表現（"012012012" または "RBYRBY"）から彩色を作成する

        Raises:
            InvalidInputError: 解釈できない文字を含む場合、または色数を超える場合
        """
        stripped = text.strip()
        if not stripped:
            raise InvalidInputError("彩色文字列が空です", error_code=ErrorCode.INVALID_COLORING)
        alphabet = COLOR_LETTERS if stripped.isalpha() and set(stripped) <= set(COLOR_LETTERS) else COLOR_ALPHABET
        try:
            values = [alphabet.index(ch) for ch in stripped]
        except ValueError as e:
            raise InvalidInputError(
                f"'{text}' は彩色文字列として解釈できません",
                error_code=ErrorCode.INVALID_COLORING,
            ) from e
        if num_colors is not None and max(values) >= num_colors:
            raise InvalidInputError(
                f"色インデックス {max(values)} が色数 {num_colors} を超えています",
                error_code=ErrorCode.INVALID_COLORING,
            )
        return cls.from_sequence(values, num_colors)

    @property
    def used_colors(self) -> int:
        """実際に使われている色の数"""
        return len(set(self.colors))

    def color_classes(self) -> list[tuple[int, ...]]:
        """色ごとの元の集合（色インデックス順）"""
        classes: list[list[int]] = [[] for _ in range(self.num_colors)]
        for x, c in enumerate(self.colors):
            classes[c].append(x)
        return [tuple(members) for members in classes]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.colors, dtype=np.int64)

    def to_text(self) -> str:
        return "".join(COLOR_ALPHABET[c] for c in self.colors)

    def to_letters(self) -> str:
        """R/B/Y 表示（4色以上は数字表現）"""
        if self.num_colors > len(COLOR_LETTERS):
            return self.to_text()
        return "".join(COLOR_LETTERS[c] for c in self.colors)


class EllMatrix(BaseModel):
    """
    s×t 行列の2彩色

    ell-tile は (i,j), (i,j+1), (i+1,j) の3成分（添字は mod s, mod t で折り返す）
    """
    model_config = ConfigDict(frozen=True)

    rows: int = Field(..., ge=1, description="行数 s")
    cols: int = Field(..., ge=1, description="列数 t")
    entries: tuple[tuple[int, ...], ...] = Field(..., description="成分 x_ij の色（0 または 1）")

    @model_validator(mode="after")
    def _check_shape(self) -> "EllMatrix":
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"成分の形状が {self.rows}×{self.cols} と一致しません")
        if any(v not in (0, 1) for row in self.entries for v in row):
            raise ValueError("成分は 0 または 1 でなければなりません")
        return self

    @classmethod
    def from_array(cls, array: np.ndarray) -> "EllMatrix":
        rows, cols = array.shape
        return cls(
            rows=rows,
            cols=cols,
            entries=tuple(tuple(int(v) for v in row) for row in array),
        )

    def as_array(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=np.int64)

    def monochromatic_tiles(self) -> list[tuple[int, int]]:
        """単色になっている ell-tile の左上位置 (i, j) の一覧"""
        x = self.as_array()
        right = np.roll(x, -1, axis=1)
        below = np.roll(x, -1, axis=0)
        mono = (x == right) & (x == below)
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(mono))]

    @property
    def is_ell_tile_coloring(self) -> bool:
        return not self.monochromatic_tiles()

    def to_letters(self) -> list[str]:
        return ["".join(COLOR_LETTERS[v] for v in row) for row in self.entries]
