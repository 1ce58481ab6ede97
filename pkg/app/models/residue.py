"""
剰余集合モデル

Z_n の部分集合 S、正規化のための変換ステップ・変換チェーン、正規形の定義
"""
from enum import Enum
from math import gcd
from typing import Annotated, Iterable, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.constants.error_codes import ErrorCode
from app.exceptions import InvalidInputError


class ResidueSet(BaseModel):
    """
    Z_n の部分集合

    要素は [0, n) に簡約済みで、狭義単調増加の順に保持する
    """
    model_config = ConfigDict(frozen=True)

    modulus: int = Field(..., ge=1, description="法 n")
    elements: tuple[int, ...] = Field(..., description="昇順に並んだ剰余")

    @model_validator(mode="after")
    def _check_elements(self) -> "ResidueSet":
        if not 1 <= len(self.elements) <= self.modulus:
            raise ValueError(f"要素数 {len(self.elements)} は 1..{self.modulus} の範囲外です")
        if any(not 0 <= e < self.modulus for e in self.elements):
            raise ValueError(f"要素 {self.elements} が [0, {self.modulus}) に簡約されていません")
        if any(x >= y for x, y in zip(self.elements, self.elements[1:])):
            raise ValueError(f"要素 {self.elements} が狭義単調増加ではありません")
        return self

    @classmethod
    def of(cls, modulus: int, residues: Iterable[int]) -> "ResidueSet":
        """
        任意の整数列から剰余集合を作成する（mod n で簡約し、順序は問わない）

        Args:
            modulus: 法 n
            residues: 整数列

        Returns:
            ResidueSet: 作成された剰余集合

        Raises:
            InvalidInputError: n < 1、空集合、または簡約後に重複する場合
        """
        if modulus < 1:
            raise InvalidInputError(
                f"法 n={modulus} は正の整数でなければなりません",
                error_code=ErrorCode.INVALID_RESIDUE_SET,
            )
        raw = list(residues)
        reduced = [r % modulus for r in raw]
        if not reduced:
            raise InvalidInputError("空集合は扱えません", error_code=ErrorCode.INVALID_RESIDUE_SET)
        if len(set(reduced)) != len(reduced):
            raise InvalidInputError(
                f"{raw} は mod {modulus} で重複します",
                error_code=ErrorCode.INVALID_RESIDUE_SET,
            )
        return cls(modulus=modulus, elements=tuple(sorted(reduced)))

    @classmethod
    def parse(cls, modulus: int, text: str) -> "ResidueSet":
        """
        カンマ区切り文字列（"0,1,3"）から剰余集合を作成する

        Args:
            modulus: 法 n
            text: カンマ区切りの整数

        Returns:
            ResidueSet: 作成された剰余集合

        Raises:
            InvalidInputError: 整数として解釈できない場合
        """
        try:
            residues = [int(part) for part in text.split(",") if part.strip() != ""]
        except ValueError as e:
            raise InvalidInputError(
                f"'{text}' はカンマ区切りの整数ではありません",
                error_code=ErrorCode.INVALID_RESIDUE_SET,
            ) from e
        return cls.of(modulus, residues)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    def translate(self, shift: int) -> "ResidueSet":
        """平行移動 shift + S"""
        n = self.modulus
        return ResidueSet(modulus=n, elements=tuple(sorted((e + shift) % n for e in self.elements)))

    def multiply(self, factor: int) -> "ResidueSet":
        """
        単元倍 factor·S

        Raises:
            InvalidInputError: factor が mod n の単元でない場合
        """
        n = self.modulus
        if gcd(factor, n) != 1:
            raise InvalidInputError(
                f"{factor} は mod {n} の単元ではありません",
                error_code=ErrorCode.INVALID_TRANSFORM,
            )
        return ResidueSet(modulus=n, elements=tuple(sorted((e * factor) % n for e in self.elements)))

    def negate(self) -> "ResidueSet":
        """符号反転 −S"""
        return self.multiply(self.modulus - 1) if self.modulus > 1 else self

    def to_text(self) -> str:
        """カンマ区切り表現"""
        return ",".join(str(e) for e in self.elements)


class TranslateStep(BaseModel):
    """平行移動ステップ x ↦ x + shift"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["translate"] = "translate"
    shift: int = Field(..., description="平行移動量 c")

    def target_modulus(self, modulus: int) -> int:
        return modulus

    def validate_at(self, modulus: int) -> None:
        return None

    def apply(self, elements: tuple[int, ...], modulus: int) -> tuple[tuple[int, ...], int]:
        return tuple(sorted((e + self.shift) % modulus for e in elements)), modulus

    def pull_back(self, colors: list[int], source_modulus: int) -> list[int]:
        return [colors[(x + self.shift) % source_modulus] for x in range(source_modulus)]

    def summary(self) -> str:
        return f"translate({self.shift})"


class UnitMultiplyStep(BaseModel):
    """単元倍ステップ x ↦ factor·x（gcd(factor, n) = 1）"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["unit_multiply"] = "unit_multiply"
    factor: int = Field(..., ge=1, description="単元 d")

    def target_modulus(self, modulus: int) -> int:
        return modulus

    def validate_at(self, modulus: int) -> None:
        if gcd(self.factor, modulus) != 1:
            raise InvalidInputError(
                f"{self.factor} は mod {modulus} の単元ではありません",
                error_code=ErrorCode.INVALID_TRANSFORM,
            )

    def apply(self, elements: tuple[int, ...], modulus: int) -> tuple[tuple[int, ...], int]:
        self.validate_at(modulus)
        return tuple(sorted((e * self.factor) % modulus for e in elements)), modulus

    def pull_back(self, colors: list[int], source_modulus: int) -> list[int]:
        # χ(y) = χ'(d·y)
        return [colors[(self.factor * x) % source_modulus] for x in range(source_modulus)]

    def summary(self) -> str:
        return f"multiply({self.factor})"


class ScaleDivideStep(BaseModel):
    """スケール除算ステップ Z_{d·n'} ⊇ dZ → Z_{n'}、x ↦ x / d"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["scale_divide"] = "scale_divide"
    divisor: int = Field(..., ge=1, description="共通因子 d")

    def target_modulus(self, modulus: int) -> int:
        return modulus // self.divisor

    def validate_at(self, modulus: int) -> None:
        if modulus % self.divisor != 0:
            raise InvalidInputError(
                f"{self.divisor} は法 {modulus} を割り切りません",
                error_code=ErrorCode.INVALID_TRANSFORM,
            )

    def apply(self, elements: tuple[int, ...], modulus: int) -> tuple[tuple[int, ...], int]:
        self.validate_at(modulus)
        if any(e % self.divisor for e in elements):
            raise InvalidInputError(
                f"{self.divisor} は全要素 {elements} を割り切りません",
                error_code=ErrorCode.INVALID_TRANSFORM,
            )
        return tuple(e // self.divisor for e in elements), modulus // self.divisor

    def pull_back(self, colors: list[int], source_modulus: int) -> list[int]:
        # χ(qd + c) = χ'(q)、0 ≤ c < d（各剰余類に複製）
        return [colors[x // self.divisor] for x in range(source_modulus)]

    def summary(self) -> str:
        return f"divide({self.divisor})"


TransformStep = Annotated[
    Union[TranslateStep, UnitMultiplyStep, ScaleDivideStep],
    Field(discriminator="kind"),
]


class TransformChain(BaseModel):
    """
    変換チェーン

    入力集合を正規形へ写す平行移動・単元倍・スケール除算の列。彩色に対して逆向きに適用できる
    """
    model_config = ConfigDict(frozen=True)

    source_modulus: int = Field(..., ge=1, description="変換前の法")
    target_modulus: int = Field(..., ge=1, description="変換後の法")
    steps: tuple[TransformStep, ...] = Field(default=(), description="適用順のステップ列")

    @model_validator(mode="after")
    def _check_moduli(self) -> "TransformChain":
        modulus = self.source_modulus
        for step in self.steps:
            step.validate_at(modulus)
            modulus = step.target_modulus(modulus)
        if modulus != self.target_modulus:
            raise ValueError(
                f"ステップ適用後の法 {modulus} が target_modulus={self.target_modulus} と一致しません"
            )
        return self

    @classmethod
    def identity(cls, modulus: int) -> "TransformChain":
        return cls(source_modulus=modulus, target_modulus=modulus, steps=())

    @property
    def is_identity(self) -> bool:
        return not self.steps

    def moduli(self) -> list[int]:
        """各ステップ適用前の法（末尾に最終の法を含む）"""
        result = [self.source_modulus]
        for step in self.steps:
            result.append(step.target_modulus(result[-1]))
        return result

    def then(self, step: TranslateStep | UnitMultiplyStep | ScaleDivideStep) -> "TransformChain":
        """ステップを末尾に追加したチェーンを返す"""
        return TransformChain(
            source_modulus=self.source_modulus,
            target_modulus=step.target_modulus(self.target_modulus),
            steps=(*self.steps, step),
        )

    def apply(self, residue_set: ResidueSet) -> ResidueSet:
        """
        チェーンを集合に適用する

        Raises:
            InvalidInputError: 法が一致しない場合、またはステップの前提を満たさない場合
        """
        if residue_set.modulus != self.source_modulus:
            raise InvalidInputError(
                f"集合の法 {residue_set.modulus} がチェーンの法 {self.source_modulus} と一致しません",
                error_code=ErrorCode.INVALID_TRANSFORM,
            )
        elements, modulus = residue_set.elements, residue_set.modulus
        for step in self.steps:
            elements, modulus = step.apply(elements, modulus)
        return ResidueSet(modulus=modulus, elements=elements)

    def summary(self) -> str:
        if self.is_identity:
            return "identity"
        return " > ".join(step.summary() for step in self.steps)


class CanonicalKind(str, Enum):
    """正規形の種別"""
    CASE_I = "CaseI"  # {0, 1, b'}、b' ≤ ⌈n'/2⌉
    CASE_II = "CaseII"  # {0, a, b}、gcd(a,n') > 1 かつ gcd(b,n') > 1


class CanonicalForm(BaseModel):
    """3元集合の正規形と、そこに至る変換チェーン"""
    model_config = ConfigDict(frozen=True)

    kind: CanonicalKind = Field(..., description="正規形の種別")
    reduced_modulus: int = Field(..., ge=1, description="簡約後の法 n'")
    reduced_set: ResidueSet = Field(..., description="簡約後の集合")
    chain: TransformChain = Field(..., description="入力集合から簡約後集合への変換")

    @model_validator(mode="after")
    def _check_form(self) -> "CanonicalForm":
        n = self.reduced_modulus
        if self.reduced_set.modulus != n or self.chain.target_modulus != n:
            raise ValueError("reduced_modulus と集合・チェーンの法が一致しません")
        elements = self.reduced_set.elements
        if len(elements) != 3 or elements[0] != 0:
            raise ValueError(f"正規形は 0 を含む3元集合でなければなりません: {elements}")
        _, a, b = elements
        if gcd(gcd(a, b), n) != 1:
            raise ValueError(f"gcd({a}, {b}, {n}) ≠ 1")
        if self.kind == CanonicalKind.CASE_I:
            if a != 1 or b > (n + 1) // 2:
                raise ValueError(f"CaseI は {{0, 1, b'}}、b' ≤ ⌈n/2⌉ でなければなりません: {elements}")
        elif gcd(a, n) == 1 or gcd(b, n) == 1:
            raise ValueError(f"CaseII では gcd(a,n), gcd(b,n) がともに 1 より大きい必要があります: {elements}")
        return self
