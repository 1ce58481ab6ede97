"""
ドメインモデル定義

剰余集合・変換チェーン・彩色・分類結果・証明書の不変なモデル
"""
from app.models.certificate import TileCertificate, Violation
from app.models.classification import CASE_POLY_NUMBER, CaseTag, Classification
from app.models.coloring import COLOR_LETTERS, Coloring, EllMatrix
from app.models.residue import (
    CanonicalForm,
    CanonicalKind,
    ResidueSet,
    ScaleDivideStep,
    TransformChain,
    TranslateStep,
    UnitMultiplyStep,
)

__all__ = [
    "CASE_POLY_NUMBER",
    "COLOR_LETTERS",
    "CanonicalForm",
    "CanonicalKind",
    "CaseTag",
    "Classification",
    "Coloring",
    "EllMatrix",
    "ResidueSet",
    "ScaleDivideStep",
    "TileCertificate",
    "TransformChain",
    "TranslateStep",
    "UnitMultiplyStep",
    "Violation",
]
