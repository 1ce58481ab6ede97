"""
多色数サービス

CLIとAPIから共通に呼ばれる処理の窓口。入力の解釈、計時、ログ出力、レポートの組み立てを行う
"""
import time
from itertools import combinations
from typing import Iterator, Literal, Optional, Sequence

from app.config import Settings, settings as default_settings
from app.constants.error_codes import ErrorCode
from app.exceptions import InvalidInputError, VerificationDefectError
from app.models.coloring import Coloring
from app.models.residue import ResidueSet
from app.schemas.report import (
    BlockingReport,
    NewmanReport,
    RunReport,
    TableRow,
    TileReport,
    VerifyReport,
    ViolationItem,
)
from app.services import classify, construct, oracle
from app.services.zn_core import normalize, reduce_gcd
from app.utils.logger import get_logger

logger = get_logger(__name__)

Method = Literal["closed_form", "oracle"]


def _elapsed_ms(started: float) -> float:
    return round((time.perf_counter() - started) * 1000, 3)


class PolychromaticService:
    """多色数サービスクラス"""

    def __init__(self, settings: Optional[Settings] = None):
        """
        サービスを初期化する

        Args:
            settings: 設定（省略時はアプリケーション設定）
        """
        self.settings = settings or default_settings

    @staticmethod
    def parse_set(n: int, text: str) -> ResidueSet:
        """
        カンマ区切り文字列を Z_n の剰余集合に変換する

        Raises:
            InvalidInputError: 整数列として解釈できない場合、または重複する場合
        """
        try:
            return ResidueSet.parse(n, text)
        except InvalidInputError:
            logger.warning(f"集合の解釈に失敗: n={n}, set={text!r}")
            raise

    @staticmethod
    def parse_integers(text: str) -> list[int]:
        """
        カンマ区切り文字列を整数列に変換する（mod による簡約はしない）

        Raises:
            InvalidInputError: 整数列として解釈できない場合
        """
        try:
            return [int(part) for part in text.split(",") if part.strip() != ""]
        except ValueError as e:
            logger.warning(f"整数列の解釈に失敗: {text!r}")
            raise InvalidInputError(f"'{text}' はカンマ区切りの整数ではありません") from e

    def poly_number(self, n: int, residue_set: ResidueSet, method: Method = "closed_form") -> RunReport:
        """
        多色数を求める

        Args:
            n: 法
            residue_set: 集合 S
            method: closed_form（閉じた式）または oracle（全探索）

        Returns:
            RunReport: 計算結果
        """
        if method == "oracle":
            return self.run_oracle(n, residue_set)

        logger.info(f"多色数計算開始: n={n}, S={residue_set.to_text()}")
        started = time.perf_counter()
        classification = classify.poly_number(n, residue_set)
        report = RunReport(
            n=n,
            residue_set=list(residue_set.elements),
            p=classification.p,
            case_tag=classification.case_tag.value,
            method="closed_form",
            timing_ms=_elapsed_ms(started),
        )
        logger.info(f"多色数計算完了: p={report.p}, case={report.case_tag}")
        return report

    def build_witness(self, n: int, residue_set: ResidueSet, verify: bool = False) -> RunReport:
        """
        証拠彩色を構成する

        Args:
            n: 法
            residue_set: 2元または3元集合
            verify: 構成後に全平行移動を改めて検証するか

        Returns:
            RunReport: 証拠彩色と変換チェーンの要約を含む結果

        Raises:
            VerificationDefectError: 構成した彩色が検証に失敗した場合
        """
        logger.info(f"証拠彩色構成開始: n={n}, S={residue_set.to_text()}, verify={verify}")
        started = time.perf_counter()
        classification = classify.poly_number(n, residue_set)
        coloring, branch = construct.witness_with_branch(n, residue_set)

        if verify:
            violations = oracle.verify(n, residue_set, coloring)
            if violations:
                logger.error(f"証拠彩色の再検証に失敗: branch={branch}, violations={len(violations)}")
                raise VerificationDefectError(f"{branch}: {len(violations)} 個の平行移動が違反")

        report = RunReport(
            n=n,
            residue_set=list(residue_set.elements),
            p=classification.p,
            case_tag=classification.case_tag.value,
            method="closed_form",
            witness=coloring.to_text(),
            transform=self._transform_summary(residue_set, classification.p, branch),
            timing_ms=_elapsed_ms(started),
        )
        logger.info(f"証拠彩色構成完了: p={report.p}, branch={branch}")
        return report

    @staticmethod
    def _transform_summary(residue_set: ResidueSet, p: int, branch: str) -> str:
        if branch == "rby":
            return reduce_gcd(residue_set)[0].summary()
        if len(residue_set) == 3 and p == 2:
            return normalize(residue_set).chain.summary()
        return "identity"

    def verify_coloring(self, n: int, residue_set: ResidueSet, coloring_text: str, colors: int) -> VerifyReport:
        """
        与えられた彩色が S-多色的か検証する

        Args:
            n: 法
            residue_set: 集合 S
            coloring_text: 彩色文字列
            colors: 色数 k

        Returns:
            VerifyReport: 検証結果（違反は結果として返し、例外にしない）

        Raises:
            InvalidInputError: 彩色文字列が不正、または長さが n と一致しない場合
        """
        logger.info(f"彩色検証開始: n={n}, S={residue_set.to_text()}, k={colors}")
        coloring = Coloring.from_text(coloring_text, colors)
        if coloring.modulus != n:
            logger.warning(f"彩色の長さ不一致: len={coloring.modulus}, n={n}")
            raise InvalidInputError(
                f"彩色の長さ {coloring.modulus} が n={n} と一致しません",
                error_code=ErrorCode.INVALID_COLORING,
            )
        violations = oracle.verify(n, residue_set, coloring)
        logger.info(f"彩色検証完了: violations={len(violations)}")
        return VerifyReport(
            n=n,
            residue_set=list(residue_set.elements),
            colors=colors,
            ok=not violations,
            violations=[
                ViolationItem(
                    shift=v.shift,
                    translate=list(v.translate.elements),
                    missing_colors=list(v.missing_colors),
                )
                for v in violations
            ],
        )

    def run_oracle(self, n: int, residue_set: ResidueSet) -> RunReport:
        """
        全探索で多色数と証拠彩色を求める

        Raises:
            SearchBoundExceededError: n が oracle_max_poly を超える場合
        """
        logger.info(f"全探索開始: n={n}, S={residue_set.to_text()}")
        started = time.perf_counter()
        p, coloring = oracle.brute_force_poly(n, residue_set, bound=self.settings.oracle_max_poly)
        report = RunReport(
            n=n,
            residue_set=list(residue_set.elements),
            p=p,
            method="oracle",
            witness=coloring.to_text(),
            timing_ms=_elapsed_ms(started),
        )
        logger.info(f"全探索完了: p={p}, timing_ms={report.timing_ms}")
        return report

    def search_tiling(self, n: int, residue_set: ResidueSet) -> TileReport:
        """
        S ⊕ T = Z_n となる補集合を探す

        |S| = 3 で補集合が見つかった場合は x ∈ T ⇒ x + (a+b) ∈ T も判定する

        Raises:
            SearchBoundExceededError: n が oracle_max_tile を超える場合
        """
        logger.info(f"タイリング探索開始: n={n}, S={residue_set.to_text()}")
        started = time.perf_counter()
        certificate = oracle.find_complement(n, residue_set, bound=self.settings.oracle_max_tile)

        closure = None
        if certificate.complement is not None and len(residue_set) == 3:
            # S を平行移動しても S ⊕ T = Z_n は保たれる
            anchored = residue_set.translate(-residue_set.elements[0])
            closure = oracle.complement_closure_check(n, anchored, certificate.complement)

        report = TileReport(
            n=n,
            residue_set=list(residue_set.elements),
            found=certificate.found,
            complement=list(certificate.complement.elements) if certificate.complement else None,
            exhausted=certificate.exhausted,
            closure=closure,
            timing_ms=_elapsed_ms(started),
        )
        logger.info(f"タイリング探索完了: found={report.found}, closure={closure}")
        return report

    def check_newman(self, values: Sequence[int], p: int, alpha: int) -> NewmanReport:
        """
        |S| = p^α の整数集合が Z をタイルするか判定する

        Raises:
            InvalidInputError: p が素数でない、または |S| ≠ p^α の場合
        """
        logger.info(f"Newman条件判定開始: S={list(values)}, p={p}, alpha={alpha}")
        tiles = classify.newman_tiles_z(values, p, alpha)
        return NewmanReport(
            residue_set=list(values),
            p=p,
            alpha=alpha,
            valuations=sorted(classify.newman_valuations(values, p)),
            tiles=tiles,
        )

    def search_blocking(self, n: int, residue_set: ResidueSet) -> BlockingReport:
        """
        最小ブロッキング集合を探す

        Raises:
            SearchBoundExceededError: n が oracle_max_blocking を超える場合
        """
        logger.info(f"ブロッキング集合探索開始: n={n}, S={residue_set.to_text()}")
        started = time.perf_counter()
        size, blocker = oracle.min_blocking_size(n, residue_set, bound=self.settings.oracle_max_blocking)
        report = BlockingReport(
            n=n,
            residue_set=list(residue_set.elements),
            size=size,
            blocking_set=list(blocker.elements),
            timing_ms=_elapsed_ms(started),
        )
        logger.info(f"ブロッキング集合探索完了: size={size}")
        return report

    @staticmethod
    def _table_sets(n: int, size: int) -> Iterator[ResidueSet]:
        for rest in combinations(range(1, n), size - 1):
            yield ResidueSet(modulus=n, elements=(0, *rest))

    def build_table(
        self,
        n_from: int,
        n_to: int,
        size: int,
        oracle_max: Optional[int] = None,
    ) -> list[TableRow]:
        """
        0 を含む要素数 size の全集合について、閉じた式と全探索の多色数を比較する

        n が oracle_max を超える行は p_oracle と agree を空欄にする。行は (n, a, b) の昇順

        Args:
            n_from: n の下限
            n_to: n の上限
            size: 集合の要素数（2 または 3）
            oracle_max: 全探索する n の上限（省略時は settings.table_oracle_max）

        Returns:
            list[TableRow]: 比較表

        Raises:
            InvalidInputError: n_from > n_to、n_from < 1、または size が 2, 3 以外の場合
        """
        if size not in (2, 3):
            raise InvalidInputError(f"size は 2 または 3 です: size={size}")
        if n_from < 1 or n_from > n_to:
            raise InvalidInputError(f"1 ≤ n_from ≤ n_to を満たしません: n_from={n_from}, n_to={n_to}")
        limit = oracle_max if oracle_max is not None else self.settings.table_oracle_max
        logger.info(f"比較表作成開始: n={n_from}..{n_to}, size={size}, oracle_max={limit}")

        rows = []
        for n in range(max(n_from, size), n_to + 1):
            for residue_set in self._table_sets(n, size):
                p_closed = classify.poly_number(n, residue_set).p
                p_oracle = oracle.brute_force_poly(n, residue_set, bound=limit)[0] if n <= limit else None
                *head, b = residue_set.elements
                rows.append(
                    TableRow(
                        n=n,
                        a=head[1] if size == 3 else None,
                        b=b,
                        p_closed_form=p_closed,
                        p_oracle=p_oracle,
                        agree=None if p_oracle is None else p_oracle == p_closed,
                    )
                )

        disagreements = sum(row.disagrees for row in rows)
        if disagreements:
            logger.warning(f"比較表に不一致があります: {disagreements} 行")
        logger.info(f"比較表作成完了: rows={len(rows)}")
        return rows
