"""
コマンドラインインターフェース

多色数の分類・証拠彩色・検証・全探索・比較表をサブコマンドとして提供する

終了コード: 0 成功、1 違反・不一致・証拠なし、2 入力不正・探索上限超過、3 内部不整合、4 入出力失敗
"""
import argparse
import csv
import sys
from typing import Callable, Optional, Sequence, TextIO

from pydantic import BaseModel

from app.config import settings
from app.constants.error_codes import ExitCode
from app.exceptions import PolychromaticError, VerificationDefectError
from app.schemas.report import TABLE_HEADER, TableRow
from app.services.polychromatic_service import PolychromaticService
from app.utils.logger import get_logger, setup_logging

logger = get_logger(__name__)


def _join(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)


def _emit(args: argparse.Namespace, report: BaseModel, text_lines: list[str]) -> None:
    if args.format == "json":
        print(report.model_dump_json(by_alias=True))
    else:
        for line in text_lines:
            print(line)


def cmd_pnum(args: argparse.Namespace, service: PolychromaticService) -> int:
    report = service.poly_number(args.n, service.parse_set(args.n, args.set), method=args.method)
    lines = [f"p={report.p}"]
    if report.case_tag:
        lines[0] += f" case={report.case_tag}"
    _emit(args, report, lines)
    return ExitCode.SUCCESS


def cmd_witness(args: argparse.Namespace, service: PolychromaticService) -> int:
    report = service.build_witness(args.n, service.parse_set(args.n, args.set), verify=args.verify)
    _emit(
        args,
        report,
        [report.witness or "", f"p={report.p} case={report.case_tag} transform={report.transform}"],
    )
    return ExitCode.SUCCESS


def cmd_verify(args: argparse.Namespace, service: PolychromaticService) -> int:
    report = service.verify_coloring(args.n, service.parse_set(args.n, args.set), args.coloring, args.colors)
    lines = ["ok" if report.ok else f"violations={len(report.violations)}"]
    lines.extend(
        f"shift={v.shift} translate={_join(v.translate)} missing={_join(v.missing_colors)}"
        for v in report.violations
    )
    _emit(args, report, lines)
    return ExitCode.SUCCESS if report.ok else ExitCode.SEMANTIC_FAILURE


def cmd_oracle(args: argparse.Namespace, service: PolychromaticService) -> int:
    report = service.run_oracle(args.n, service.parse_set(args.n, args.set))
    _emit(args, report, [f"p={report.p} witness={report.witness}"])
    return ExitCode.SUCCESS


def cmd_tile(args: argparse.Namespace, service: PolychromaticService) -> int:
    report = service.search_tiling(args.n, service.parse_set(args.n, args.set))
    if report.complement is None:
        lines = [f"complement=none exhausted={str(report.exhausted).lower()}"]
    else:
        lines = [f"complement={_join(report.complement)}"]
        if report.closure is not None:
            lines.append(f"closure={str(report.closure).lower()}")
    _emit(args, report, lines)
    return ExitCode.SUCCESS if report.found else ExitCode.SEMANTIC_FAILURE


def cmd_newman(args: argparse.Namespace, service: PolychromaticService) -> int:
    report = service.check_newman(service.parse_integers(args.set), args.p, args.alpha)
    _emit(args, report, [f"tiles={str(report.tiles).lower()} valuations={_join(report.valuations)}"])
    return ExitCode.SUCCESS


def cmd_blocking(args: argparse.Namespace, service: PolychromaticService) -> int:
    report = service.search_blocking(args.n, service.parse_set(args.n, args.set))
    _emit(args, report, [f"size={report.size} blocking_set={_join(report.blocking_set)}"])
    return ExitCode.SUCCESS


def write_table(rows: Sequence[TableRow], stream: TextIO) -> None:
    """比較表をCSVで書き出す"""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for row in rows:
        writer.writerow(row.to_csv_row())


def cmd_table(args: argparse.Namespace, service: PolychromaticService) -> int:
    rows = service.build_table(args.n_from, args.n_to, args.size, oracle_max=args.oracle_max)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as f:
            write_table(rows, f)
    elif args.format == "json":
        print("[" + ",".join(row.model_dump_json() for row in rows) + "]")
    else:
        write_table(rows, sys.stdout)
    disagreements = sum(row.disagrees for row in rows)
    if args.out:
        print(f"rows={len(rows)} disagreements={disagreements} out={args.out}")
    return ExitCode.SEMANTIC_FAILURE if disagreements else ExitCode.SUCCESS


def build_parser() -> argparse.ArgumentParser:
    """サブコマンド付きの引数パーサーを作成する"""
    parser = argparse.ArgumentParser(
        prog="polychromatic",
        description="巡回群 Z_n における S-多色彩色の多色数・証拠彩色・全探索検証",
    )
    parser.add_argument("--log-level", default=None, help="ログレベル（既定は設定ファイルの値）")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, handler: Callable[..., int], help_text: str, with_set: bool = True) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        if with_set:
            sub.add_argument("--n", type=int, required=True, help="法 n")
            sub.add_argument("--set", required=True, help="カンマ区切りの剰余（例: 0,1,3）")
        sub.add_argument("--format", choices=["text", "json"], default="text", help="出力形式")
        sub.set_defaults(handler=handler)
        return sub

    pnum = add_command("pnum", cmd_pnum, "多色数を求める")
    pnum.add_argument("--method", choices=["closed_form", "oracle"], default="closed_form", help="計算方法")

    witness = add_command("witness", cmd_witness, "証拠彩色を構成する")
    witness.add_argument("--verify", action="store_true", help="構成後に全平行移動を検証する")

    verify = add_command("verify", cmd_verify, "彩色を検証する")
    verify.add_argument("--coloring", required=True, help="彩色文字列（例: 012012012）")
    verify.add_argument("--colors", type=int, required=True, help="色数 k")

    add_command("oracle", cmd_oracle, "全探索で多色数を求める")
    add_command("tile", cmd_tile, "S ⊕ T = Z_n となる補集合を探す")
    add_command("blocking", cmd_blocking, "最小ブロッキング集合を探す")

    newman = add_command("newman", cmd_newman, "Newman条件で Z のタイリングを判定する", with_set=False)
    newman.add_argument("--set", required=True, help="カンマ区切りの整数（例: 0,1,2）")
    newman.add_argument("--p", type=int, required=True, help="素数 p")
    newman.add_argument("--alpha", type=int, required=True, help="指数 α（|S| = p^α）")

    table = add_command("table", cmd_table, "閉じた式と全探索の比較表を作る", with_set=False)
    table.add_argument("--n-from", type=int, required=True, help="n の下限")
    table.add_argument("--n-to", type=int, required=True, help="n の上限")
    table.add_argument("--size", type=int, choices=[2, 3], default=3, help="集合の要素数")
    table.add_argument(
        "--oracle-max",
        type=int,
        default=settings.table_oracle_max,
        help="全探索する n の上限（超える行は p_oracle を空欄にする）",
    )
    table.add_argument("--out", default=None, help="CSVの出力先（省略時は標準出力）")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLIエントリーポイント

    Args:
        argv: コマンドライン引数（省略時は sys.argv）

    Returns:
        int: 終了コード
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    setup_logging(
        log_level=args.log_level or settings.log_level,
        log_file=settings.log_file,
        max_bytes=settings.log_max_bytes,
        backup_count=settings.log_backup_count,
        when=settings.log_when,
    )

    service = PolychromaticService()
    try:
        return int(args.handler(args, service))
    except VerificationDefectError as e:
        logger.error(f"内部不整合: {e.message}")
        print(e.message, file=sys.stderr)
        return ExitCode.INTERNAL_DEFECT
    except PolychromaticError as e:
        logger.warning(f"{args.command} 失敗: {e.error_code.value} - {e.message}")
        print(e.message, file=sys.stderr)
        return ExitCode.USAGE_ERROR
    except ValueError as e:
        logger.warning(f"{args.command} 入力不正: {e}")
        print(str(e), file=sys.stderr)
        return ExitCode.USAGE_ERROR
    except OSError as e:
        logger.error(f"入出力エラー: {e}")
        print(f"入出力エラー: {e}", file=sys.stderr)
        return ExitCode.IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
