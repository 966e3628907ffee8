"""
pedverify 명령행 엔트리포인트
count / list / map / series / verify 서브커맨드를 제공합니다.

종료 코드:
    0  요청한 검사가 모두 통과
    1  검증 실패
    2  사용법/입력 오류 (파싱 실패 포함)
    3  사상의 정의역 조건 위반
"""

import argparse
import csv
import io
import json
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

from .bijections import CASE_LABELS
from .config import VerifyConfig
from .errors import InvalidPartitionError, MapPreconditionError, PedVerifyError
from .models import IdentityId, IdentityReport, Method, OutputFormat
from .partitions import PartitionClass
from .payloads import INVERSE_MAPS, apply_map, count_rows, list_rows, map_payload, parse_parts, series_rows
from .qseries import SERIES_EXPRESSIONS
from .verifier import COMPATIBLE_METHODS, Verifier, all_passed, bound_for

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3

CLASS_NAMES = [cls.value for cls in PartitionClass]


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"0 이상의 정수가 필요합니다: {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"1 이상의 정수가 필요합니다: {text}")
    return value


def _enumeration_limit(minimum: int) -> Callable[[str], int]:
    """minimum..MAX_ENUM_BOUND 범위의 정수만 받는 argparse 타입"""

    def parse(text: str) -> int:
        value = int(text)
        if not minimum <= value <= VerifyConfig.MAX_ENUM_BOUND:
            raise argparse.ArgumentTypeError(
                f"{minimum}..{VerifyConfig.MAX_ENUM_BOUND} 범위의 정수가 필요합니다: {text}"
            )
        return value

    return parse


ENUM_LIMIT_HELP = f"열거 범위 (상한 {VerifyConfig.MAX_ENUM_BOUND})"


def build_parser() -> argparse.ArgumentParser:
    """서브커맨드 파서 생성"""
    parser = argparse.ArgumentParser(
        prog="pedverify",
        description="distinct even parts 분할과 4-regular 분할 항등식 검증기",
    )
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    parser.add_argument("--verbose", action="store_true", help="검증 진행 로그를 stderr에 출력")

    # 서브커맨드 뒤에도 --format을 받을 수 있게 공통 옵션을 둠
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=argparse.SUPPRESS)
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", parents=[common], help="0..max 각 n의 분할 개수")
    count.add_argument("cls", metavar="class", choices=CLASS_NAMES)
    count.add_argument("--max", dest="n_max", type=_enumeration_limit(0), required=True, help=ENUM_LIMIT_HELP)

    listing = sub.add_parser("list", parents=[common], help="클래스에 속하는 분할을 열거 순서대로 출력")
    listing.add_argument("cls", metavar="class", choices=CLASS_NAMES)
    listing.add_argument("--n", dest="n", type=_enumeration_limit(0), required=True, help=ENUM_LIMIT_HELP)

    mapping = sub.add_parser("map", parents=[common], help="전단사 사상 한 번 적용")
    mapping.add_argument("bijection", choices=["phi1", "psi1", "phi3", "psi3"])
    mapping.add_argument("partition", help="쉼표로 구분한 파트 (예: 4,3,1)")
    mapping.add_argument("--target", dest="target", type=int, default=None, help="psi 사상의 목표 n")

    series = sub.add_parser("series", parents=[common], help="급수 계수 출력")
    series.add_argument("expr", choices=list(SERIES_EXPRESSIONS))
    series.add_argument("--order", type=_nonnegative, required=True)

    verify = sub.add_parser("verify", parents=[common], help="항등식 검증")
    verify.add_argument("identity", choices=[i.value for i in IdentityId] + ["all"])
    verify.add_argument("--method", choices=[m.value for m in Method], default=None)
    verify.add_argument(
        "--enum-bound", type=_enumeration_limit(1), default=VerifyConfig.DEFAULT_ENUM_BOUND, help=ENUM_LIMIT_HELP
    )
    verify.add_argument(
        "--series-bound", type=_positive, default=VerifyConfig.DEFAULT_SERIES_BOUND, help="급수 절단 차수 (상한 없음)"
    )
    verify.add_argument("--workers", type=_positive, default=1, help="verify all 병렬 스레드 수")

    return parser


# ---------------------------------------------------------------------------
# 출력
# ---------------------------------------------------------------------------

def _write_json(data: Any, out: TextIO) -> None:
    out.write(json.dumps(data, indent=2, ensure_ascii=False))
    out.write("\n")


def _write_csv(header: Sequence[str], rows: Sequence[Sequence[Any]], out: TextIO) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    out.write(buffer.getvalue())


def _report_text(report: IdentityReport) -> str:
    lo, hi = report.range_checked
    line = f"{report.identity_id.value:<10} {report.method.value:<12} [{lo}, {hi}]  {report.verdict.value.upper()}"
    witness = report.witness
    if witness is None:
        return line
    details = []
    if witness.n is not None:
        details.append(f"n={witness.n}")
    if witness.lhs is not None or witness.rhs is not None:
        details.append(f"lhs={witness.lhs} rhs={witness.rhs}")
    if witness.partition is not None:
        details.append("partition=" + (",".join(str(p) for p in witness.partition) or "()"))
    if witness.detail:
        details.append(witness.detail)
    return line + "\n    witness: " + "; ".join(details)


def _fail(message: str, code: int) -> int:
    print(f"pedverify: {message}", file=sys.stderr)
    return code


# ---------------------------------------------------------------------------
# 서브커맨드
# ---------------------------------------------------------------------------

def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    rows = count_rows(PartitionClass(args.cls), args.n_max)
    if args.format == OutputFormat.JSON.value:
        _write_json(rows, out)
    elif args.format == OutputFormat.CSV.value:
        _write_csv(["n", "count"], [(row["n"], row["count"]) for row in rows], out)
    else:
        for row in rows:
            out.write(f"{row['n']}\t{row['count']}\n")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    rows = list_rows(PartitionClass(args.cls), args.n)
    if args.format == OutputFormat.JSON.value:
        _write_json(rows, out)
    elif args.format == OutputFormat.CSV.value:
        _write_csv(["index", "parts"], [(i, ",".join(map(str, parts))) for i, parts in enumerate(rows)], out)
    else:
        for parts in rows:
            out.write((",".join(map(str, parts)) or "()") + "\n")
    return EXIT_OK


def cmd_map(args: argparse.Namespace, out: TextIO) -> int:
    try:
        preimage = parse_parts(args.partition)
    except (ValueError, InvalidPartitionError) as e:
        return _fail(f"파티션을 해석할 수 없습니다 ({args.partition!r}): {e}", EXIT_USAGE)
    if args.bijection in INVERSE_MAPS and args.target is None:
        return _fail(f"{args.bijection}에는 --target이 필요합니다", EXIT_USAGE)
    try:
        mapped = apply_map(args.bijection, preimage, args.target)
    except MapPreconditionError as e:
        return _fail(f"정의역 조건 위반: {e}", EXIT_PRECONDITION)

    payload = map_payload(args.bijection, preimage, mapped)
    if args.format == OutputFormat.JSON.value:
        _write_json(payload, out)
    elif args.format == OutputFormat.CSV.value:
        _write_csv(
            ["map", "preimage", "image", "case", "target_weight"],
            [(
                payload["map"],
                ",".join(map(str, payload["preimage"])),
                ",".join(map(str, payload["image"])),
                payload["case"],
                payload["target_weight"],
            )],
            out,
        )
    else:
        out.write(f"{args.bijection}: {preimage} -> {mapped.image}\n")
        out.write(f"case: {CASE_LABELS[mapped.case_tag]} ({mapped.case_tag.value})\n")
        out.write(f"weight: {mapped.target_weight}\n")
    return EXIT_OK


def cmd_series(args: argparse.Namespace, out: TextIO) -> int:
    rows = series_rows(args.expr, args.order)
    if args.format == OutputFormat.JSON.value:
        _write_json(rows, out)
    elif args.format == OutputFormat.CSV.value:
        _write_csv(["k", "coeff"], [(row["k"], row["coeff"]) for row in rows], out)
    else:
        out.write(" ".join(str(row["coeff"]) for row in rows) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO, verifier: Verifier) -> int:
    if args.identity == "all":
        if args.method is not None:
            return _fail("verify all에는 --method를 쓸 수 없습니다", EXIT_USAGE)
        reports = verifier.verify_all(args.enum_bound, args.series_bound, max_workers=args.workers)
    else:
        identity = IdentityId(args.identity)
        if args.method is not None:
            methods = [Method(args.method)]
            if methods[0] not in COMPATIBLE_METHODS[identity]:
                allowed = ", ".join(m.value for m in COMPATIBLE_METHODS[identity])
                return _fail(f"{identity.value}에는 {args.method}를 쓸 수 없습니다 (허용: {allowed})", EXIT_USAGE)
        else:
            methods = list(COMPATIBLE_METHODS[identity])
        reports = [
            verifier.verify_identity(identity, bound_for(method, args.enum_bound, args.series_bound), method)
            for method in methods
        ]

    if args.format == OutputFormat.JSON.value:
        _write_json([report.to_json_dict() for report in reports], out)
    elif args.format == OutputFormat.CSV.value:
        rows = []
        for report in reports:
            data = report.to_json_dict()
            witness = json.dumps(data["witness"], ensure_ascii=False, sort_keys=True) if report.witness else ""
            rows.append((data["identity"], data["method"], data["range"][0], data["range"][1], data["verdict"], witness))
        _write_csv(["identity", "method", "range_lo", "range_hi", "verdict", "witness"], rows, out)
    else:
        for report in reports:
            out.write(_report_text(report) + "\n")
        passed = sum(1 for report in reports if report.ok)
        out.write(f"{passed}/{len(reports)} passed\n")
    return EXIT_OK if all_passed(reports) else EXIT_FAILED


def main(
    argv: Optional[List[str]] = None,
    out: Optional[TextIO] = None,
    verifier: Optional[Verifier] = None,
) -> int:
    """
    CLI 실행. 종료 코드를 반환합니다.

    Args:
        argv: 인자 목록 (None이면 sys.argv[1:])
        out: 결과 출력 스트림 (None이면 stdout)
        verifier: 사용할 Verifier (결함 주입 테스트용)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_USAGE
    out = out or sys.stdout
    verifier = verifier or Verifier(verbose=args.verbose)
    if args.verbose:
        verifier.verbose = True

    commands: Dict[str, Callable[[argparse.Namespace, TextIO], int]] = {
        "count": cmd_count,
        "list": cmd_enumerate,
        "map": cmd_map,
        "series": cmd_series,
        "verify": lambda a, o: cmd_verify(a, o, verifier),
    }
    try:
        return commands[args.command](args, out)
    except PedVerifyError as e:
        return _fail(str(e), EXIT_USAGE)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
