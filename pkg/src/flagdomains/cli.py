"""Command-line front door: check one domain, enumerate a family, or run
a verification grid.

Exit codes: 0 success, 1 grid disagreement, 2 bad arguments, 3 oracle
capacity exceeded under --oracles required.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .domains import (
    AIIIFiberedS,
    AIIIFiberedT,
    AIIIHermitian,
    CIFibered,
    CIHermitian,
    DomainSpec,
    Prediction,
    build_domain,
    closed_form_prediction,
    connectivity_defect,
    connectivity_witnesses,
    full_keep,
)
from .errors import CapacityError, ParameterError
from .rootcore import Root
from .serialize import (
    CSV_COLUMNS,
    agreement_to_str,
    report_to_dict,
    root_to_list,
    spec_csv_fields,
    spec_to_dict,
    to_canonical_json,
)
from .verify import (
    ORACLE_CAP_DEFAULT,
    ORACLE_MODES,
    GridReport,
    verify_fibered,
    verify_theorem_AIII,
    verify_theorem_CI,
)

__all__ = ["CheckResult", "evaluate_spec", "build_parser", "main"]

FAMILIES = ("ci", "ci-fibered", "aiii", "aiii-s", "aiii-t")


@dataclass(frozen=True)
class CheckResult:
    """Connectivity verdict for a single domain spec."""

    spec: DomainSpec
    connected: bool
    defect: int
    witness_roots: tuple[Root, ...]
    prediction: Prediction
    agreement: bool | None  # None when the prediction is not_covered

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "spec": spec_to_dict(self.spec),
            "connected": self.connected,
            "defect": self.defect,
            "witness_roots": [root_to_list(r) for r in self.witness_roots],
            "prediction": self.prediction.value,
        }


def evaluate_spec(spec: DomainSpec) -> CheckResult:
    dd = build_domain(spec)
    defect = connectivity_defect(dd)
    prediction = closed_form_prediction(spec)
    if prediction is Prediction.NOT_COVERED:
        agreement = None
    else:
        agreement = (defect == 0) == (prediction is Prediction.TRUE)
    return CheckResult(
        spec=spec,
        connected=defect == 0,
        defect=defect,
        witness_roots=connectivity_witnesses(dd),
        prediction=prediction,
        agreement=agreement,
    )


def _parse_keep(text: str) -> frozenset[int]:
    try:
        return frozenset(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ParameterError(f"--keep expects comma-separated integers, got {text!r}") from None


def _require(args: argparse.Namespace, names: Sequence[str], family: str) -> list[int]:
    values = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise ParameterError(f"family {family!r} requires --{name}")
        values.append(value)
    return values


def _spec_from_args(args: argparse.Namespace) -> DomainSpec:
    family = args.family
    if family == "ci":
        n, a = _require(args, ("n", "a"), family)
        return CIHermitian(n, a)
    if family == "ci-fibered":
        n, a, m = _require(args, ("n", "a", "m"), family)
        return CIFibered(n, a, m)
    if family == "aiii":
        p, q, a = _require(args, ("p", "q", "a"), family)
        return AIIIHermitian(p, q, a)
    p, q, a = _require(args, ("p", "q", "a"), family)
    keep = _parse_keep(args.keep) if args.keep is not None else full_keep(a)
    if family == "aiii-s":
        return AIIIFiberedS(p, q, a, keep)
    return AIIIFiberedT(p, q, a, keep)


def _root_str(root: Root) -> str:
    return "(" + ",".join(str(c) for c in root) + ")"


def _bool_str(value: bool) -> str:
    return "true" if value else "false"


def _result_row(result: CheckResult) -> dict[str, str]:
    row = spec_csv_fields(result.spec)
    row["connected"] = _bool_str(result.connected)
    row["defect"] = str(result.defect)
    row["prediction"] = result.prediction.value
    row["agreement"] = agreement_to_str(result.agreement)
    return row


def _print_table(rows: list[dict[str, str]]) -> None:
    widths = {col: len(col) for col in CSV_COLUMNS}
    for row in rows:
        for col in CSV_COLUMNS:
            widths[col] = max(widths[col], len(row[col]))
    header = "  ".join(col.ljust(widths[col]) for col in CSV_COLUMNS)
    print(header.rstrip())
    for row in rows:
        print("  ".join(row[col].ljust(widths[col]) for col in CSV_COLUMNS).rstrip())


def _print_csv(rows: list[dict[str, str]]) -> None:
    writer = csv.DictWriter(sys.stdout, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def _cmd_check(args: argparse.Namespace) -> int:
    result = evaluate_spec(_spec_from_args(args))
    if args.json:
        sys.stdout.write(to_canonical_json(result.to_json_dict()))
        return 0
    labels = spec_csv_fields(result.spec)
    lines = [("family", labels["family"])]
    lines += [(k, labels[k]) for k in ("n", "p", "q", "a", "m", "keep") if labels[k]]
    lines += [
        ("connected", _bool_str(result.connected)),
        ("defect", str(result.defect)),
        ("prediction", result.prediction.value),
        ("agreement", agreement_to_str(result.agreement)),
        ("witnesses", " ".join(_root_str(r) for r in result.witness_roots) or "-"),
    ]
    width = max(len(k) for k, _ in lines)
    for key, value in lines:
        print(f"{key.ljust(width)}  {value}")
    return 0


def _enumerate_specs(args: argparse.Namespace) -> list[DomainSpec]:
    family = args.family
    if family == "ci":
        (n,) = _require(args, ("n",), family)
        return [CIHermitian(n, a) for a in range(n + 1)]
    if family == "ci-fibered":
        (n,) = _require(args, ("n",), family)
        if n < 2:
            raise ParameterError("ci-fibered enumeration needs n >= 2")
        return [CIFibered(n, a, m) for a in range(1, n) for m in range(1, a + 1)]
    p, q = _require(args, ("p", "q"), family)
    if family == "aiii":
        return [AIIIHermitian(p, q, a) for a in range(p + 1)]
    variant = AIIIFiberedS if family == "aiii-s" else AIIIFiberedT
    return [variant(p, q, a, full_keep(a)) for a in range(p + 1)]


def _cmd_enumerate(args: argparse.Namespace) -> int:
    results = [evaluate_spec(spec) for spec in _enumerate_specs(args)]
    if args.json:
        sys.stdout.write(to_canonical_json([r.to_json_dict() for r in results]))
        return 0
    rows = [_result_row(r) for r in results]
    if args.csv:
        _print_csv(rows)
    else:
        _print_table(rows)
    return 0


def _format_spec(spec: DomainSpec) -> str:
    parts = [f"{k}={v}" for k, v in spec_to_dict(spec).items() if k != "family"]
    return f"{spec.family} " + " ".join(str(p) for p in parts)


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.grid == "ci":
        (n_max,) = _require(args, ("n_max",), "ci")
        report = verify_theorem_CI(n_max, args.oracles, args.wk_cap, args.w_cap)
    elif args.grid == "aiii":
        (sum_max,) = _require(args, ("sum_max",), "aiii")
        report = verify_theorem_AIII(sum_max, args.oracles, args.wk_cap, args.w_cap)
    else:
        n_max, sum_max = _require(args, ("n_max", "sum_max"), "fibered")
        report = verify_fibered(n_max, sum_max, args.oracles, args.wk_cap, args.w_cap)
    if args.json:
        sys.stdout.write(to_canonical_json(report_to_dict(report)))
        return 0 if report.disagreements == 0 else 1
    return _render_verify(report)


def _render_verify(report: GridReport) -> int:
    if report.disagreements == 0:
        print(f"OK {len(report.entries)} entries, 0 disagreements")
        return 0
    for entry in report.disagreeing():
        oracles = "[{},{}]".format(
            "-" if entry.oracle_wk is None else _bool_str(entry.oracle_wk),
            "-" if entry.oracle_dc is None else _bool_str(entry.oracle_dc),
        )
        witnesses = " ".join(_root_str(r) for r in entry.witness_roots) or "-"
        print(
            f"DISAGREE {_format_spec(entry.spec)}: predicted={entry.predicted.value} "
            f"computed={_bool_str(entry.computed)} defect={entry.defect} "
            f"oracles={oracles} witnesses={witnesses}"
        )
    print(f"FAIL {len(report.entries)} entries, {report.disagreements} disagreements")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagdomains",
        description="Decide generic 1-connectivity of flag domains in the "
        "Hermitian symmetric spaces of Sp(2n,R) and SU(p,q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide one domain spec")
    check.add_argument("family", choices=FAMILIES)
    _add_size_options(check)
    check.add_argument("--json", action="store_true", help="emit one JSON object")
    check.set_defaults(handler=_cmd_check)

    enum = sub.add_parser("enumerate", help="list every spec of a family")
    enum.add_argument("family", choices=FAMILIES)
    _add_size_options(enum, with_spec_detail=False)
    enum.add_argument("--csv", action="store_true", help="emit CSV instead of a table")
    enum.add_argument("--json", action="store_true", help="emit a JSON array")
    enum.set_defaults(handler=_cmd_enumerate)

    verify = sub.add_parser("verify", help="run a verification grid")
    verify.add_argument("grid", choices=("ci", "aiii", "fibered"))
    verify.add_argument("--n-max", dest="n_max", type=int)
    verify.add_argument("--sum-max", dest="sum_max", type=int)
    verify.add_argument("--oracles", choices=ORACLE_MODES, default="off")
    verify.add_argument("--wk-cap", dest="wk_cap", type=int, default=ORACLE_CAP_DEFAULT)
    verify.add_argument("--w-cap", dest="w_cap", type=int, default=ORACLE_CAP_DEFAULT)
    verify.add_argument("--json", action="store_true", help="emit the full report as JSON")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def _add_size_options(cmd: argparse.ArgumentParser, with_spec_detail: bool = True) -> None:
    cmd.add_argument("--n", type=int, help="size parameter for the ci families")
    cmd.add_argument("--p", type=int, help="first block size for the aiii families")
    cmd.add_argument("--q", type=int, help="second block size for the aiii families")
    if with_spec_detail:
        cmd.add_argument("--a", type=int, help="number of Cayley-transformed directions")
        cmd.add_argument("--m", type=int, help="inner flag step for ci-fibered")
        cmd.add_argument("--keep", help="comma-separated kept flag steps for aiii-s/t")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.handler(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
