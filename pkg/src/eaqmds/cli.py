"""Command line entry point.

Exit codes: 0 success, 1 a check failed, 2 usage or admissibility error,
3 a hard size/budget limit was hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from functools import lru_cache

from eaqmds.codes import code_fields, generator_digits, generator_matrix, parity_check_matrix
from eaqmds.cosets import CosetSpace
from eaqmds.errors import (
    LambdaOutOfRange,
    MagnitudeExceeded,
    NonpositiveLogicalDimension,
    NotAdmissible,
    OracleBudgetExceeded,
)
from eaqmds.families import (
    ORACLE_LEVELS,
    PUBLISHED_ROWS,
    FamilyInstance,
    admissible_qs,
    build_instance,
    check_coset_images,
    check_lemma_ranges,
    enumerate_family,
    get_family,
    list_families,
    regenerate_table,
    verify_instance,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

REPORT_CSV_HEADER = ["family", "q", "lambda", "n", "k", "d", "c", "defect", "status"]
TABLE_CSV_HEADER = ["n", "k", "d", "c", "q", "family", "lambda", "status", "printed", "computed"]


@dataclass
class ReportRecord:
    family: int
    q: int
    lambda_: int
    n: int
    k: int
    d: int
    c: int
    singleton_defect: int
    checks: dict[str, str]
    delta_repr: str
    timestamp: str | None

    def to_json(self) -> dict:
        out = asdict(self)
        out["lambda"] = out.pop("lambda_")
        order = ["family", "q", "lambda", "n", "k", "d", "c", "singleton_defect", "checks", "delta_repr", "timestamp"]
        return {key: out[key] for key in order}

    @property
    def status(self) -> str:
        return "fail" if "fail" in self.checks.values() else "pass"


@lru_cache(maxsize=None)
def _delta_repr(space: CosetSpace) -> str:
    try:
        return code_fields(space).describe_delta()
    except MagnitudeExceeded:
        return "unavailable (field too large)"


def make_record(inst: FamilyInstance, reproducible: bool) -> ReportRecord:
    p = inst.computed
    stamp = None if reproducible else datetime.now(timezone.utc).isoformat(timespec="seconds")
    return ReportRecord(
        inst.family.id, inst.q, inst.lam, p.n, p.k, p.d, p.c, p.singleton_defect,
        dict(inst.report), _delta_repr(inst.space), stamp,
    )


def _params(t) -> str:
    n, k, d, c = t
    return f"[[{n},{k},{d};{c}]]"


def render_records(records: list[ReportRecord], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in records], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(REPORT_CSV_HEADER)
        for r in records:
            w.writerow([r.family, r.q, r.lambda_, r.n, r.k, r.d, r.c, r.singleton_defect, r.status])
        return buf.getvalue()
    lines = []
    for r in records:
        checks = " ".join(f"{k}={v}" for k, v in r.checks.items())
        line = f"family {r.family} q={r.q} lambda={r.lambda_} {_params((r.n, r.k, r.d, r.c))}_{r.q} defect={r.singleton_defect} {r.status}: {checks}"
        if r.timestamp:
            line += f" at {r.timestamp}"
        lines.append(line)
    return "\n".join(lines) + ("\n" if lines else "")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands -----------------------------------------------------------


def cmd_families(args) -> int:
    specs = list_families() if args.family is None else [get_family(args.family)]
    rows = [s.describe() for s in specs]
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "parity", "congruences", "n", "lambda_range", "k", "d", "c"])
        for r in rows:
            w.writerow([r["id"], r["parity"], "; ".join(r["congruences"]), r["n"], r["lambda_range"], r["k"], r["d"], r["c"]])
        text = buf.getvalue()
    else:
        text = "".join(
            f"{r['id']}: {', '.join(r['congruences'])}; n={r['n']}; {r['lambda_range']}; "
            f"[[n, {r['k']}, {r['d']}; {r['c']}]]\n"
            for r in rows
        )
    _emit(text, args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    instances = enumerate_family(args.family, args.q_max, args.oracle)
    records = [make_record(i, args.reproducible) for i in instances]
    _emit(render_records(records, args.format), args.out)
    return EXIT_FAIL if any(r.status == "fail" for r in records) else EXIT_OK


def cmd_verify(args) -> int:
    inst = build_instance(args.family, args.q, args.lambda_)
    verify_instance(inst, args.oracle)
    rec = make_record(inst, args.reproducible)
    _emit(render_records([rec], args.format), args.out)
    if rec.status == "fail":
        print("failed checks: " + ", ".join(inst.failed_checks), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_tables(args) -> int:
    fams = sorted(PUBLISHED_ROWS) if args.family is None else [args.family]
    rows = [row for f in fams for row in regenerate_table(f)]
    if args.format == "json":
        data = [
            {
                "family": r.family, "q": r.q, "lambda": r.lam,
                "formula": dict(zip("nkdc", r.formula)),
                "printed": dict(zip("nkdc", r.printed)),
                "computed": dict(zip("nkdc", r.computed)),
                "status": r.status,
            }
            for r in rows
        ]
        text = json.dumps(data, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TABLE_CSV_HEADER)
        for r in rows:
            w.writerow([*r.formula, r.q, r.family, r.lam, r.status, _params(r.printed), _params(r.computed)])
        text = buf.getvalue()
    else:
        text = "".join(
            f"family {r.family} q={r.q} lambda={r.lam}: formula {_params(r.formula)} "
            f"printed {_params(r.printed)} computed {_params(r.computed)} {r.status}\n"
            for r in rows
        )
    _emit(text, args.out)
    return EXIT_OK


def cmd_code(args) -> int:
    inst = build_instance(args.family, args.q, args.lambda_)
    code = inst.code
    cf = code.fields
    doc = {
        "family": inst.family.id,
        "q": inst.q,
        "lambda": inst.lam,
        "n": code.n,
        "k_classical": code.k_classical,
        "field": {"p": cf.base.p, "t": cf.base.t, "modulus": list(cf.base.modulus)},
        "extension": {"p": cf.ext.p, "t": cf.ext.t, "modulus": list(cf.ext.modulus)},
        "delta": list(cf.ext.digits(cf.delta)),
        "alpha": list(cf.base.digits(cf.alpha)),
        "generator": generator_digits(code),
    }
    if args.emit == "matrices":
        if not cf.base.has_tables or code.n * code.n > 10**7:
            raise MagnitudeExceeded("matrices are too large to emit")
        doc["G"] = generator_matrix(code).tolist()
        doc["H"] = parity_check_matrix(code).tolist()
    _emit(json.dumps(doc, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_lemmas(args) -> int:
    fams = [f.id for f in list_families()] if args.family is None else [args.family]
    rows = []
    for fid in fams:
        for q in admissible_qs(fid, args.q_max):
            for kind, rep in (("ranges", check_lemma_ranges(fid, q)), ("images", check_coset_images(fid, q))):
                if rep.checks:
                    rows.append({"family": fid, "q": q, "kind": kind, "passed": rep.passed,
                                 "checks": len(rep.checks), "failures": rep.failures})
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "q", "kind", "checks", "status", "failures"])
        for r in rows:
            w.writerow([r["family"], r["q"], r["kind"], r["checks"], "pass" if r["passed"] else "fail", "; ".join(r["failures"])])
        text = buf.getvalue()
    else:
        text = ""
        for r in rows:
            text += f"family {r['family']} q={r['q']} {r['kind']}: {'pass' if r['passed'] else 'fail'} over {r['checks']} checks"
            if r["failures"]:
                shown = ", ".join(r["failures"][:3])
                more = len(r["failures"]) - 3
                text += f"; failing {shown}{f' and {more} more' if more > 0 else ''}"
            text += "\n"
    _emit(text, args.out)
    return EXIT_OK if all(r["passed"] for r in rows) else EXIT_FAIL


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--reproducible", action="store_true", help="omit timestamps")

    fam_opt = argparse.ArgumentParser(add_help=False)
    fam_opt.add_argument("--family", type=int, choices=range(1, 9), metavar="{1..8}")

    inst = argparse.ArgumentParser(add_help=False)
    inst.add_argument("--family", type=int, choices=range(1, 9), metavar="{1..8}", required=True)
    inst.add_argument("--q", type=int, required=True)
    inst.add_argument("--lambda", dest="lambda_", type=int, required=True)

    oracle = argparse.ArgumentParser(add_help=False)
    oracle.add_argument("--oracle", choices=ORACLE_LEVELS, default="none")

    parser = argparse.ArgumentParser(prog="eaqmds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("families", parents=[common, fam_opt], help="list the eight families")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("enumerate", parents=[common, oracle], help="build and verify all instances up to q-max")
    p.add_argument("--family", type=int, choices=range(1, 9), metavar="{1..8}", required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common, inst, oracle], help="verify one instance")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", parents=[common, fam_opt], help="regenerate the published example tables")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("code", parents=[common, inst], help="export the generator polynomial")
    p.add_argument("--emit", choices=["generator", "matrices"], default="generator")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("lemmas", parents=[common, fam_opt], help="check dual-containment and coset-image lemmas")
    p.add_argument("--q-max", type=int, default=512)
    p.set_defaults(func=cmd_lemmas)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "q_max", 2) < 2:
        parser.error("--q-max must be at least 2")
    try:
        return args.func(args)
    except (NotAdmissible, LambdaOutOfRange, NonpositiveLogicalDimension) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MagnitudeExceeded, OracleBudgetExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
