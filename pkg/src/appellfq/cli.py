"""Command-line front end: field info, single evaluations, value tables,
and the identity verification suite, with machine-readable JSON output.

Exit codes: 0 all good, 1 at least one counterexample, 2 usage error,
3 internal error.

Elements on the command line are addressed by enumeration index (0 is the
zero element, index i > 0 is generator^(i-1)); an explicit coefficient
vector is accepted as "v:c0,c1,..." or "c0,c1,...".
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import Character, binom, jacobi_sum
from .cyclotomic import CycInt
from .fields import FieldTable, build_field, prime_power_decompose
from .hypergeometric import (
    AppellF1Params,
    Hyp2F1Params,
    appell_f1_char_sum,
    appell_f1_point_sum,
    f21_char_sum,
    f21_point_sum,
)
from .identities import registry
from .verifier import verify

EXIT_PASS = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="appellfq",
        description="Exact character sums over finite fields",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_field_args(p, q_list=False):
        p.add_argument("-p", type=int, help="field characteristic (prime)")
        p.add_argument("-r", type=int, default=1, help="extension degree")
        if q_list:
            p.add_argument(
                "-q", type=str, help="comma-separated prime powers, e.g. 3,4,5"
            )
        else:
            p.add_argument("-q", type=int, help="prime power (sugar for -p/-r)")
        p.add_argument(
            "--table-cap", type=int, default=None, help="override the q cap"
        )
        p.add_argument(
            "--format", choices=("json", "human"), default="json", dest="fmt"
        )
        p.add_argument("--out", type=str, default=None, help="write output to file")

    p_info = sub.add_parser("field-info", help="describe a field")
    add_field_args(p_info)

    p_eval = sub.add_parser("eval", help="evaluate one sum exactly")
    p_eval.add_argument("kind", choices=("jacobi", "binom", "f21", "f1"))
    add_field_args(p_eval)
    p_eval.add_argument("-A", type=int, help="character exponent A")
    p_eval.add_argument("-B", type=int, help="character exponent B")
    p_eval.add_argument("-Bp", type=int, help="character exponent B'")
    p_eval.add_argument("-C", type=int, help="character exponent C")
    p_eval.add_argument("-x", type=str, help="element (index or v:coeffs)")
    p_eval.add_argument("-y", type=str, help="element (index or v:coeffs)")
    p_eval.add_argument(
        "--route",
        choices=("point", "char"),
        default="point",
        help="evaluator route for f21/f1",
    )

    p_ver = sub.add_parser("verify", help="verify registered identities")
    p_ver.add_argument("ids", nargs="*", help="identity ids (or use --all)")
    p_ver.add_argument("--all", action="store_true", dest="all_ids")
    add_field_args(p_ver, q_list=True)
    mode = p_ver.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--sampled", action="store_true")
    p_ver.add_argument("--samples", type=int, default=10000)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--max-counterexamples", type=int, default=10)

    p_tab = sub.add_parser("table", help="dump a full value table (JSON lines)")
    p_tab.add_argument("kind", choices=("jacobi", "binom", "f21", "f1"))
    add_field_args(p_tab)

    return ap


def _field_from_args(args) -> FieldTable:
    if args.q is not None:
        if args.p is not None:
            raise UsageError("give either -q or -p/-r, not both")
        p, r = prime_power_decompose(args.q)
    elif args.p is not None:
        p, r = args.p, args.r
    else:
        raise UsageError("a field is required: -p P [-r R] or -q Q")
    return build_field(p, r, max_q=args.table_cap)


def _fields_from_qlist(args) -> list[FieldTable]:
    if args.q is not None:
        if args.p is not None:
            raise UsageError("give either -q or -p/-r, not both")
        fields = []
        for part in str(args.q).split(","):
            part = part.strip()
            if not part:
                continue
            p, r = prime_power_decompose(int(part))
            fields.append(build_field(p, r, max_q=args.table_cap))
        if not fields:
            raise UsageError("-q list is empty")
        return fields
    if args.p is not None:
        return [build_field(args.p, args.r, max_q=args.table_cap)]
    raise UsageError("a field is required: -p P [-r R] or -q Q,...")


def _parse_element(ft: FieldTable, text: str, flag: str):
    try:
        if text.startswith("v:"):
            return ft.from_coeffs([int(c) for c in text[2:].split(",")])
        if "," in text:
            return ft.from_coeffs([int(c) for c in text.split(",")])
        i = int(text)
    except ValueError as exc:
        raise UsageError(f"bad element for {flag}: {text!r}") from exc
    if not 0 <= i < ft.q:
        raise UsageError(f"element index {i} out of range for q={ft.q}")
    return ft.elements[i]


def _require_exponent(args, name: str) -> int:
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"eval requires -{name}")
    return v


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _value_payload(value: CycInt) -> tuple[dict, str | None]:
    as_int = value.as_integer()
    return value.to_json(), (str(as_int) if as_int is not None else None)


def _cmd_field_info(args) -> int:
    ft = _field_from_args(args)
    doc = ft.describe()
    if args.fmt == "json":
        _emit(json.dumps(doc) + "\n", args.out)
    else:
        lines = [f"{k}: {v}" for k, v in doc.items()]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def _eval_value(args, ft: FieldTable) -> tuple[dict, CycInt]:
    kind = args.kind
    need = {
        "jacobi": ("A", "B"),
        "binom": ("A", "B"),
        "f21": ("A", "B", "C"),
        "f1": ("A", "B", "Bp", "C"),
    }[kind]
    exps = {name: _require_exponent(args, name) for name in need}
    chars = {name: Character(ft, e) for name, e in exps.items()}
    params: dict = dict(exps)
    if kind == "jacobi":
        value = jacobi_sum(chars["A"], chars["B"])
    elif kind == "binom":
        value = binom(chars["A"], chars["B"])
    elif kind == "f21":
        if args.x is None:
            raise UsageError("f21 requires -x")
        x = _parse_element(ft, args.x, "x")
        params["x"] = x.index
        hp = Hyp2F1Params(chars["A"], chars["B"], chars["C"], x)
        value = f21_point_sum(hp) if args.route == "point" else f21_char_sum(hp)
    else:
        if args.x is None or args.y is None:
            raise UsageError("f1 requires -x and -y")
        x = _parse_element(ft, args.x, "x")
        y = _parse_element(ft, args.y, "y")
        params["x"] = x.index
        params["y"] = y.index
        fp = AppellF1Params(
            chars["A"], chars["B"], chars["Bp"], chars["C"], x, y
        )
        value = (
            appell_f1_point_sum(fp)
            if args.route == "point"
            else appell_f1_char_sum(fp)
        )
    return params, value


def _cmd_eval(args) -> int:
    ft = _field_from_args(args)
    params, value = _eval_value(args, ft)
    value_json, as_int = _value_payload(value)
    if args.fmt == "json":
        doc = {
            "kind": args.kind,
            "q": ft.q,
            "params": params,
            "value": value_json,
            "integer": as_int,
        }
        _emit(json.dumps(doc) + "\n", args.out)
    else:
        shown = as_int if as_int is not None else repr(value)
        arglist = ", ".join(f"{k}={v}" for k, v in params.items())
        _emit(f"{args.kind}({arglist}) over F_{ft.q} = {shown}\n", args.out)
    return EXIT_PASS


def _cmd_verify(args) -> int:
    known = {e.id for e in registry()}
    if args.all_ids or not args.ids:
        ids = [e.id for e in registry()]
    else:
        bad = [i for i in args.ids if i not in known]
        if bad:
            raise UsageError(f"unknown identity ids: {', '.join(bad)}")
        ids = list(args.ids)
    fields = _fields_from_qlist(args)
    mode = "sampled" if args.sampled else "exhaustive"
    if mode == "sampled" and args.samples < 1:
        raise UsageError("--samples must be >= 1")

    lines = []
    any_cex = False
    any_error = False
    for ident in ids:
        for ft in fields:
            try:
                rep = verify(
                    ident,
                    ft,
                    mode=mode,
                    sample_count=args.samples if mode == "sampled" else None,
                    seed=args.seed if mode == "sampled" else None,
                    jobs=args.jobs,
                    max_counterexamples=args.max_counterexamples,
                )
            except Exception as exc:
                any_error = True
                lines.append(
                    json.dumps(
                        {
                            "id": ident,
                            "q": ft.q,
                            "mode": mode,
                            "error": f"{type(exc).__name__}: {exc}",
                        }
                    )
                )
                continue
            if rep.counterexamples:
                any_cex = True
            if args.fmt == "json":
                lines.append(json.dumps(rep.to_json()))
            else:
                status = "PASS" if rep.passed else "FAIL"
                lines.append(
                    f"{rep.identity_id} q={rep.q} {rep.mode} "
                    f"cases={rep.cases} counterexamples="
                    f"{len(rep.counterexamples)} {status} "
                    f"({rep.wall_ms:.1f} ms)"
                )
    _emit("\n".join(lines) + "\n", args.out)
    if any_error:
        return EXIT_INTERNAL
    return EXIT_COUNTEREXAMPLE if any_cex else EXIT_PASS


def _cmd_table(args) -> int:
    ft = _field_from_args(args)
    n, q = ft.n, ft.q
    rows = []

    def emit_row(params: dict, value: CycInt):
        value_json, as_int = _value_payload(value)
        rows.append(
            json.dumps({**params, "value": value_json, "integer": as_int})
        )

    if args.kind in ("jacobi", "binom"):
        fn = jacobi_sum if args.kind == "jacobi" else binom
        for a in range(n):
            for b in range(n):
                emit_row(
                    {"A": a, "B": b}, fn(Character(ft, a), Character(ft, b))
                )
    elif args.kind == "f21":
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    for xi in range(q):
                        params = Hyp2F1Params(
                            Character(ft, a),
                            Character(ft, b),
                            Character(ft, c),
                            ft.elements[xi],
                        )
                        emit_row(
                            {"A": a, "B": b, "C": c, "x": xi},
                            f21_point_sum(params),
                        )
    else:
        for a in range(n):
            for b in range(n):
                for bp in range(n):
                    for c in range(n):
                        for xi in range(q):
                            for yi in range(q):
                                params = AppellF1Params(
                                    Character(ft, a),
                                    Character(ft, b),
                                    Character(ft, bp),
                                    Character(ft, c),
                                    ft.elements[xi],
                                    ft.elements[yi],
                                )
                                emit_row(
                                    {
                                        "A": a,
                                        "B": b,
                                        "Bp": bp,
                                        "C": c,
                                        "x": xi,
                                        "y": yi,
                                    },
                                    appell_f1_point_sum(params),
                                )
    _emit("\n".join(rows) + "\n", args.out)
    return EXIT_PASS


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed a usage message
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    try:
        if args.command == "field-info":
            return _cmd_field_info(args)
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "table":
            return _cmd_table(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
