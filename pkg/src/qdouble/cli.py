"""Command-line front end.

    qdouble suite <name|all> [--n N] [--degree d] [--seed s] [--format text|json]
    qdouble list-suites
    qdouble eval "<expression>" [--n N]
    qdouble braided <op> <args...> [--n N] [--form closed|general|both]
    qdouble dmul "<dual> (x) <elem>" "<dual> (x) <elem>" [--n N]

The exit status is 0 exactly when every requested check passes.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence

from . import braided
from .double import DoubleElement
from .functionals import DualElement, word_str
from .parsing import ParseError, parse, render
from .qmatrix import QElement, mono_str
from .scalar import QZContext
from .suites import SCHEMA, SUITES, SuiteReport, run_suite

BRAIDED_OPS = {
    "act": "kappa . x for kappa one of Khat[s], Khat_inv[s], E[s], F[s]",
    "coact": "left H_sigma^cop-coaction of x",
    "mul": "braided product x o y",
    "comul": "braided coproduct of x",
    "antipode": "braided antipode of x",
}


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=True)


# ---------------------------------------------------------------- suite

def _report_text(rep: SuiteReport) -> List[str]:
    lines = [f"suite {rep.suite}  N={rep.n}  degree={rep.degree_bound}  seed={rep.seed}"]
    for c in rep.checks:
        lines.append(f"  [{c.status:7}] {c.name}")
        if c.detail:
            lines.append(f"            {c.detail}")
    counts = {s: sum(1 for c in rep.checks if c.status == s) for s in ("pass", "fail", "skipped")}
    lines.append(f"  {counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    return lines


def cmd_suite(args) -> int:
    names = list(SUITES) if args.name == "all" else [args.name]
    if args.name != "all" and args.name not in SUITES:
        print(f"error: unknown suite {args.name!r}; see 'qdouble list-suites'", file=sys.stderr)
        return 2
    ctx = QZContext(args.n)
    reports = [run_suite(name, ctx, args.degree, args.seed) for name in names]
    ok = all(r.passed for r in reports)
    if args.format == "json":
        if len(reports) == 1:
            print(_dump(reports[0].to_dict()))
        else:
            print(_dump({
                "schema": SCHEMA,
                "n": args.n,
                "degree_bound": args.degree,
                "seed": args.seed,
                "passed": ok,
                "suites": [r.to_dict() for r in reports],
            }))
    else:
        out: List[str] = []
        for r in reports:
            out += _report_text(r) + [""]
        out.append("all checks passed" if ok else "FAILED: " + ", ".join(r.suite for r in reports if not r.passed))
        print("\n".join(out))
    return 0 if ok else 1


def cmd_list(args) -> int:
    if args.format == "json":
        print(_dump({"schema": SCHEMA, "suites": list(SUITES)}))
    else:
        print("\n".join(SUITES))
    return 0


# ---------------------------------------------------------------- eval

def _kind(v) -> str:
    return {QElement: "element", DualElement: "functional", DoubleElement: "double"}.get(type(v), type(v).__name__)


def cmd_eval(args) -> int:
    ctx = QZContext(args.n)
    try:
        value = parse(ctx, args.expr)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render(ctx, value)
    if args.format == "json":
        kind = "scalar" if type(value).__name__ == "RatFunc" else _kind(value)
        print(_dump({"schema": SCHEMA, "n": args.n, "input": args.expr, "kind": kind, "result": text}))
    else:
        print(text)
    return 0


# ---------------------------------------------------------------- braided

_NAMED_ACTION = re.compile(r"^\s*(Khat_inv|Khat|E|F)\s*\[\s*(\d+)\s*\]\s*$")


def _generator_index(ctx: QZContext, x: QElement) -> tuple:
    """(i, j) when x is exactly the generator x[i,j]."""
    if len(x.terms) == 1:
        (mono, c), = x.terms.items()
        e, word = mono
        if e == 0 and len(word) == 1 and c == 1:
            g = word[0]
            return g // ctx.n + 1, g % ctx.n + 1
    raise ValueError(f"closed forms take a single generator x[i,j], got {x}")


def _as_elem(ctx: QZContext, text: str) -> QElement:
    v = parse(ctx, text)
    if isinstance(v, QElement):
        return v
    if type(v).__name__ == "RatFunc":
        return QElement.one(ctx) * v
    raise ValueError(f"expected an element of SL_q, got {_kind(v)}")


def _braided_pair(ctx: QZContext, op: str, operands: Sequence[str]):
    """(closed, general, verdict) thunks for one braided operation."""
    arity = {"act": 2, "coact": 1, "mul": 2, "comul": 1, "antipode": 1}[op]
    if len(operands) != arity:
        raise ValueError(f"{op} takes {arity} argument(s), got {len(operands)}")
    d = 3
    if op == "act":
        m = _NAMED_ACTION.match(operands[0])
        kappa = parse(ctx, operands[0])
        if not isinstance(kappa, DualElement):
            raise ValueError("the acting argument must be a functional")
        x = _as_elem(ctx, operands[1])

        def closed():
            if not m:
                raise ValueError("closed action is tabulated for Khat[s], Khat_inv[s], E[s], F[s]")
            return braided.closed_action(ctx, m.group(1), int(m.group(2)), *_generator_index(ctx, x))
        return closed, lambda: braided.yd_action(kappa, x), _elem_verdict, str
    x = _as_elem(ctx, operands[0])
    if op == "mul":
        y = _as_elem(ctx, operands[1])
        return (lambda: braided.closed_mul(ctx, *_generator_index(ctx, x), *_generator_index(ctx, y)),
                lambda: braided.braided_mul(x, y), _elem_verdict, str)
    if op == "antipode":
        return (lambda: braided.closed_antipode(ctx, *_generator_index(ctx, x)),
                lambda: braided.braided_antipode(x), _elem_verdict, str)
    if op == "comul":
        def verdict(a, b):
            diff = braided.sl_diff(ctx, a, b)
            return (True, "equal") if not diff else (False, "closed - general = " + braided.itemize(ctx, diff))
        return (lambda: braided.closed_comul(ctx, *_generator_index(ctx, x)),
                lambda: braided.braided_comul(x), verdict, lambda t: braided.qtensor_str(ctx, t))

    def mixed_verdict(a, b):
        res = braided.mixed_equal(ctx, a, b, d)
        return (True, f"equal up to degree {d}") if res else (False, res.detail())
    return (lambda: braided.closed_coaction(ctx, *_generator_index(ctx, x)),
            lambda: braided.yd_coaction(x), mixed_verdict, lambda t: braided.mixed_str(ctx, t))


def _elem_verdict(a: QElement, b: QElement):
    if braided.sl_equal_elements(a, b):
        return True, "equal"
    diff = braided.sl_diff(a.ctx, braided.as_tensor(a), braided.as_tensor(b))
    return False, "closed - general = " + braided.itemize(a.ctx, diff)


def cmd_braided(args) -> int:
    ctx = QZContext(args.n)
    try:
        closed, general, verdict, show = _braided_pair(ctx, args.op, args.operands)
        out = {"schema": SCHEMA, "n": args.n, "op": args.op, "args": list(args.operands), "form": args.form}
        a = b = None
        if args.form in ("closed", "both"):
            a = closed()
            out["closed"] = show(a)
        if args.form in ("general", "both"):
            b = general()
            out["general"] = show(b)
    except (ParseError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ok = True
    if args.form == "both":
        ok, why = verdict(a, b)
        out["agree"] = ok
        out["verdict"] = why
    if args.format == "json":
        print(_dump(out))
    else:
        for key in ("closed", "general"):
            if key in out:
                print(f"{key}: {out[key]}")
        if "verdict" in out:
            print(f"verdict: {'agree' if ok else 'DIFFER'} ({out['verdict']})")
    return 0 if ok else 1


# ---------------------------------------------------------------- dmul

def _as_double(ctx: QZContext, text: str) -> DoubleElement:
    v = parse(ctx, text)
    if isinstance(v, DoubleElement):
        return v
    if isinstance(v, DualElement):
        return DoubleElement.tensor(v, QElement.one(ctx))
    if isinstance(v, QElement):
        return DoubleElement.tensor(DualElement.unit(ctx), v)
    raise ValueError(f"expected F (x) y, got {_kind(v)}")


def cmd_dmul(args) -> int:
    ctx = QZContext(args.n)
    try:
        a, b = _as_double(ctx, args.left), _as_double(ctx, args.right)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    prod = a * b
    if args.format == "json":
        terms = [[word_str(f) or "1", mono_str(ctx, m) or "1", c.in_qz(ctx)] for (f, m), c in prod.sorted_terms()]
        print(_dump({"schema": SCHEMA, "n": args.n, "left": args.left, "right": args.right, "terms": terms}))
    else:
        print(prod)
    return 0


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="matrix size N (default 2)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="qdouble", description="Exact computations in SL_q(N), its CQT dual and the braided structure.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("suite", parents=[common], help="run a verification suite")
    s.add_argument("name", help="suite name or 'all'")
    s.add_argument("--degree", type=int, default=4, help="degree bound for functional identities (default 4)")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_suite)

    ls = sub.add_parser("list-suites", parents=[common], help="list suite names")
    ls.set_defaults(fn=cmd_list)

    e = sub.add_parser("eval", parents=[common], help="evaluate an expression and print its normal form")
    e.add_argument("expr")
    e.set_defaults(fn=cmd_eval)

    b = sub.add_parser("braided", parents=[common], help="braided Hopf structure, closed and general forms",
                       epilog="ops: " + "; ".join(f"{k}: {v}" for k, v in BRAIDED_OPS.items()))
    b.add_argument("op", choices=list(BRAIDED_OPS))
    b.add_argument("operands", nargs="+")
    b.add_argument("--form", choices=("closed", "general", "both"), default="both")
    b.set_defaults(fn=cmd_braided)

    m = sub.add_parser("dmul", parents=[common], help="multiply in D(H_sigma^cop, SL_q(N))")
    m.add_argument("left")
    m.add_argument("right")
    m.set_defaults(fn=cmd_dmul)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return 2
    if getattr(args, "degree", 1) < 1:
        print("error: --degree must be positive", file=sys.stderr)
        return 2
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
