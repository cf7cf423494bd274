"""Command line front end: ``weylfrac <command> ...``.

Exit status is 0 on success, 1 for user errors (bad syntax, unbound names,
division by zero, bad flags) and 2 when an internal consistency check fails.
"""

import argparse
import json
import os
import random
import sys
import time

from .arith import NotDivisibleError
from .comeasure import ComeasurePair
from .expr import EvalError, ParseError, Session, evaluate, parse, render
from .linalg import SingularMatrixError
from .sampling import random_weyl
from .weyl import mul_closed, mul_rewrite

__all__ = ["main", "run_batch", "repl"]


class _UsageError(Exception):
    def __init__(self, message, shown=False):
        super().__init__(message)
        self.shown = shown


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError(message, shown=True)


def _seed():
    raw = os.environ.get("WEYLFRAC_SEED", "0")
    try:
        seed = int(raw)
    except ValueError:
        raise _UsageError(f"WEYLFRAC_SEED must be an unsigned integer, got {raw!r}")
    if seed < 0:
        raise _UsageError("WEYLFRAC_SEED must be an unsigned integer")
    return seed


def _document(text, result, engine, micros):
    return json.dumps(
        {"input": text, "result": result, "engine": engine, "micros": micros},
        ensure_ascii=False,
    )


def _timed(fn, *args):
    t0 = time.perf_counter_ns()
    out = fn(*args)
    return out, (time.perf_counter_ns() - t0) // 1000


def _show(value, f=None, g=None):
    if isinstance(value, ComeasurePair):
        lines = [f"a = {render(value.a)}", f"b = {render(value.b)}"]
        if f is not None:
            lhs = mul_closed(value.a, f)
            ok = lhs == mul_closed(value.b, g)
            lines.append(f"a*f = b*g = {render(lhs)}")
            lines.append("check OK" if ok else "check FAILED")
        return "\n".join(lines)
    return render(value)


def _single(args, text, out):
    session = Session(engine=args.engine)
    value, micros = _timed(lambda: session.run(text))
    f = g = None
    if isinstance(value, ComeasurePair):
        f, g = (evaluate(parse(t), session) for t in args.operands)
    shown = _show(value, f, g)
    if args.json:
        micros = 0 if args.no_timing else micros
        print(_document(text, shown, args.engine, micros), file=out)
    else:
        print(shown, file=out)
    if shown.endswith("check FAILED"):
        return 2
    return 0


def run_batch(lines, session=None, out=None, as_json=False, timing=True):
    """Evaluate statements one per line; print one line per statement.

    Blank lines and ``#`` comments are skipped.  A failing statement prints
    ``error: ...`` and processing continues; the return value is the exit
    status of the worst failure.
    """
    session = session or Session()
    out = out or sys.stdout
    status = 0
    for raw in lines:
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            value, micros = _timed(session.run, text)
            shown = _show(value).replace("\n", "; ")
        except (ParseError, EvalError, ZeroDivisionError, ValueError) as exc:
            shown, micros = f"error: {exc}", 0
            status = max(status, 1)
        except (AssertionError, NotDivisibleError, SingularMatrixError) as exc:
            shown, micros = f"internal error: {exc}", 0
            status = 2
        if as_json:
            micros = micros if timing else 0
            print(_document(text, shown, session.engine, micros), file=out)
        else:
            print(shown, file=out)
    return status


def repl(session=None, inp=None, out=None):
    session = session or Session()
    inp = inp or sys.stdin
    out = out or sys.stdout
    interactive = inp.isatty()
    while True:
        if interactive:
            out.write("weyl> ")
            out.flush()
        line = inp.readline()
        if not line:
            break
        text = line.strip()
        if text in (":q", ":quit", "quit", "exit"):
            break
        run_batch([line], session, out)
    return 0


def _bench(args, out):
    if args.deg < 0 or args.trials < 1:
        raise _UsageError("bench needs --deg >= 0 and --trials >= 1")
    rng = random.Random(_seed())
    pairs = [
        (random_weyl(rng, args.deg, args.deg), random_weyl(rng, args.deg, args.deg))
        for _ in range(args.trials)
    ]
    results = {}
    times = {}
    for name, fn in (("closed", mul_closed), ("rewrite", mul_rewrite)):
        t0 = time.perf_counter_ns()
        results[name] = [fn(f, g) for f, g in pairs]
        times[name] = (time.perf_counter_ns() - t0) // 1000
    same = results["closed"] == results["rewrite"]
    text = f"bench --deg {args.deg} --trials {args.trials}"
    verdict = "identical" if same else "MISMATCH"
    if args.json:
        docs = [
            json.loads(_document(text, verdict, name, 0 if args.no_timing else times[name]))
            for name in ("closed", "rewrite")
        ]
        print(json.dumps(docs, ensure_ascii=False), file=out)
    else:
        print("engine,deg,trials,total_micros,mean_micros,result", file=out)
        for name in ("closed", "rewrite"):
            t = 0 if args.no_timing else times[name]
            print(f"{name},{args.deg},{args.trials},{t},{t // args.trials},{verdict}", file=out)
    return 0 if same else 2


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a JSON document instead of plain text")
    common.add_argument("--engine", choices=("closed", "rewrite"), default=argparse.SUPPRESS,
                        help="multiplication engine for Weyl products")
    common.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS,
                        help="report micros as 0 so output is byte-stable")

    parser = _Parser(prog="weylfrac", parents=[common],
                     description="Exact arithmetic in the Weyl algebra and its left fractions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr")
    for name, helptext in (
        ("comm", "commutator [F, G]"),
        ("hres", "noncommutative resultant of F and G in y"),
        ("comeasure", "left comeasuring factors a*F = b*G"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("f")
        p.add_argument("g")
    p = sub.add_parser("fraceq", parents=[common], help="decide equivalence of two fractions")
    p.add_argument("z1")
    p.add_argument("z2")
    sub.add_parser("repl", parents=[common], help="interactive session")
    p = sub.add_parser("batch", parents=[common], help="run statements from a file")
    p.add_argument("file")
    p = sub.add_parser("bench", parents=[common], help="time both multiplication engines")
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    return parser


_TEMPLATES = {
    "comm": "[{0}, {1}]",
    "hres": "hres({0}, {1})",
    "comeasure": "comeasure({0}, {1})",
    "fraceq": "fraceq({0}, {1})",
}


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = _build_parser().parse_args(argv)
        for flag, default in (("json", False), ("engine", "closed"), ("no_timing", False)):
            if not hasattr(args, flag):
                setattr(args, flag, default)
        if args.command == "eval":
            args.operands = ()
            return _single(args, args.expr, out)
        if args.command in _TEMPLATES:
            args.operands = tuple(vars(args)[k] for k in ("f", "g", "z1", "z2") if k in vars(args))
            return _single(args, _TEMPLATES[args.command].format(*args.operands), out)
        if args.command == "batch":
            try:
                with open(args.file, encoding="utf-8") as fh:
                    lines = fh.readlines()
            except OSError as exc:
                raise _UsageError(str(exc))
            return run_batch(lines, Session(engine=args.engine), out,
                             as_json=args.json, timing=not args.no_timing)
        if args.command == "repl":
            return repl(Session(engine=args.engine), out=out)
        return _bench(args, out)
    except _UsageError as exc:
        if not exc.shown:
            print(f"weylfrac: error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 0
    except (ParseError, EvalError, ZeroDivisionError, ValueError) as exc:
        print(f"weylfrac: error: {exc}", file=sys.stderr)
        return 1
    except (AssertionError, NotDivisibleError, SingularMatrixError) as exc:
        print(f"weylfrac: internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
