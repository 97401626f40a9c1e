"""The mnum command line front end.

Subcommands: eval (run a program file), repl (interactive loop),
check-laws (sweep the law suite over a finite universe), fmt (canonicalize
an interchange document), serve (start the HTTP service).  eval, fmt, and
check-laws run in-process by default and against a running service when
given --server URL.

Exit codes: 0 success, 1 evaluation error, 2 syntax error, 3 law-check
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from mnum.expr import (
    EvalError,
    ExprSyntaxError,
    STYLES,
    UnsupportedStyle,
    parse_program,
    render,
    run_program,
)
from mnum.interchange import DocumentError, decode, dumps
from mnum.oracle import MUTATIONS, UniverseSpec, UniverseTooLarge, check_laws

OK, EVAL_ERROR, SYNTAX_ERROR, LAW_FAILURE = 0, 1, 2, 3


def _make_client(base_url: str) -> Any:
    # Separate function so tests can substitute an in-process transport.
    import httpx

    return httpx.Client(base_url=base_url, timeout=120.0)


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- eval ----------------------------------------------------------------


def _cmd_eval(args: argparse.Namespace) -> int:
    source = _read_source(args.file)
    if args.server:
        return _remote_eval(args, source)
    outputs = [
        render(v, args.style) for v in run_program(parse_program(source), {})
    ]
    _emit("".join(line + "\n" for line in outputs), args.output)
    return OK


def _remote_eval(args: argparse.Namespace, source: str) -> int:
    with _make_client(args.server) as client:
        resp = client.post("/eval", json={"source": source, "style": args.style})
        if resp.status_code == 400:
            print(f"syntax error: {_detail_message(resp)}", file=sys.stderr)
            return SYNTAX_ERROR
        if resp.status_code != 200:
            print(f"error: {_detail_message(resp)}", file=sys.stderr)
            return EVAL_ERROR
        outputs = resp.json()["outputs"]
    _emit("".join(line + "\n" for line in outputs), args.output)
    return OK


def _detail_message(resp: Any) -> str:
    try:
        detail = resp.json().get("detail")
    except ValueError:
        return resp.text
    if isinstance(detail, dict) and "message" in detail:
        return str(detail["message"])
    return str(detail)


# -- repl ----------------------------------------------------------------


def _cmd_repl(args: argparse.Namespace) -> int:
    env: dict[str, Any] = {}
    print("mnum repl; statements are NAME = EXPR or EXPR; exit to leave")
    while True:
        try:
            line = input("mnum> ")
        except EOFError:
            print()
            return OK
        except KeyboardInterrupt:
            print()
            continue
        stripped = line.strip()
        if stripped in ("exit", "quit"):
            return OK
        if not stripped:
            continue
        # Errors are reported and the loop continues; nothing aborts it.
        try:
            for value in run_program(parse_program(line), env):
                print(render(value, args.style))
        except ExprSyntaxError as e:
            print(f"syntax error: {e}")
        except (EvalError, UnsupportedStyle, ValueError) as e:
            print(f"error: {e}")


# -- check-laws ----------------------------------------------------------


def _parse_max_index(text: str, dim: int) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"--max-index must be comma-separated integers, got {text!r}"
        ) from None
    if len(parts) != dim:
        raise argparse.ArgumentTypeError(
            f"--max-index has {len(parts)} components, expected {dim} (--dim)"
        )
    return parts


def _law_lines(laws: list[dict[str, Any]]) -> str:
    width = max((len(l["law"]) for l in laws), default=0)
    lines = []
    for l in laws:
        status = "PASS" if l["status"] == "pass" else "FAIL"
        line = (
            f"{status} {l['law']:<{width}}  "
            f"{l['coverage']}, checked {l['checked']}"
        )
        if l.get("counterexample"):
            ce = "; ".join(f"{k}={v}" for k, v in l["counterexample"].items())
            line += f"  counterexample: {ce}"
        lines.append(line)
    return "".join(line + "\n" for line in lines)


def _cmd_check_laws(args: argparse.Namespace) -> int:
    if args.server:
        return _remote_check_laws(args)
    try:
        spec = UniverseSpec(
            args.dim, _parse_max_index(args.max_index, args.dim), args.max_mult
        )
    except (argparse.ArgumentTypeError, ValueError) as e:
        print(f"syntax error: {e}", file=sys.stderr)
        return SYNTAX_ERROR
    mul_fn = MUTATIONS[args.mutate] if args.mutate else None
    report = check_laws(spec, budget=args.budget, mul_fn=mul_fn)
    doc = report.to_document()
    sys.stdout.write(_law_lines(doc["laws"]))
    return _finish_check_laws(doc, args.output)


def _remote_check_laws(args: argparse.Namespace) -> int:
    try:
        max_index = _parse_max_index(args.max_index, args.dim)
    except argparse.ArgumentTypeError as e:
        print(f"syntax error: {e}", file=sys.stderr)
        return SYNTAX_ERROR
    payload = {
        "dim": args.dim,
        "max_index": list(max_index),
        "max_mult": args.max_mult,
        "budget": args.budget,
        "mutate": args.mutate,
    }
    with _make_client(args.server) as client:
        resp = client.post("/check-laws", json=payload)
        if resp.status_code != 200:
            print(f"error: {_detail_message(resp)}", file=sys.stderr)
            return EVAL_ERROR
        doc = resp.json()
    sys.stdout.write(_law_lines(doc["laws"]))
    return _finish_check_laws(doc, args.output)


def _finish_check_laws(doc: dict[str, Any], output: str | None) -> int:
    laws = doc["laws"]
    failed = [l for l in laws if l["status"] != "pass"]
    if failed:
        print(f"{len(failed)} of {len(laws)} laws failed")
    else:
        print(f"all {len(laws)} laws hold")
    if output:
        _emit(json.dumps(doc, indent=2) + "\n", output)
    return LAW_FAILURE if failed else OK


# -- fmt -----------------------------------------------------------------


def _cmd_fmt(args: argparse.Namespace) -> int:
    text = _read_source(args.file)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        print(f"syntax error: invalid JSON: {e}", file=sys.stderr)
        return SYNTAX_ERROR
    if args.server:
        with _make_client(args.server) as client:
            resp = client.post("/fmt", json={"document": doc})
            if resp.status_code != 200:
                print(f"error: {_detail_message(resp)}", file=sys.stderr)
                return EVAL_ERROR
            doc = resp.json()["document"]
    pm, base = decode(doc)
    _emit(dumps(pm, base), args.output)
    return OK


# -- serve ---------------------------------------------------------------


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("mnum.service:app", host=args.host, port=args.port)
    return OK


# -- wiring ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mnum", description="Calculator for natural multidimensional numbers."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a program file ('-' for stdin)")
    p_eval.add_argument("file")
    p_eval.add_argument("--style", choices=STYLES, default="sparse")
    p_eval.add_argument("--output", metavar="PATH")
    p_eval.add_argument("--server", metavar="URL")
    p_eval.set_defaults(func=_cmd_eval)

    p_repl = sub.add_parser("repl", help="interactive read-eval-print loop")
    p_repl.add_argument("--style", choices=STYLES, default="sparse")
    p_repl.set_defaults(func=_cmd_repl)

    p_check = sub.add_parser(
        "check-laws", help="check the algebraic laws over a finite universe"
    )
    p_check.add_argument("--dim", type=int, default=2)
    p_check.add_argument(
        "--max-index", default="1,1", metavar="I,J,...",
        help="per-axis largest index, comma separated",
    )
    p_check.add_argument("--max-mult", type=int, default=1)
    p_check.add_argument("--budget", type=int, default=1_000_000)
    p_check.add_argument(
        "--mutate", choices=sorted(MUTATIONS),
        help="deliberately break an operation to demonstrate detection",
    )
    p_check.add_argument("--output", metavar="PATH", help="write a JSON report")
    p_check.add_argument("--server", metavar="URL")
    p_check.set_defaults(func=_cmd_check_laws)

    p_fmt = sub.add_parser(
        "fmt", help="canonicalize an interchange document ('-' for stdin)"
    )
    p_fmt.add_argument("file")
    p_fmt.add_argument("--output", metavar="PATH")
    p_fmt.add_argument("--server", metavar="URL")
    p_fmt.set_defaults(func=_cmd_fmt)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ExprSyntaxError as e:
        print(f"syntax error: {e}", file=sys.stderr)
        return SYNTAX_ERROR
    except UniverseTooLarge as e:
        print(f"error: {e}", file=sys.stderr)
        return EVAL_ERROR
    except (EvalError, UnsupportedStyle, DocumentError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EVAL_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EVAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
