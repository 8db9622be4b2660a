"""Command-line entry point.

Exit codes: 0 criterion holds, 1 criterion fails, 2 malformed input,
3 the library rejected the input, 4 golden file missing.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .dispatch import run
from .output import dumps, render_json, render_text, report_dict
from .schemas import SchemaError
from .suite import load_golden, run_suite, write_golden

EXIT_PASS, EXIT_FAIL, EXIT_SCHEMA, EXIT_DOMAIN, EXIT_GOLDEN = 0, 1, 2, 3, 4

SUBCOMMANDS = {
    "classify": "curve-classify",
    "metric": "model-metric",
    "pullback": "pullback-structure",
    "alghyp": "alg-hyp",
    "nochka": "nochka",
    "surface": "surface-criterion",
    "planepair": "plane-pair",
    "bt": "bt-criterion",
    "jets": "jets-enumerate",
    "nevanlinna": "nevanlinna-run",
}


def _read_input(path: Optional[str]):
    if path in (None, "-"):
        text, name = sys.stdin.read(), "<stdin>"
    else:
        text, name = Path(path).read_text(encoding="utf-8"), path
    if name.endswith(".toml"):
        try:
            return tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise SchemaError("/", f"{name} is not valid TOML: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        try:
            return tomllib.loads(text)
        except tomllib.TOMLDecodeError:
            raise SchemaError("/", f"{name} is neither JSON nor TOML: {exc}") from None


def _as_document(obj, kind: Optional[str], args) -> dict:
    if isinstance(obj, dict) and "payload" in obj:
        doc = dict(obj)
        if kind is not None:
            doc.setdefault("kind", kind)
            if doc["kind"] != kind:
                raise SchemaError("/kind", f"document kind {doc['kind']!r} does not match subcommand ({kind!r})")
    elif kind is None:
        raise SchemaError("/", "sweep entries must be full documents with kind and payload")
    else:
        doc = {"kind": kind, "payload": obj}
    opts = dict(doc.get("options") or {})
    if getattr(args, "exhaustive", False):
        opts["exhaustive"] = True
    if getattr(args, "tolerance", None) is not None:
        opts["tolerance"] = args.tolerance
    if opts:
        doc["options"] = opts
    return doc


def evaluate(doc: dict) -> Tuple[int, object]:
    """(exit code, Report or error message) for one document."""
    try:
        rep = run(doc)
    except SchemaError as exc:
        return EXIT_SCHEMA, f"schema error at {exc}"
    except (ValueError, TypeError, ArithmeticError, RuntimeError) as exc:
        return EXIT_DOMAIN, f"domain error: {exc}"
    return (EXIT_PASS if rep.verdict else EXIT_FAIL), rep


def _emit_error(code: int, message: str, fmt: str) -> None:
    if fmt == "json":
        print(dumps({"error": message, "exit_code": code}))
    print(message, file=sys.stderr)


def _cmd_single(args, kind: str) -> int:
    try:
        doc = _as_document(_read_input(args.input), kind, args)
    except SchemaError as exc:
        _emit_error(EXIT_SCHEMA, f"schema error at {exc}", args.format or "json")
        return EXIT_SCHEMA
    fmt = args.format or (doc.get("options") or {}).get("format", "json")
    code, result = evaluate(doc)
    if isinstance(result, str):
        _emit_error(code, result, fmt)
        return code
    print(render_json(result) if fmt == "json" else render_text(result))
    return code


def _sweep_one(doc) -> Tuple[int, object]:
    code, result = evaluate(doc)
    if isinstance(result, str):
        return code, {"error": result, "exit_code": code}
    return code, report_dict(result)


def _cmd_sweep(args) -> int:
    try:
        obj = _read_input(args.input)
        entries = obj.get("documents") if isinstance(obj, dict) else obj
        if not isinstance(entries, list):
            raise SchemaError("/documents", "expected a list of problem documents")
        docs = [_as_document(d, None, args) for d in entries]
    except SchemaError as exc:
        _emit_error(EXIT_SCHEMA, f"schema error at {exc}", "json")
        return EXIT_SCHEMA
    if args.jobs == 1 or len(docs) < 2:
        results = [_sweep_one(d) for d in docs]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_one, docs))  # map keeps input order
    print(dumps([{"index": i, **body} for i, (_, body) in enumerate(results)]))
    return max((code for code, _ in results), default=EXIT_PASS)


def _cmd_suite(args) -> int:
    if args.write_golden:
        write_golden(Path(args.write_golden))
        print(f"wrote {args.write_golden}")
        return EXIT_PASS
    try:
        golden = load_golden(args.golden)
    except FileNotFoundError as exc:
        print(f"golden file missing: {exc.filename}", file=sys.stderr)
        return EXIT_GOLDEN
    results = run_suite(golden)
    if args.json:
        print(dumps([
            {"name": r["name"], "ok": r["ok"], "mismatches": r["mismatches"], "report": report_dict(r["report"])}
            for r in results
        ]))
    else:
        for r in results:
            status = "ok" if r["ok"] else "MISMATCH"
            print(f"{status:<9} {r['name']}")
            for m in r["mismatches"]:
                print(f"          {m}")
        bad = sum(not r["ok"] for r in results)
        print(f"{len(results) - bad}/{len(results)} cases match the golden file")
    return EXIT_PASS if all(r["ok"] for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbihyp", description="Hyperbolicity criteria for geometric orbifolds.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, kind in SUBCOMMANDS.items():
        p = sub.add_parser(name, help=f"evaluate a {kind} document")
        p.add_argument("--input", "-i", help="JSON or TOML document (default: stdin)")
        p.add_argument("--format", choices=("json", "text"))
        p.add_argument("--exhaustive", action="store_true", help="exhaustive subset sweep where supported")
        p.add_argument("--tolerance", type=float, help="numerical comparison tolerance")
        p.set_defaults(kind=kind)
    p = sub.add_parser("sweep", help="evaluate a list of documents, optionally in parallel")
    p.add_argument("--input", "-i")
    p.add_argument("--jobs", "-j", type=int, default=1)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--tolerance", type=float)
    p = sub.add_parser("paper-suite", help="rerun the worked examples against the golden file")
    p.add_argument("--golden", help="golden file (default: packaged copy)")
    p.add_argument("--json", action="store_true", help="machine-readable results array")
    p.add_argument("--write-golden", metavar="PATH", help=argparse.SUPPRESS)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "sweep":
        return _cmd_sweep(args)
    if args.command == "paper-suite":
        return _cmd_suite(args)
    return _cmd_single(args, args.kind)


if __name__ == "__main__":
    sys.exit(main())
