"""Command-line surface: generate lattices, check laws, run pipelines, export.

Exit codes form a stable contract: 0 when everything requested holds, 1 when
a check or pipeline reports a failure (the report is still emitted), and 2
for usage errors, malformed input, or violated size bounds.

Reports are emitted as JSON with a deterministic ``report`` body; wall-clock
time lives in the separate ``timing_ms`` field so identical inputs produce
byte-identical report bodies.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .construction import verify_boolean_pipeline, verify_projective_pipeline
from .core import FiniteLattice
from .document import (
    LatticeDocument,
    document_from_lattice,
    document_to_lattice,
    lattice_to_dot,
    load_document,
    parse_document,
)
from .errors import LatticeError
from .generators import boolean_lattice, chain, diamond_m3, pentagon_n5, subspace_lattice
from .projective import (
    check_p1,
    check_p2,
    check_p3_third_point,
    check_spanning,
    geometry_view,
)
from .props import (
    Law,
    LawReport,
    check_lattice_axioms,
    is_atomic,
    is_complemented,
    is_distributive,
    is_modular,
    is_perspective_lattice,
    satisfies_height_law,
)

# Laws runnable without extra parameters, in report order.
_PLAIN_LAWS = (
    "axioms",
    "distributive",
    "modular",
    "heightlaw",
    "complemented",
    "atomic",
    "perspective",
    "p1",
    "p2",
    "thirdpoint",
)
# Laws that additionally need --n.
_SIZED_LAWS = ("spanning", "topheight")


class _UsageError(Exception):
    pass


def _run_law(lat: FiniteLattice, token: str, n: int | None) -> LawReport:
    if token == "axioms":
        return check_lattice_axioms(lat)
    if token == "distributive":
        return is_distributive(lat)
    if token == "modular":
        return is_modular(lat)
    if token == "heightlaw":
        return satisfies_height_law(lat)
    if token == "complemented":
        return is_complemented(lat)
    if token == "atomic":
        return is_atomic(lat)
    if token == "perspective":
        return is_perspective_lattice(lat)
    if token == "p1":
        return check_p1(geometry_view(lat))
    if token == "p2":
        return check_p2(geometry_view(lat))
    if token == "thirdpoint":
        return check_p3_third_point(geometry_view(lat))
    if token == "spanning":
        return check_spanning(lat, n)
    if token == "topheight":
        actual = lat.height(lat.top)
        return LawReport(
            Law.TOP_HEIGHT,
            actual == n,
            None,
            f"top height {actual}, expected {n}",
        )
    raise _UsageError(f"unknown law {token!r}")


def _parse_laws(requested: str, n: int | None) -> list[str]:
    tokens = [t.strip() for t in requested.split(",") if t.strip()]
    if not tokens:
        raise _UsageError("no laws requested")
    if tokens == ["all"]:
        return list(_PLAIN_LAWS)
    known = set(_PLAIN_LAWS) | set(_SIZED_LAWS)
    for t in tokens:
        if t not in known:
            raise _UsageError(
                f"unknown law {t!r}; choose from "
                f"{', '.join(sorted(known))} or 'all'"
            )
        if t in _SIZED_LAWS and n is None:
            raise _UsageError(f"law {t!r} requires --n")
    return tokens


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _read_document(path: str) -> LatticeDocument:
    if path == "-":
        return parse_document(sys.stdin.read())
    return load_document(path)


def _emit_report(body: dict, elapsed_ms: float, out: str | None) -> None:
    payload = {"report": body, "timing_ms": round(elapsed_ms, 3)}
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", out)


def _cmd_gen(args) -> int:
    kind = args.kind
    if kind == "boolean":
        if args.n is None:
            raise _UsageError("gen boolean requires --n")
        lat = boolean_lattice(args.n)
    elif kind == "subspace":
        if args.n is None or args.q is None:
            raise _UsageError("gen subspace requires --n and --q")
        lat = subspace_lattice(args.n, args.q)
    elif kind == "chain":
        if args.n is None:
            raise _UsageError("gen chain requires --n")
        lat = chain(args.n)
    elif kind == "m3":
        lat = diamond_m3()
    else:
        lat = pentagon_n5()
    _emit(document_from_lattice(lat).to_json(), args.out)
    return 0


def _cmd_check(args) -> int:
    started = time.perf_counter()
    doc = _read_document(args.input)
    lat = document_to_lattice(doc)
    tokens = _parse_laws(args.laws, args.n)
    results = {}
    for token in tokens:
        try:
            report = _run_law(lat, token, args.n)
        except LatticeError as exc:
            law = Law(token) if token != "axioms" else Law.LATTICE_AXIOMS
            report = LawReport(law, False, None, f"check aborted: {exc}")
        results[token] = report.to_dict(lat)
    body = {
        "command": "check",
        "input": doc.name,
        "size": lat.size,
        "laws": results,
        "all_hold": all(r["holds"] for r in results.values()),
    }
    _emit_report(body, (time.perf_counter() - started) * 1000.0, args.out)
    return 0 if body["all_hold"] else 1


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    token = args.pipeline
    if token in ("boolean", "s5"):
        if args.n is None:
            raise _UsageError("verify boolean requires --n")
        report = verify_boolean_pipeline(args.n)
    elif token in ("projective", "s7"):
        if args.n is None:
            raise _UsageError("verify projective requires --n")
        if args.q is None:
            raise _UsageError("verify projective requires --q")
        report = verify_projective_pipeline(args.n, args.q)
    else:
        raise _UsageError(f"unknown pipeline {token!r}")
    body = {"command": "verify", **report.to_dict()}
    _emit_report(body, (time.perf_counter() - started) * 1000.0, args.out)
    return 0 if report.passed else 1


def _cmd_export(args) -> int:
    doc = _read_document(args.input)
    lat = document_to_lattice(doc)
    if args.format == "hasse-dot":
        _emit(lattice_to_dot(lat), args.out)
    else:
        _emit(document_from_lattice(lat, name=doc.name).to_json(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latlab",
        description="Finite lattice laboratory: generators, law checks, "
        "construction pipelines, exports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a lattice document")
    p_gen.add_argument(
        "kind", choices=("boolean", "subspace", "m3", "n5", "chain")
    )
    p_gen.add_argument("--n", type=int, default=None)
    p_gen.add_argument("--q", type=int, default=None)
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=_cmd_gen)

    p_check = sub.add_parser("check", help="run law checks on a document")
    p_check.add_argument("input", help="document path, or - for stdin")
    p_check.add_argument("--laws", default="all")
    p_check.add_argument("--n", type=int, default=None)
    p_check.add_argument("--out", default=None)
    p_check.set_defaults(func=_cmd_check)

    p_verify = sub.add_parser("verify", help="run an end-to-end pipeline")
    p_verify.add_argument(
        "pipeline", choices=("boolean", "projective", "s5", "s7")
    )
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--q", type=int, default=None)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_export = sub.add_parser("export", help="export a document")
    p_export.add_argument("input", help="document path, or - for stdin")
    p_export.add_argument(
        "--format", choices=("hasse-dot", "json"), default="json"
    )
    p_export.add_argument("--out", default=None)
    p_export.set_defaults(func=_cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (0, None) else 2
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"latlab: {exc}", file=sys.stderr)
        return 2
    except LatticeError as exc:
        print(f"latlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"latlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
