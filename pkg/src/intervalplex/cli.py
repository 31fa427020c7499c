"""Command-line front end.

Commands: build | check | recognize | forbidden | sortable | verify.
Every command prints either plain text or JSON (--format json, with a
"schema": 1 field) and exits through one fixed code table:

    0   main answer is true / pass / pattern absent
    1   main answer is false / fail / pattern present
    2   input error (bad file, bad flag combination, bad permutation)
    3   guard refusal (instance larger than the search guard allows)
    4   internal consistency violation (a certificate or construction
        failed its own revalidation)

so shell scripts can branch on $? without parsing output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import ConsistencyError, GuardError, InputError
from .graphs import Graph, parse_graph, validate_labeling
from .complexes import (
    PureComplex,
    delta_complex,
    format_complex,
    independence_faces,
    independence_facets,
    parse_complex,
)
from . import predicates
from .predicates import (
    COMPLEX_PREDICATES,
    GRAPH_PREDICATES,
    IntervalSystem,
    validate_interval_representation,
)
from .recognition import (
    GRAPH_CLASSES,
    LABELING_GUARD,
    STRONG_GUARD,
    RecognitionResult,
    build_clique_interval_representation,
    recognize_graph_class,
)
from .forbidden import find_d_claw, find_d_paw, find_induced_cycle_geq
from .sortability import independence_complex_sortable
from .harness import SUITE_IDS, run_suite

PATTERN_KINDS = ("cycle", "claw", "paw")

# predicate used to revalidate each class certificate in `check --certificate`
_CLASS_PREDICATES = {
    "under_closed": predicates.is_under_closed_local,
    "unit_interval": predicates.is_unit_interval,
    "exchange": predicates.satisfies_conditional_exchange,
}


def _read_text(path: str) -> str:
    try:
        with open(path) as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as handle:
            handle.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from None


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from None
    if not values:
        raise InputError(f"{what} must not be empty")
    return values


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        body = "".join(line + "\n" for line in text_lines)
    out = getattr(args, "output", None)
    if out is None:
        print(body, end="")
    else:
        _write_text(out, body)


def _fractions_to_json(system: IntervalSystem) -> list[list[str]]:
    return [[str(l), str(r)] for l, r in system.intervals]


def _fractions_from_json(entries) -> IntervalSystem:
    try:
        pairs = tuple((Fraction(l), Fraction(r)) for l, r in entries)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError(f"representation entries must be endpoint pairs of fractions") from None
    return IntervalSystem(pairs)


def _format_interval(pair) -> str:
    left, right = pair
    return f"[{left}, {right}]"


def _result_payload(result: RecognitionResult, cls: str, d: int) -> dict:
    payload = {
        "schema": 1,
        "command": "recognize",
        "class": cls,
        "d": d,
        "found": result.found,
        "nodes_explored": result.nodes_explored,
        "search_exhaustive": result.search_exhaustive,
    }
    if result.labeling is not None:
        payload["labeling"] = list(result.labeling)
    if result.representation is not None:
        payload["representation"] = _fractions_to_json(result.representation)
    return payload


def _result_lines(result: RecognitionResult, cls: str, d: int) -> list[str]:
    lines = [
        f"class: {cls}",
        f"d: {d}",
        f"found: {str(result.found).lower()}",
    ]
    if result.labeling is not None:
        lines.append("labeling: " + " ".join(str(x) for x in result.labeling))
    if result.representation is not None:
        for v, pair in enumerate(result.representation.intervals, start=1):
            lines.append(f"interval {v}: {_format_interval(pair)}")
    lines.append(f"nodes explored: {result.nodes_explored}")
    lines.append(f"search exhaustive: {str(result.search_exhaustive).lower()}")
    return lines


# ---------------------------------------------------------------------------
# build

def cmd_build(args) -> int:
    g = parse_graph(_read_text(args.input))
    if args.target == "delta":
        c = delta_complex(g, args.d)
        payload = {
            "schema": 1,
            "command": "build",
            "target": "delta",
            "n": c.n,
            "d": c.d,
            "facets": [list(f) for f in sorted(c.facets)],
        }
        text = format_complex(c)
    elif args.target == "ind-facets":
        facets = independence_facets(g, args.d)
        payload = {
            "schema": 1,
            "command": "build",
            "target": "ind-facets",
            "n": g.n,
            "d": args.d,
            "facets": [list(f) for f in facets],
        }
        text = f"n {g.n}\n" + "".join(" ".join(str(v) for v in f) + "\n" for f in facets)
    else:
        if args.t is None:
            raise InputError("ind-faces requires --t (face cardinality)")
        faces = independence_faces(g, args.d, args.t)
        listed = sorted(faces.faces)
        payload = {
            "schema": 1,
            "command": "build",
            "target": "ind-faces",
            "n": g.n,
            "d": args.d,
            "t": args.t,
            "faces": [list(f) for f in listed],
        }
        text = f"n {g.n}\n" + "".join(" ".join(str(v) for v in f) + "\n" for f in listed)
    if args.format == "json":
        _write_text(args.output, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        _write_text(args.output, text)
    return 0


# ---------------------------------------------------------------------------
# check

def _check_predicate(args) -> int:
    if args.predicate in GRAPH_PREDICATES:
        g = parse_graph(_read_text(args.input))
        if args.labeling is not None:
            g = g.relabel(validate_labeling(_parse_int_list(args.labeling, "labeling"), g.n))
        holds, violations = GRAPH_PREDICATES[args.predicate]
        verdict = holds(g)
        witness = None if verdict else next(iter(violations(g)), None)
    else:
        c = parse_complex(_read_text(args.input))
        if args.labeling is not None:
            c = c.relabel(validate_labeling(_parse_int_list(args.labeling, "labeling"), c.n))
        holds, violations = COMPLEX_PREDICATES[args.predicate]
        verdict = holds(c)
        witness = None if verdict else next(iter(violations(c)), None)
    payload = {
        "schema": 1,
        "command": "check",
        "predicate": args.predicate,
        "holds": verdict,
    }
    lines = [f"predicate: {args.predicate}", f"holds: {str(verdict).lower()}"]
    if witness is not None:
        payload["violation"] = {k: list(v) if isinstance(v, tuple) else v
                                for k, v in witness.items()}
        lines.append("violation: " + ", ".join(f"{k}={v}" for k, v in witness.items()))
    _emit(args, payload, lines)
    return 0 if verdict else 1


def _check_certificate(args) -> int:
    try:
        cert = json.loads(_read_text(args.certificate))
    except json.JSONDecodeError as exc:
        raise InputError(f"certificate is not valid JSON: {exc}") from None
    if not isinstance(cert, dict):
        raise InputError("certificate must be a JSON object")
    cls = cert.get("class")
    d = cert.get("d")
    if cls not in GRAPH_CLASSES:
        raise InputError(f"certificate class must be one of {GRAPH_CLASSES}, got {cls!r}")
    if not isinstance(d, int) or d < 1:
        raise InputError(f"certificate d must be a positive integer, got {d!r}")
    if not cert.get("found"):
        raise InputError("certificate records a non-result (found is false)")
    g = parse_graph(_read_text(args.input))
    c = delta_complex(g, d)
    if cls in _CLASS_PREDICATES:
        labeling = cert.get("labeling")
        if labeling is None:
            raise InputError(f"class {cls} certificate needs a labeling")
        perm = validate_labeling(labeling, c.n)
        verdict = _CLASS_PREDICATES[cls](c.relabel(perm))
    else:
        entries = cert.get("representation")
        if entries is None:
            raise InputError(f"class {cls} certificate needs a representation")
        system = _fractions_from_json(entries)
        verdict = validate_interval_representation(c, system)
        if verdict and cls == "strong_unit":
            verdict = system.unit
        if verdict and cls == "strong_proper":
            verdict = system.proper
    payload = {
        "schema": 1,
        "command": "check",
        "certificate_class": cls,
        "d": d,
        "holds": verdict,
    }
    lines = [f"certificate class: {cls}", f"d: {d}", f"holds: {str(verdict).lower()}"]
    _emit(args, payload, lines)
    return 0 if verdict else 1


def cmd_check(args) -> int:
    if (args.predicate is None) == (args.certificate is None):
        raise InputError("check needs exactly one of --predicate or --certificate")
    if args.certificate is not None:
        if args.labeling is not None:
            raise InputError("--labeling applies to --predicate mode only")
        return _check_certificate(args)
    return _check_predicate(args)


# ---------------------------------------------------------------------------
# recognize

def cmd_recognize(args) -> int:
    g = parse_graph(_read_text(args.input))
    cls = args.cls.replace("-", "_")
    if cls == "clique_construction":
        result = build_clique_interval_representation(g)
    else:
        if cls not in GRAPH_CLASSES:
            names = tuple(name.replace("_", "-") for name in GRAPH_CLASSES)
            raise InputError(f"class must be one of {names + ('clique-construction',)}, "
                             f"got {args.cls!r}")
        result = recognize_graph_class(g, args.d, cls,
                                       labeling_guard=args.labeling_guard,
                                       strong_guard=args.strong_guard)
    _emit(args, _result_payload(result, cls, args.d), _result_lines(result, cls, args.d))
    return 0 if result.found else 1


# ---------------------------------------------------------------------------
# forbidden

def _witness_payload(witness) -> dict:
    entry = {"kind": witness.kind, "vertices": list(witness.vertices)}
    if witness.parts:
        entry["parts"] = [list(p) for p in witness.parts]
    if witness.center is not None:
        entry["center"] = witness.center
    return entry


def cmd_forbidden(args) -> int:
    g = parse_graph(_read_text(args.input))
    kinds = PATTERN_KINDS if args.kinds is None else tuple(
        k.strip() for k in args.kinds.split(","))
    for kind in kinds:
        if kind not in PATTERN_KINDS:
            raise InputError(f"kinds must come from {PATTERN_KINDS}, got {kind!r}")
    witnesses = []
    for kind in kinds:
        if kind == "cycle":
            w = find_induced_cycle_geq(g, args.d + 3)
        elif kind == "claw":
            w = find_d_claw(g, args.d)
        else:
            w = find_d_paw(g, args.d)
        if w is not None:
            witnesses.append(w)
    payload = {
        "schema": 1,
        "command": "forbidden",
        "d": args.d,
        "kinds": list(kinds),
        "present": bool(witnesses),
        "witnesses": [_witness_payload(w) for w in witnesses],
    }
    lines = [f"d: {args.d}", f"present: {str(bool(witnesses)).lower()}"]
    for w in witnesses:
        desc = f"{w.kind}: " + " ".join(str(v) for v in w.vertices)
        if w.center is not None:
            desc += f" (center {w.center})"
        lines.append(desc)
    _emit(args, payload, lines)
    return 1 if witnesses else 0


# ---------------------------------------------------------------------------
# sortable

def cmd_sortable(args) -> int:
    g = parse_graph(_read_text(args.input))
    verdict = independence_complex_sortable(g, args.d)
    payload = {
        "schema": 1,
        "command": "sortable",
        "d": args.d,
        "sortable": verdict,
    }
    _emit(args, payload, [f"d: {args.d}", f"sortable: {str(verdict).lower()}"])
    return 0 if verdict else 1


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args) -> int:
    if args.list:
        for suite in SUITE_IDS:
            print(suite)
        return 0
    if args.suite is None:
        raise InputError("verify needs --suite (or --list)")
    d_range = None if args.d is None else _parse_int_list(args.d, "--d")
    report = run_suite(
        args.suite,
        n_max=args.n_max,
        d_range=d_range,
        iso_reduced=args.iso_reduced,
        jobs=args.jobs,
        seed=args.seed,
        samples=args.samples,
        mutate=args.mutate,
    )
    lines = [
        f"suite: {report.suite}",
        "params: " + json.dumps(report.params, sort_keys=True),
        f"instances checked: {report.instances_checked}",
        f"failures: {len(report.failures)}",
    ]
    shown = report.failures[: args.max_failures]
    lines.extend("  " + json.dumps(entry, sort_keys=True) for entry in shown)
    hidden = len(report.failures) - len(shown)
    if hidden > 0:
        lines.append(f"  ... and {hidden} more")
    lines.extend(f"note: {obs}" for obs in report.observations)
    lines.append(f"elapsed ms: {report.elapsed_ms}")
    lines.append("verdict: " + ("pass" if report.passed else "fail"))
    _emit(args, report.to_json(), lines)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervalplex",
        description="Interval-style structure on pure simplicial complexes: "
                    "builders, labeled predicates, recognizers, pattern scans, "
                    "sortability, and verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_d=True):
        p.add_argument("--input", required=True, help="input file path")
        if needs_d:
            p.add_argument("--d", type=int, required=True, help="dimension d >= 1")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write here instead of stdout")

    p_build = sub.add_parser("build", help="construct a complex or face list from a graph")
    add_common(p_build)
    p_build.add_argument("--target", choices=("delta", "ind-facets", "ind-faces"),
                         required=True)
    p_build.add_argument("--t", type=int, help="face cardinality for ind-faces")
    p_build.set_defaults(func=cmd_build)

    p_check = sub.add_parser("check", help="evaluate a labeled predicate or "
                                           "revalidate a recognize certificate")
    p_check.add_argument("--input", required=True, help="complex file "
                         "(graph file for closed-graph and --certificate)")
    p_check.add_argument("--predicate",
                         choices=tuple(COMPLEX_PREDICATES) + tuple(GRAPH_PREDICATES))
    p_check.add_argument("--labeling",
                         help="comma-separated permutation applied before checking")
    p_check.add_argument("--certificate",
                         help="JSON file produced by recognize --format json")
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.add_argument("--output", help="write here instead of stdout")
    p_check.set_defaults(func=cmd_check)

    p_rec = sub.add_parser("recognize", help="search for a labeling or representation")
    add_common(p_rec)
    p_rec.add_argument("--class", dest="cls", required=True,
                       help="under-closed | unit-interval | exchange | strong-interval "
                            "| strong-unit | strong-proper | clique-construction")
    p_rec.add_argument("--labeling-guard", type=int, default=LABELING_GUARD)
    p_rec.add_argument("--strong-guard", type=int, default=STRONG_GUARD)
    p_rec.set_defaults(func=cmd_recognize)

    p_forb = sub.add_parser("forbidden", help="scan for forbidden induced patterns")
    add_common(p_forb)
    p_forb.add_argument("--kinds", help="comma subset of cycle,claw,paw (default all)")
    p_forb.set_defaults(func=cmd_forbidden)

    p_sort = sub.add_parser("sortable", help="sort-closure of the d-independence complex")
    add_common(p_sort)
    p_sort.set_defaults(func=cmd_sortable)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--suite", choices=SUITE_IDS)
    p_ver.add_argument("--list", action="store_true", help="list suite names and exit")
    p_ver.add_argument("--n-max", type=int)
    p_ver.add_argument("--d", help="comma-separated dimensions")
    p_ver.add_argument("--iso-reduced", dest="iso_reduced", action="store_const",
                       const=True, default=None,
                       help="one representative per isomorphism class")
    p_ver.add_argument("--labeled", dest="iso_reduced", action="store_const",
                       const=False, help="every labeled graph (overrides the default)")
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--seed", type=int, help="required by the sampled suite")
    p_ver.add_argument("--samples", type=int, default=20)
    p_ver.add_argument("--mutate", action="store_true",
                       help="run with a deliberately broken checker (self-test)")
    p_ver.add_argument("--max-failures", type=int, default=10,
                       help="failure lines to print in text mode")
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.add_argument("--output", help="write here instead of stdout")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        print(f"guard refusal: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"consistency violation: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
