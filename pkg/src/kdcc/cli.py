"""Command-line front end.

Verbs:

* ``gen``     -- materialize a family spec as an edge-list file
* ``cv``      -- minimum vertex deletions (closed form for specs, search for files)
* ``cm``      -- minimum edge deletions after deleting exactly p vertices
* ``curve``   -- the full (p, q) trade-off curve
* ``oracle``  -- run the exhaustive searches directly on a spec or file
* ``verify``  -- sweep family instances, comparing formulas against the search
* ``packing`` -- maximum vertex-disjoint geodesic k-path packing

Inputs are either a family spec (``path 7``, ``cycle 12``, ``complete 5``,
``bipartite 3 4``, ``tree 2 3``) or a single path to a graph file (edge list
or restricted DOT).  ``--json PATH`` writes a versioned, byte-stable report;
wall-clock timing goes to stderr only.  Exit codes: 0 success, 1 usage error,
2 verification mismatch, 3 resource limit.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time
from typing import Any

from . import formulas, report
from . import oracle as searches
from . import witnesses as constructions
from .families import Complete, CompleteBipartite, Cycle, FamilySpec, Path, PerfectTree, build
from .formulas import EXTENSION_P0, UnsupportedFamilyError
from .graph import Graph, GraphError, new_graph
from .graphio import edge_list_text, load_graph, write_edge_list
from .oracle import DEFAULT_EDGE_LIMIT, DEFAULT_VERTEX_LIMIT, SearchLimitExceeded

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_LIMIT = 3

LIMIT_N_ENV = "KDCC_LIMIT_N"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; 2 is reserved for
    # verification mismatches here, so route usage problems to exit 1.
    def error(self, message: str):
        raise _UsageError(message)


_FAMILIES: dict[str, tuple[type, int]] = {
    "path": (Path, 1),
    "cycle": (Cycle, 1),
    "complete": (Complete, 1),
    "completebipartite": (CompleteBipartite, 2),
    "bipartite": (CompleteBipartite, 2),
    "perfecttree": (PerfectTree, 2),
    "tree": (PerfectTree, 2),
}


def _canonical(token: str) -> str:
    return token.lower().replace("-", "").replace("_", "")


def _parse_spec(tokens: list[str]) -> FamilySpec:
    cls, arity = _FAMILIES[_canonical(tokens[0])]
    params = tokens[1:]
    if len(params) != arity:
        raise _UsageError(
            f"family {tokens[0]!r} takes {arity} integer parameter(s), got {len(params)}"
        )
    values = []
    for tok in params:
        try:
            values.append(int(tok))
        except ValueError:
            raise _UsageError(f"family parameters must be integers, got {tok!r}") from None
    try:
        return cls(*values)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _family_fields(spec: FamilySpec) -> tuple[str, list[int]]:
    match spec:
        case Path(n=n):
            return "path", [n]
        case Cycle(n=n):
            return "cycle", [n]
        case Complete(n=n):
            return "complete", [n]
        case CompleteBipartite(a=a, b=b):
            return "complete_bipartite", [a, b]
        case PerfectTree(r=r, l=l):
            return "perfect_tree", [r, l]
    raise _UsageError(f"unknown family spec {spec!r}")


def _describe(spec: FamilySpec) -> str:
    name, params = _family_fields(spec)
    pretty = {"complete_bipartite": "CompleteBipartite", "perfect_tree": "PerfectTree"}.get(
        name, name.capitalize()
    )
    return f"{pretty}({','.join(str(v) for v in params)})"


def _resolve_input(tokens: list[str]) -> tuple[FamilySpec | None, Graph, dict[str, Any]]:
    if _canonical(tokens[0]) in _FAMILIES:
        spec = _parse_spec(tokens)
        graph = build(spec)
        family, params = _family_fields(spec)
        return spec, graph, {"kind": "family", "family": family, "params": params}
    if len(tokens) != 1:
        names = ", ".join(sorted({"path", "cycle", "complete", "bipartite", "tree"}))
        raise _UsageError(
            f"unknown family {tokens[0]!r}; expected one of {names} or a single graph file path"
        )
    graph = load_graph(tokens[0])
    return None, graph, {"kind": "file", "path": tokens[0], "n": graph.n, "m": graph.m}


def _parse_range(text: str, flag: str) -> tuple[int, int]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError(text)
    except ValueError:
        raise _UsageError(f"{flag} expects MIN:MAX (or a single value), got {text!r}") from None
    if lo > hi:
        raise _UsageError(f"{flag}: empty range {text!r}")
    return lo, hi


def _limit_n(args: argparse.Namespace) -> int:
    if args.limit_n is not None:
        return args.limit_n
    raw = os.environ.get(LIMIT_N_ENV)
    if raw is None:
        return DEFAULT_VERTEX_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"{LIMIT_N_ENV} must be an integer, got {raw!r}") from None


def _emit(doc: dict[str, Any], lines: list[str], args: argparse.Namespace, t0: float) -> int:
    for line in lines:
        print(line)
    if getattr(args, "json", None):
        report.write(doc, args.json)
    print(f"elapsed: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return EXIT_OK


def _witness_lines(w: constructions.Witness) -> list[str]:
    lines = [f"witness vertices: {sorted(w.vertex_set)}"]
    if w.edge_set:
        lines.append(f"witness edges: {[list(e) for e in sorted(w.edge_set)]}")
    return lines


def cmd_gen(args: argparse.Namespace) -> int:
    if _canonical(args.input[0]) not in _FAMILIES:
        raise _UsageError("gen takes a family spec, not a file")
    spec = _parse_spec(args.input)
    graph = build(spec)
    if args.out is None or args.out == "-":
        sys.stdout.write(edge_list_text(graph))
    else:
        write_edge_list(graph, args.out)
        print(f"wrote {_describe(spec)} (n={graph.n}, m={graph.m}) to {args.out}")
    return EXIT_OK


def cmd_cv(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    spec, graph, desc = _resolve_input(args.input)
    if spec is not None:
        res = formulas.cv(spec, args.k)
        wit = constructions.vertex_witness(spec, args.k)
        entry: dict[str, Any] = {
            "name": "cv",
            "value": res.value,
            "provenance": report.PROVENANCE_CLOSED_FORM,
            "case": res.case_tag,
            "witness": report.witness_payload(wit),
        }
        lines = [f"cv({_describe(spec)}, k={args.k}) = {res.value}  [closed-form; case: {res.case_tag}]"]
        lines += _witness_lines(wit)
    else:
        found = searches.min_vertex_disconnecting(graph, args.k, limit_n=_limit_n(args))
        entry = {
            "name": "cv",
            "value": found.minimum,
            "provenance": report.PROVENANCE_ORACLE,
            "explored": found.explored,
            "witness": report.witness_payload(found.witness),
        }
        lines = [f"cv(n={graph.n}, m={graph.m}, k={args.k}) = {found.minimum}  [oracle; explored {found.explored}]"]
        lines += _witness_lines(found.witness)
    doc = report.new_report("cv", desc, k=args.k, results=[entry])
    return _emit(doc, lines, args, t0)


def cmd_cm(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    spec, graph, desc = _resolve_input(args.input)
    if spec is not None:
        value, tag = formulas.cm_tagged(spec, args.k, args.p)
        wit = constructions.mixed_witness(spec, args.k, args.p)
        provenance = EXTENSION_P0 if tag == EXTENSION_P0 else report.PROVENANCE_CLOSED_FORM
        entry: dict[str, Any] = {
            "name": "cm",
            "value": value,
            "provenance": provenance,
            "case": tag,
            "witness": report.witness_payload(wit),
        }
        lines = [f"cm({_describe(spec)}, k={args.k}, p={args.p}) = {value}  [{provenance}; case: {tag}]"]
        lines += _witness_lines(wit)
    else:
        found = searches.min_mixed(
            graph, args.k, args.p, limit_n=_limit_n(args), limit_e=args.limit_e
        )
        entry = {
            "name": "cm",
            "value": found.minimum,
            "provenance": report.PROVENANCE_ORACLE,
            "explored": found.explored,
            "witness": report.witness_payload(found.witness),
        }
        lines = [
            f"cm(n={graph.n}, m={graph.m}, k={args.k}, p={args.p}) = {found.minimum}"
            f"  [oracle; explored {found.explored}]"
        ]
        lines += _witness_lines(found.witness)
    doc = report.new_report("cm", desc, k=args.k, p=args.p, results=[entry])
    return _emit(doc, lines, args, t0)


def cmd_curve(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    spec, graph, desc = _resolve_input(args.input)
    points: list[dict[str, Any]] = []
    lines: list[str] = []
    if spec is not None:
        curve = formulas.curve(spec, args.k)
        lines.append(f"curve({_describe(spec)}, k={args.k}):")
        for p, q in curve.pairs:
            _, tag = formulas.cm_tagged(spec, args.k, p)
            provenance = EXTENSION_P0 if tag == EXTENSION_P0 else report.PROVENANCE_CLOSED_FORM
            wit = constructions.mixed_witness(spec, args.k, p)
            points.append(
                {
                    "p": p,
                    "q": q,
                    "provenance": provenance,
                    "case": tag,
                    "witness": report.witness_payload(wit),
                }
            )
            lines.append(f"  p={p}  q={q}  [{provenance}]")
    else:
        limit_n = _limit_n(args)
        top = searches.min_vertex_disconnecting(graph, args.k, limit_n=limit_n).minimum
        lines.append(f"curve(n={graph.n}, m={graph.m}, k={args.k}):")
        for p in range(top + 1):
            found = searches.min_mixed(graph, args.k, p, limit_n=limit_n, limit_e=args.limit_e)
            points.append(
                {
                    "p": p,
                    "q": found.minimum,
                    "provenance": report.PROVENANCE_ORACLE,
                    "explored": found.explored,
                    "witness": report.witness_payload(found.witness),
                }
            )
            lines.append(f"  p={p}  q={found.minimum}  [oracle]")
    pairs = [[point["p"], point["q"]] for point in points]
    doc = report.new_report("curve", desc, k=args.k, pairs=pairs, points=points)
    return _emit(doc, lines, args, t0)


def cmd_oracle(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    _, graph, desc = _resolve_input(args.input)
    limit_n = _limit_n(args)
    results: list[dict[str, Any]] = []
    lines: list[str] = []
    if args.p is None:
        vertex = searches.min_vertex_disconnecting(graph, args.k, limit_n=limit_n)
        edge = searches.min_edge_disconnecting(graph, args.k, limit_e=args.limit_e)
        for name, found in (("min_vertex", vertex), ("min_edge", edge)):
            results.append(
                {
                    "name": name,
                    "value": found.minimum,
                    "provenance": report.PROVENANCE_ORACLE,
                    "explored": found.explored,
                    "witness": report.witness_payload(found.witness),
                }
            )
            lines.append(f"{name} = {found.minimum}  [oracle; explored {found.explored}]")
    else:
        mixed = searches.min_mixed(graph, args.k, args.p, limit_n=limit_n, limit_e=args.limit_e)
        results.append(
            {
                "name": "min_mixed",
                "value": mixed.minimum,
                "provenance": report.PROVENANCE_ORACLE,
                "explored": mixed.explored,
                "witness": report.witness_payload(mixed.witness),
            }
        )
        lines.append(
            f"min_mixed(p={args.p}) = {mixed.minimum}  [oracle; explored {mixed.explored}]"
        )
        lines += _witness_lines(mixed.witness)
    doc = report.new_report("oracle", desc, k=args.k, p=args.p, results=results)
    return _emit(doc, lines, args, t0)


def cmd_packing(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    _, graph, desc = _resolve_input(args.input)
    packing = searches.max_disjoint_k_paths(
        graph, args.k, limit_n=_limit_n(args), exact=not args.greedy
    )
    kind = "certified maximum" if packing.certified else "greedy, not certified"
    lines = [f"packing size = {packing.size}  ({kind})"]
    lines += [f"  path: {' '.join(str(v) for v in path)}" for path in packing.paths]
    doc = report.new_report("packing", desc, k=args.k, packing=report.packing_payload(packing))
    return _emit(doc, lines, args, t0)


def _verify_vertex_instances(args: argparse.Namespace) -> list[FamilySpec]:
    specs: list[FamilySpec] = []
    lo, hi = _parse_range(args.paths, "--paths")
    specs += [Path(n) for n in range(max(1, lo), hi + 1)]
    lo, hi = _parse_range(args.cycles, "--cycles")
    specs += [Cycle(n) for n in range(max(3, lo), hi + 1)]
    lo, hi = _parse_range(args.complete, "--complete")
    specs += [Complete(n) for n in range(max(1, lo), hi + 1)]
    lo, hi = _parse_range(args.bipartite, "--bipartite")
    lo = max(1, lo)
    specs += [CompleteBipartite(a, b) for a in range(lo, hi + 1) for b in range(lo, hi + 1)]
    for item in args.trees:
        try:
            r, l = (int(part) for part in item.split(","))
        except ValueError:
            raise _UsageError(f"--trees expects R,L items, got {item!r}") from None
        specs.append(PerfectTree(r, l))
    return specs


def _verify_mixed_instances(args: argparse.Namespace) -> list[FamilySpec]:
    specs: list[FamilySpec] = []
    lo, hi = _parse_range(args.mixed_paths, "--mixed-paths")
    specs += [Path(n) for n in range(max(1, lo), hi + 1)]
    lo, hi = _parse_range(args.mixed_cycles, "--mixed-cycles")
    specs += [Cycle(n) for n in range(max(3, lo), hi + 1)]
    lo, hi = _parse_range(args.mixed_bipartite, "--mixed-bipartite")
    lo = max(1, lo)
    specs += [CompleteBipartite(a, b) for a in range(lo, hi + 1) for b in range(lo, hi + 1)]
    return specs


def _lemma_rows(seed: int, limit_n: int) -> tuple[dict[str, Any], str]:
    rng = random.Random(seed)
    graph_count = 30
    checks = 0
    for _ in range(graph_count):
        n = rng.randint(0, 10)
        density = rng.random()
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density
        ]
        g = new_graph(n, edges)
        for k in range(1, 7):
            if g.is_failure_state(k) != (not g.has_k_pair(k)):
                row = {"kind": "lemmas", "seed": seed, "graphs": graph_count,
                       "checks": checks, "status": "mismatch",
                       "detail": f"failure-state vs k-pair disagree (n={n}, k={k})"}
                return row, f"lemmas seed={seed}  MISMATCH at n={n}, k={k}"
            checks += 1
        if g.n <= 8:
            for k in (2, 3):
                packing = searches.max_disjoint_k_paths(g, k, limit_n=limit_n)
                found = searches.min_vertex_disconnecting(g, k, limit_n=limit_n)
                if found.minimum < packing.size:
                    row = {"kind": "lemmas", "seed": seed, "graphs": graph_count,
                           "checks": checks, "status": "mismatch",
                           "detail": f"packing bound violated (n={n}, k={k})"}
                    return row, f"lemmas seed={seed}  MISMATCH at n={n}, k={k}"
                checks += 1
    row = {"kind": "lemmas", "seed": seed, "graphs": graph_count, "checks": checks, "status": "ok"}
    return row, f"lemmas seed={seed}  graphs={graph_count}  checks={checks}  ok"


def cmd_verify(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    limit_n = _limit_n(args)
    kmin, kmax = _parse_range(args.k, "--k")
    rows: list[dict[str, Any]] = []
    lines: list[str] = []
    counts = {"ok": 0, "mismatch": 0, "skipped": 0}

    def record(row: dict[str, Any], line: str) -> None:
        rows.append(row)
        lines.append(line)
        counts[row["status"]] += 1

    for spec in _verify_vertex_instances(args):
        graph = build(spec)
        family, params = _family_fields(spec)
        for k in range(kmin, kmax + 1):
            formula = formulas.cv(spec, k).value
            row: dict[str, Any] = {
                "kind": "cv", "family": family, "params": params, "k": k, "formula": formula,
            }
            prefix = f"cv  {_describe(spec):<24} k={k}"
            try:
                found = searches.min_vertex_disconnecting(graph, k, limit_n=limit_n)
                packing = searches.max_disjoint_k_paths(graph, k, limit_n=limit_n)
            except SearchLimitExceeded as exc:
                row.update(status="skipped", reason=str(exc))
                record(row, f"{prefix}  formula={formula}  skipped ({exc})")
                continue
            ok = found.minimum == formula and packing.size <= formula
            row.update(
                oracle=found.minimum, packing=packing.size,
                status="ok" if ok else "mismatch",
            )
            mark = "ok" if ok else "MISMATCH"
            record(
                row,
                f"{prefix}  formula={formula}  oracle={found.minimum}"
                f"  packing={packing.size}  {mark}",
            )

    if not args.no_mixed:
        mkmin, mkmax = _parse_range(args.mixed_k, "--mixed-k")
        for spec in _verify_mixed_instances(args):
            graph = build(spec)
            family, params = _family_fields(spec)
            for k in range(mkmin, mkmax + 1):
                top = formulas.cv(spec, k).value
                for p in range(top + 1):
                    formula = formulas.cm(spec, k, p)
                    row = {
                        "kind": "cm", "family": family, "params": params,
                        "k": k, "p": p, "formula": formula,
                    }
                    prefix = f"cm  {_describe(spec):<24} k={k} p={p}"
                    try:
                        packing = searches.max_disjoint_k_paths(graph, k, limit_n=limit_n)
                        found = searches.min_mixed(
                            graph, k, p, limit_n=limit_n, limit_e=args.limit_e
                        )
                    except SearchLimitExceeded as exc:
                        row.update(status="skipped", reason=str(exc))
                        record(row, f"{prefix}  formula={formula}  skipped ({exc})")
                        continue
                    ok = found.minimum == formula and p + found.minimum >= packing.size
                    row.update(
                        oracle=found.minimum, packing=packing.size,
                        status="ok" if ok else "mismatch",
                    )
                    mark = "ok" if ok else "MISMATCH"
                    record(
                        row,
                        f"{prefix}  formula={formula}  oracle={found.minimum}  {mark}",
                    )

    if args.seed is not None:
        row, line = _lemma_rows(args.seed, limit_n)
        record(row, line)

    summary = {
        "rows": len(rows),
        "ok": counts["ok"],
        "mismatches": counts["mismatch"],
        "skipped": counts["skipped"],
    }
    lines.append(
        f"verify: {summary['rows']} checks, {summary['mismatches']} mismatches,"
        f" {summary['skipped']} skipped"
    )
    doc = report.new_report(
        "verify",
        {"kind": "sweep", "k": [kmin, kmax]},
        rows=rows,
        summary=summary,
    )
    code = _emit(doc, lines, args, t0)
    if counts["mismatch"]:
        return EXIT_MISMATCH
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kdcc", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, metavar="verb")

    def add_common(sp: argparse.ArgumentParser, *, k: bool = True, limits: bool = True) -> None:
        if k:
            sp.add_argument("--k", type=int, required=True, help="diameter threshold")
        if limits:
            sp.add_argument("--limit-n", type=int, default=None,
                            help=f"vertex-count budget for exhaustive search "
                                 f"(default {DEFAULT_VERTEX_LIMIT}; env {LIMIT_N_ENV})")
            sp.add_argument("--limit-e", type=int, default=DEFAULT_EDGE_LIMIT,
                            help=f"edge-count budget for exhaustive search (default {DEFAULT_EDGE_LIMIT})")
        sp.add_argument("--json", metavar="PATH", default=None, help="write a JSON report to PATH")

    gen = sub.add_parser("gen", help="write a family instance as an edge list")
    gen.add_argument("input", nargs="+", metavar="SPEC", help="family spec, e.g. path 7")
    gen.add_argument("--out", metavar="PATH", default=None, help="output file (default stdout)")
    gen.set_defaults(handler=cmd_gen)

    cv = sub.add_parser("cv", help="minimum vertex deletions")
    cv.add_argument("input", nargs="+", metavar="SPEC|FILE")
    add_common(cv)
    cv.set_defaults(handler=cmd_cv)

    cm = sub.add_parser("cm", help="minimum edge deletions after p vertex deletions")
    cm.add_argument("input", nargs="+", metavar="SPEC|FILE")
    cm.add_argument("--p", type=int, required=True, help="exact number of vertex deletions")
    add_common(cm)
    cm.set_defaults(handler=cmd_cm)

    curve = sub.add_parser("curve", help="full (p, q) trade-off curve")
    curve.add_argument("input", nargs="+", metavar="SPEC|FILE")
    add_common(curve)
    curve.set_defaults(handler=cmd_curve)

    orc = sub.add_parser("oracle", help="exhaustive search on a spec or file")
    orc.add_argument("input", nargs="+", metavar="SPEC|FILE")
    orc.add_argument("--p", type=int, default=None,
                     help="run the mixed search for this p (default: vertex and edge searches)")
    add_common(orc)
    orc.set_defaults(handler=cmd_oracle)

    packing = sub.add_parser("packing", help="maximum disjoint geodesic k-paths")
    packing.add_argument("input", nargs="+", metavar="SPEC|FILE")
    packing.add_argument("--greedy", action="store_true",
                         help="greedy non-certified packing (no size limit)")
    add_common(packing)
    packing.set_defaults(handler=cmd_packing)

    verify = sub.add_parser("verify", help="compare formulas against the search over ranges")
    verify.add_argument("--k", default="2:6", help="threshold range MIN:MAX (default 2:6)")
    verify.add_argument("--paths", default="1:12", help="path sizes MIN:MAX (default 1:12)")
    verify.add_argument("--cycles", default="3:12", help="cycle sizes MIN:MAX (default 3:12)")
    verify.add_argument("--complete", default="1:8", help="complete sizes MIN:MAX (default 1:8)")
    verify.add_argument("--bipartite", default="1:5",
                        help="bipartite part sizes MIN:MAX, all pairs (default 1:5)")
    verify.add_argument("--trees", nargs="*", default=["2,1", "2,2", "2,3", "3,1", "3,2"],
                        metavar="R,L", help="perfect tree instances (default 2,1 2,2 2,3 3,1 3,2)")
    verify.add_argument("--no-mixed", action="store_true", help="skip the mixed-deletion table")
    verify.add_argument("--mixed-k", default="2:5", help="threshold range for the mixed table")
    verify.add_argument("--mixed-paths", default="1:10", help="path sizes for the mixed table")
    verify.add_argument("--mixed-cycles", default="3:10", help="cycle sizes for the mixed table")
    verify.add_argument("--mixed-bipartite", default="1:4",
                        help="bipartite part sizes for the mixed table")
    verify.add_argument("--seed", type=int, default=None,
                        help="enable the randomized lemma checks with this seed")
    verify.add_argument("--limit-n", type=int, default=None,
                        help=f"vertex-count budget (default {DEFAULT_VERTEX_LIMIT}; env {LIMIT_N_ENV})")
    verify.add_argument("--limit-e", type=int, default=DEFAULT_EDGE_LIMIT,
                        help=f"edge-count budget (default {DEFAULT_EDGE_LIMIT})")
    verify.add_argument("--json", metavar="PATH", default=None, help="write a JSON report to PATH")
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help; argparse has already printed
            return int(exc.code or 0)
        return args.handler(args)
    except _UsageError as exc:
        print(f"kdcc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, UnsupportedFamilyError, ValueError) as exc:
        print(f"kdcc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchLimitExceeded as exc:
        print(f"kdcc: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
