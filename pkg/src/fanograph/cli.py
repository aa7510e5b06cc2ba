"""Command-line front end.

Commands: classify, family, facets, sweep.  Exit codes: 0 success (any
verdict), 2 parse/spec error, 3 disconnected graph.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import criteria, families, serialize
from . import digraph as dg
from .sweep import sweep as run_sweep

EXIT_PARSE = 2
EXIT_DISCONNECTED = 3


def _load_graph(path: str) -> dg.Digraph:
    try:
        with open(path) as f:
            return dg.parse_graph_text(f.read())
    except OSError as e:
        print(f"error: cannot read {path}: {e}", file=sys.stderr)
        sys.exit(EXIT_PARSE)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


def _require_connected(g: dg.Digraph) -> None:
    if not g.is_connected():
        print("error: underlying graph is not connected", file=sys.stderr)
        sys.exit(EXIT_DISCONNECTED)


def _print_report(r, args) -> None:
    if args.json:
        print(json.dumps(serialize.full_report_to_dict(r), indent=2))
        return
    if args.quiet:
        return
    geo = r.geometric
    verdict = []
    if geo.is_smooth:
        verdict.append("smooth Fano")
    elif geo.is_fano:
        verdict.append("Fano" + (" (terminal, Gorenstein)"
                                 if geo.is_terminal and geo.is_gorenstein
                                 else ""))
        verdict.append("simplicial" if geo.is_simplicial
                       else "not simplicial")
    else:
        verdict.append("not Fano")
    print(f"{', '.join(verdict)}; dim {geo.dim}, "
          f"{geo.vertex_count} vertices, {geo.facet_count} facets")
    if not r.graph_is_fano:
        print("standing assumption violated: some arrow lies on no "
              "directed cycle")
    v = r.verdict
    if v.obstruction is not None:
        flags = "".join("f" if f else "b" for f in v.obstruction.orientations)
        print(f"obstruction cycle {v.obstruction.vertices} "
              f"(orientation {flags})")
    if v.witness is not None:
        d = r.graph.vertex_count
        coeffs = v.witness.normal
        terms = [f"{c}*x{i+1}" for i, c in enumerate(coeffs) if c]
        proj = criteria.project_witness(v.witness)
        pterms = [f"{c}*x{i+1}" for i, c in enumerate(proj.normal) if c]
        print(f"witness hyperplane (Z^{d}): {' + '.join(terms)} = 1")
        print(f"witness hyperplane (projected Z^{d-1}): "
              f"{' + '.join(pterms) if pterms else '0'} = 1")
    print(f"graph/geometry agreement: {r.agreement}")


def cmd_classify(args) -> int:
    g = _load_graph(args.path)
    _require_connected(g)
    r = criteria.full_report(g)
    _print_report(r, args)
    return 0


def cmd_family(args) -> int:
    try:
        g = families.parse_family_spec(args.spec)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    _require_connected(g)
    r = criteria.full_report(g)
    _print_report(r, args)
    if args.spec.startswith("gmpq:") and not args.json and not args.quiet:
        m, p, q = (int(x) for x in args.spec.split(":")[1].split(","))
        fam = families.g_mpq(m, p, q)
        computed = r.geometric.is_smooth
        match = "matches" if computed == fam.predicted_smooth else "DIFFERS"
        print(f"predicted smooth: {fam.predicted_smooth}; "
              f"computed: {computed} ({match})")
    return 0


def cmd_facets(args) -> int:
    g = _load_graph(args.path)
    _require_connected(g)
    p = criteria.polytope_of(g)
    geo = criteria.pt.classify(p)
    if args.json:
        out = serialize.polytope_to_dict(p)
        out["schema_version"] = serialize.SCHEMA_VERSION
        print(json.dumps(out, indent=2))
        return 0
    if args.quiet:
        return 0
    for idx, (f, inc) in enumerate(zip(p.facets, p.facet_vertex_incidence)):
        flag = "" if len(inc) == geo.dim else "  [NOT SIMPLICIAL]"
        print(f"facet {idx}: normal {f.normal}, offset {f.offset}, "
              f"vertices {inc}{flag}")
    return 0


def cmd_sweep(args) -> int:
    chunk = None
    if args.chunk:
        try:
            i, n = (int(x) for x in args.chunk.split("/"))
            if not 0 <= i < n:
                raise ValueError
        except ValueError:
            print(f"error: invalid chunk {args.chunk!r}", file=sys.stderr)
            return EXIT_PARSE
        chunk = (i, n)
    try:
        report = run_sweep(args.max_vertices, chunk=chunk, force=args.force)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    elif not args.quiet:
        print(f"graphs enumerated: {report.graphs_enumerated}")
        print(f"graphs classified: {report.graphs_classified}")
        print(f"smooth: {report.smooth_count}")
        print(f"simplicial but not smooth: "
              f"{report.simplicial_not_smooth_count}")
        print(f"non-simplicial: {report.non_simplicial_count}")
        print(f"discrepancies: {len(report.discrepancies)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fanograph",
        description="Lattice polytopes of directed graphs: classification "
                    "and smoothness criteria")
    ap.add_argument("--json", action="store_true",
                    help="machine-readable output")
    ap.add_argument("--quiet", action="store_true",
                    help="suppress human-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a graph file")
    p.add_argument("path")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("family", help="classify a named family member")
    p.add_argument("spec", help="cycle:n | symcycle:n | pdp:k | "
                                "gmpq:m,p,q | wedge:a+b | poset:file")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("facets", help="list facets of a graph's polytope")
    p.add_argument("path")
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("sweep", help="exhaustive cross-validation")
    p.add_argument("max_vertices", type=int)
    p.add_argument("--chunk", help="i/n deterministic slice")
    p.add_argument("--force", action="store_true",
                   help="allow vertex counts above the safety limit")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
