"""Stable JSON-compatible dictionaries for reports, and the inverse maps
used by round-trip tests.  Key names and ordering are fixed; all
coordinates are exact integers."""

from __future__ import annotations

from .criteria import FullReport, SmoothnessVerdict, project_witness
from .digraph import Digraph, OrientedCycle
from .polytope import ClassificationReport, Hyperplane, LatticePolytope

SCHEMA_VERSION = 1


def classification_to_dict(c: ClassificationReport) -> dict:
    return {
        "dim": c.dim,
        "full_dimensional": c.full_dimensional,
        "is_fano": c.is_fano,
        "is_terminal": c.is_terminal,
        "is_gorenstein": c.is_gorenstein,
        "is_simplicial": c.is_simplicial,
        "is_smooth": c.is_smooth,
        "vertex_count": c.vertex_count,
        "facet_count": c.facet_count,
        "boundary_lattice_point_count": c.boundary_lattice_point_count,
        "non_simplicial_facet_witness": c.non_simplicial_facet_witness,
    }


def classification_from_dict(d: dict) -> ClassificationReport:
    return ClassificationReport(**d)


def polytope_to_dict(p: LatticePolytope) -> dict:
    return {
        "ambient_dim": p.ambient_dim,
        "dim": p.dim,
        "full_dimensional": p.full_dimensional,
        "vertices": [list(v) for v in p.vertices],
        "facets": [{"normal": list(f.normal), "offset": f.offset}
                   for f in p.facets],
        "facet_vertex_incidence": [list(i) for i in
                                   p.facet_vertex_incidence],
    }


def verdict_to_dict(v: SmoothnessVerdict, d: int) -> dict:
    out: dict = {"smooth": v.smooth}
    if v.obstruction is not None:
        out["obstruction"] = {
            "vertices": list(v.obstruction.vertices),
            "orientations": ["forward" if f else "backward"
                             for f in v.obstruction.orientations],
        }
    else:
        out["obstruction"] = None
    if v.witness is not None:
        proj = project_witness(v.witness)
        out["witness"] = {
            "coefficients": list(v.witness.normal),
            "offset": v.witness.offset,
            "projected_coefficients": list(proj.normal),
        }
    else:
        out["witness"] = None
    return out


def verdict_from_dict(d: dict) -> SmoothnessVerdict:
    obstruction = None
    witness = None
    if d.get("obstruction"):
        obstruction = OrientedCycle(
            tuple(d["obstruction"]["vertices"]),
            tuple(f == "forward" for f in d["obstruction"]["orientations"]))
    if d.get("witness"):
        witness = Hyperplane(tuple(d["witness"]["coefficients"]),
                             d["witness"]["offset"])
    return SmoothnessVerdict(smooth=d["smooth"], obstruction=obstruction,
                             witness=witness)


def graph_to_dict(g: Digraph) -> dict:
    return {
        "vertex_count": g.vertex_count,
        "arrows": [list(a) for a in g.sorted_arrows()],
    }


def graph_from_dict(d: dict) -> Digraph:
    return Digraph(d["vertex_count"],
                   frozenset(tuple(a) for a in d["arrows"]))


def full_report_to_dict(r: FullReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "graph": graph_to_dict(r.graph),
        "polytope": polytope_to_dict(r.polytope),
        "classification": classification_to_dict(r.geometric),
        "graph_full_dimensional": r.graph_full_dimensional,
        "graph_is_fano": r.graph_is_fano,
        "smoothness": verdict_to_dict(r.verdict, r.graph.vertex_count),
        "agreement": r.agreement,
    }
