"""Exhaustive small-instance enumeration and graph-vs-geometry
cross-validation.

Enumeration is labeled (no isomorphism reduction) and deterministic:
vertex counts ascending, then the bitmask over the sorted arrow universe
ascending.  A sweep can be restricted to a deterministic chunk for long
runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import criteria, digraph as dg
from .digraph import Digraph

DEFAULT_VERTEX_LIMIT = 5


def _arrow_universe(d: int) -> list[tuple[int, int]]:
    return sorted((i, j) for i in range(1, d + 1)
                  for j in range(1, d + 1) if i != j)


def enumerate_digraphs(d: int, require_fano: bool = True
                       ) -> Iterator[Digraph]:
    """All labeled digraphs on d vertices with connected underlying graph;
    with require_fano, only those with every arrow on a directed cycle."""
    universe = _arrow_universe(d)
    n = len(universe)
    for mask in range(1 << n):
        arrows = frozenset(universe[k] for k in range(n) if mask >> k & 1)
        if not arrows:
            continue
        g = Digraph(d, arrows)
        if not g.is_connected():
            continue
        if require_fano and not dg.every_arrow_in_directed_cycle(g):
            continue
        yield g


def enumerate_fano_digraphs(max_vertices: int,
                            force: bool = False) -> Iterator[Digraph]:
    """Stream of all connected labeled digraphs on d <= max_vertices with
    every arrow on a directed cycle."""
    if max_vertices > DEFAULT_VERTEX_LIMIT and not force:
        raise ValueError(
            f"max_vertices {max_vertices} exceeds the configured limit "
            f"{DEFAULT_VERTEX_LIMIT}; pass force=True to override")
    for d in range(2, max_vertices + 1):
        yield from enumerate_digraphs(d, require_fano=True)


@dataclass(frozen=True)
class AgreementRecord:
    graph: Digraph
    dim_agree: bool
    fano_agree: bool
    smooth_agree: bool
    graph_smooth: Optional[bool]
    geometric_simplicial: bool
    geometric_smooth: bool

    @property
    def agrees(self) -> bool:
        return self.dim_agree and self.fano_agree and self.smooth_agree


def cross_validate(g: Digraph) -> AgreementRecord:
    """Compare the graph-theoretic predicates against the geometric
    kernel on one graph; mismatches are recorded, not raised."""
    p = criteria.polytope_of(g)
    geo = criteria.pt.classify(p)
    d = g.vertex_count

    g_dim = criteria.spans_full_dimension(g)
    dim_agree = g_dim == (geo.dim == d - 1)

    g_fano = criteria.is_fano_graph(g)
    geo_fano = (geo.is_fano and geo.is_terminal and geo.is_gorenstein
                and geo.dim == d - 1)
    fano_agree = g_fano == geo_fano

    graph_smooth = None
    smooth_agree = True
    if g_fano:
        graph_smooth = criteria.find_obstruction(g) is None
        smooth_agree = (graph_smooth == geo.is_simplicial
                        and geo.is_simplicial == geo.is_smooth)
    return AgreementRecord(
        graph=g, dim_agree=dim_agree, fano_agree=fano_agree,
        smooth_agree=smooth_agree, graph_smooth=graph_smooth,
        geometric_simplicial=geo.is_simplicial,
        geometric_smooth=geo.is_smooth)


@dataclass
class SweepReport:
    max_vertices: int
    chunk: Optional[tuple[int, int]]
    graphs_enumerated: int = 0
    graphs_classified: int = 0
    smooth_count: int = 0
    simplicial_not_smooth_count: int = 0
    non_simplicial_count: int = 0
    discrepancies: list[AgreementRecord] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return (not self.discrepancies
                and self.simplicial_not_smooth_count == 0)

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "max_vertices": self.max_vertices,
            "chunk": list(self.chunk) if self.chunk else None,
            "graphs_enumerated": self.graphs_enumerated,
            "graphs_classified": self.graphs_classified,
            "smooth": self.smooth_count,
            "simplicial_not_smooth": self.simplicial_not_smooth_count,
            "non_simplicial": self.non_simplicial_count,
            "discrepancies": [
                {"vertex_count": r.graph.vertex_count,
                 "arrows": [list(a) for a in r.graph.sorted_arrows()],
                 "dim_agree": r.dim_agree,
                 "fano_agree": r.fano_agree,
                 "smooth_agree": r.smooth_agree}
                for r in self.discrepancies],
        }


def sweep(max_vertices: int, chunk: Optional[tuple[int, int]] = None,
          force: bool = False) -> SweepReport:
    """Fold cross_validate over the enumeration.

    chunk=(i, n) keeps only graphs whose enumeration index is congruent
    to i modulo n, giving deterministic resumable slices.
    """
    report = SweepReport(max_vertices=max_vertices, chunk=chunk)
    for idx, g in enumerate(enumerate_fano_digraphs(max_vertices,
                                                    force=force)):
        report.graphs_enumerated += 1
        if chunk is not None and idx % chunk[1] != chunk[0]:
            continue
        rec = cross_validate(g)
        report.graphs_classified += 1
        if rec.geometric_smooth:
            report.smooth_count += 1
        elif rec.geometric_simplicial:
            report.simplicial_not_smooth_count += 1
        else:
            report.non_simplicial_count += 1
        if not rec.agrees:
            report.discrepancies.append(rec)
    return report
