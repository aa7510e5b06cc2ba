"""Graph-theoretic smoothness criteria and the graph-vs-geometry bridge.

`find_obstruction` searches for a homogeneous oriented cycle whose level
function is dominated by directed distances everywhere; the polytope is
Q-factorial (equivalently smooth) exactly when no such cycle exists.
`witness_hyperplane` turns a found cycle into a supporting hyperplane whose
face contains all the cycle's points, certifying non-simpliciality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import digraph as dg
from . import polytope as pt
from .digraph import Digraph, OrientedCycle
from .polytope import ClassificationReport, Hyperplane, LatticePolytope


@dataclass(frozen=True)
class SmoothnessVerdict:
    smooth: bool
    obstruction: Optional[OrientedCycle] = None
    # witness coefficients in unprojected Z^d coordinates; the hyperplane
    # <a, x> = 1 restricted to the sum-zero hyperplane supports the polytope
    witness: Optional[Hyperplane] = None


@dataclass(frozen=True)
class FullReport:
    graph: Digraph
    polytope: LatticePolytope
    geometric: ClassificationReport
    graph_full_dimensional: bool
    graph_is_fano: bool
    verdict: SmoothnessVerdict
    agreement: bool


def polytope_of(g: Digraph) -> LatticePolytope:
    """The lattice polytope of a digraph: hull of the arrow images
    projected onto Z^(d-1)."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if not g.arrows:
        raise ValueError("graph has no arrows")
    d = g.vertex_count
    pts = [pt.rho(a, d) for a in g.sorted_arrows()]
    return pt.hull(pt.project_to_sum_zero_lattice(pts))


def spans_full_dimension(g: Digraph) -> bool:
    """Graph-side dimension test: the polytope is full-dimensional in the
    sum-zero lattice iff the graph has a nonhomogeneous cycle."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    return dg.has_nonhomogeneous_cycle(g)


def is_fano_graph(g: Digraph) -> bool:
    """Graph-side Fano test: every arrow lies on a directed cycle."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    return dg.every_arrow_in_directed_cycle(g)


def _satisfies_distance_bound(c: OrientedCycle, dist) -> bool:
    m = dg.mu(c)
    vs = c.vertices
    for a in vs:
        for b in vs:
            if a == b:
                continue
            if m[a] - m[b] > dist[a][b]:
                return False
    return True


def find_obstruction(g: Digraph) -> Optional[OrientedCycle]:
    """First homogeneous oriented cycle (in increasing length, canonical
    order) satisfying the distance bound for all vertex pairs; None when
    the polytope is smooth."""
    if not is_fano_graph(g):
        raise ValueError("every arrow must lie on a directed cycle")
    dist = dg.all_pairs_distances(g)
    for c in dg.enumerate_oriented_cycles(g):
        if not dg.is_homogeneous(c):
            continue
        if _satisfies_distance_bound(c, dist):
            return c
    return None


def witness_hyperplane(g: Digraph, c: OrientedCycle) -> Hyperplane:
    """Coefficients a in Z^d with a = mu on the cycle and
    a_k = max({a_i - dist(i, k)} ∪ {0}) elsewhere; the hyperplane
    <a, x> = 1 supports the polytope and its face contains every cycle
    point.  Raises when c is not an obstruction."""
    d = g.vertex_count
    m = dg.mu(c)
    dist = dg.all_pairs_distances(g)
    a = [0] * (d + 1)  # 1-based
    for v in c.vertices:
        a[v] = m[v]
    cycle_set = set(c.vertices)
    for k in g.vertices:
        if k in cycle_set:
            continue
        best = 0
        for v in c.vertices:
            dv = dist[v][k]
            if dv != math.inf:
                best = max(best, m[v] - int(dv))
        a[k] = best
    coeffs = tuple(a[1:])
    cycle_arrows = set(c.arrows_used())
    for i, j in g.arrows:
        val = coeffs[i - 1] - coeffs[j - 1]
        if val > 1:
            raise ValueError("cycle is not an obstruction: half-space "
                             f"containment fails at arrow ({i},{j})")
        if (i, j) in cycle_arrows and val != 1:
            raise ValueError("cycle is not an obstruction: face equality "
                             f"fails at arrow ({i},{j})")
    return Hyperplane(coeffs, 1)


def project_witness(h: Hyperplane) -> Hyperplane:
    """Restrict the Z^d witness to the sum-zero chart Z^(d-1) obtained by
    dropping the last coordinate."""
    a = h.normal
    last = a[-1]
    return Hyperplane(tuple(x - last for x in a[:-1]), h.offset)


def symmetric_is_smooth(g: Digraph) -> bool:
    """Smoothness for symmetric graphs: no even cycle in the underlying
    graph."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if not g.is_symmetric():
        raise ValueError("graph is not symmetric")
    return not dg.has_even_cycle(g)


def smoothness_verdict(g: Digraph) -> SmoothnessVerdict:
    obstruction = find_obstruction(g)
    if obstruction is None:
        return SmoothnessVerdict(smooth=True)
    return SmoothnessVerdict(smooth=False, obstruction=obstruction,
                             witness=witness_hyperplane(g, obstruction))


def full_report(g: Digraph) -> FullReport:
    """Run the graph-theoretic and geometric pipelines and compare."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    p = polytope_of(g)
    geo = pt.classify(p)
    g_dim = spans_full_dimension(g)
    g_fano = is_fano_graph(g)
    d = g.vertex_count
    dim_agree = g_dim == (geo.dim == d - 1)
    fano_agree = g_fano == (geo.is_fano and geo.is_terminal
                            and geo.is_gorenstein and geo.dim == d - 1)
    if g_fano:
        verdict = smoothness_verdict(g)
        smooth_agree = (verdict.smooth == geo.is_simplicial
                        == geo.is_smooth)
    else:
        verdict = SmoothnessVerdict(smooth=False)
        smooth_agree = True
    return FullReport(
        graph=g, polytope=p, geometric=geo,
        graph_full_dimensional=g_dim, graph_is_fano=g_fano,
        verdict=verdict,
        agreement=dim_agree and fano_agree and smooth_agree)
