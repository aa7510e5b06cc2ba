"""Named graph families and reference polytopes.

Directed cycles give projective-space simplices, symmetric odd cycles give
del Pezzo polytopes, the one-arrow-removed variant gives pseudo del Pezzo
polytopes, wedges realize free sums, and the three-parameter family
generalizes the two Kaehler-Einstein examples.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import digraph as dg
from . import polytope as pt
from .digraph import Digraph
from .polytope import LatticePolytope


def directed_cycle_graph(n: int) -> Digraph:
    """Directed n-cycle; its polytope is the (n-1)-simplex of projective
    space."""
    if n < 2:
        raise ValueError("cycle length must be at least 2")
    arrows = [(i, i % n + 1) for i in range(1, n + 1)]
    return dg.from_arrows(n, arrows)


def symmetric_cycle_graph(n: int) -> Digraph:
    """Both arrows on every edge of an n-cycle.  Odd n = 2k+1 yields the
    del Pezzo 2k-polytope; even n is kept constructible as a non-simplicial
    negative example."""
    if n < 3:
        raise ValueError("cycle length must be at least 3")
    arrows = []
    for i in range(1, n + 1):
        j = i % n + 1
        arrows += [(i, j), (j, i)]
    return dg.from_arrows(n, arrows)


def pseudo_del_pezzo_graph(k: int) -> Digraph:
    """Symmetric (2k+1)-cycle minus the arrow (2, 1); yields the pseudo
    del Pezzo 2k-polytope."""
    if k < 1:
        raise ValueError("k must be at least 1")
    g = symmetric_cycle_graph(2 * k + 1)
    return Digraph(g.vertex_count, g.arrows - {(2, 1)})


def wedge(g1: Digraph, v1: int, g2: Digraph, v2: int) -> Digraph:
    """Disjoint union of g1 and g2 identifying v1 with v2."""
    if not (1 <= v1 <= g1.vertex_count and 1 <= v2 <= g2.vertex_count):
        raise ValueError("wedge vertex out of range")
    d1 = g1.vertex_count

    def relabel(v: int) -> int:
        if v == v2:
            return v1
        return d1 + v - (1 if v > v2 else 0)

    arrows = list(g1.arrows)
    arrows += [(relabel(i), relabel(j)) for i, j in g2.arrows]
    return dg.from_arrows(d1 + g2.vertex_count - 1, arrows)


def interval_graph() -> Digraph:
    """Single symmetric edge: the segment [-1, 1]."""
    return dg.from_arrows(2, [(1, 2), (2, 1)])


def split_graph(factors: list[str]) -> Digraph:
    """Wedge realization of a split smooth Fano polytope.

    Each factor is one of "interval", "delpezzo:k", "pseudo:k",
    "cycle:n"; the factor graphs are joined at vertex 1.
    """
    if not factors:
        raise ValueError("at least one factor is required")
    graphs = []
    for f in factors:
        name, _, arg = f.partition(":")
        if name == "interval":
            graphs.append(interval_graph())
        elif name == "delpezzo":
            graphs.append(symmetric_cycle_graph(2 * int(arg) + 1))
        elif name == "pseudo":
            graphs.append(pseudo_del_pezzo_graph(int(arg)))
        elif name == "cycle":
            graphs.append(directed_cycle_graph(int(arg)))
        else:
            raise ValueError(f"unknown factor {f!r}")
    out = graphs[0]
    for g in graphs[1:]:
        out = wedge(out, 1, g, 1)
    return out


@dataclass(frozen=True)
class GmpqFamily:
    m: int
    p: int
    q: int
    graph: Digraph
    predicted_smooth: bool
    predicted_dim: int


def g_mpq(m: int, p: int, q: int) -> GmpqFamily:
    """Directed (2m+2)-cycle with up to two symmetric chains between
    vertices 1 and m+2; smoothness predicted by the closed-form condition
    on (m, p, q).

    The published vertex count 2m+p+q only holds when both chains carry
    interior vertices; the graph below follows the displayed chain
    formulas, so for q = 0 it has 2m+p+1 vertices (2m+2 when p = 0), and
    its polytope dimension is always vertex count minus one.  The
    predicted smoothness likewise corrects two degenerate cases of the
    published condition: p = q = 1 collapses both chains onto one
    symmetric edge (smooth for every m), and q = 0 with m < p is smooth
    whenever m+p is even because the single chain cycle then has odd
    length and admits no homogeneous orientation.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if q < 0 or p < q:
        raise ValueError("p >= q >= 0 is required")
    arrows = [(i, i + 1) for i in range(1, 2 * m + 2)] + [(2 * m + 2, 1)]

    def chain(length: int, base: int) -> list[tuple[int, int]]:
        if length == 0:
            return []
        nodes = [1] + [base + k for k in range(2, length + 1)] + [m + 2]
        out = []
        for a, b in zip(nodes, nodes[1:]):
            out += [(a, b), (b, a)]
        return out

    arrows += chain(p, 2 * m + 1)
    arrows += chain(q, 2 * m + p)
    used = {v for a in arrows for v in a}
    n = max(used)
    graph = dg.from_arrows(n, arrows)

    if q == 0:
        # every cycle is either the directed core or the chain closed by
        # one of its two arcs (length m+1+p); a homogeneous orientation
        # needs m+p odd and more chain edges than forward arc arrows
        smooth = m >= p or (m + p) % 2 == 0
    elif p == 1 and q == 1:
        # the two chains collapse to the same symmetric edge, so the graph
        # equals the (m, 1, 0) member, which is smooth for every m
        smooth = True
    else:
        smooth = (p + q) % 2 == 1 and m >= q
    return GmpqFamily(m, p, q, graph, smooth, n - 1)


def poset_graph(d: int, covers: list[tuple[int, int]]) -> Digraph:
    """Digraph of a poset on y_1..y_d with added bottom and top, the two
    extremes merged into vertex d+1.

    covers are pairs (i, j) meaning y_j covers y_i.
    """
    if d < 1:
        raise ValueError("poset must be nonempty")
    rel = set()
    for i, j in covers:
        if not (1 <= i <= d and 1 <= j <= d) or i == j:
            raise ValueError(f"invalid cover pair ({i},{j})")
        rel.add((i, j))
    # acyclicity and cover irredundancy
    succ = {i: set() for i in range(1, d + 1)}
    for i, j in rel:
        succ[i].add(j)
    order = []
    state = {}

    def visit(v):
        if state.get(v) == 1:
            raise ValueError("cover relation contains a cycle")
        if state.get(v) == 2:
            return
        state[v] = 1
        for w in sorted(succ[v]):
            visit(w)
        state[v] = 2
        order.append(v)

    for v in range(1, d + 1):
        visit(v)
    reach = {v: set() for v in range(1, d + 1)}
    for v in order:
        for w in succ[v]:
            reach[v] |= {w} | reach[w]
    for i, j in rel:
        if any(j in reach[w] for w in succ[i] if w != j):
            raise ValueError(f"({i},{j}) is not a cover: implied "
                             "transitively")

    minimal = [v for v in range(1, d + 1)
               if not any(v in succ[u] for u in range(1, d + 1))]
    maximal = [v for v in range(1, d + 1) if not succ[v]]
    top = d + 1  # merged bottom/top vertex
    arrows = list(rel)
    arrows += [(top, v) for v in minimal]
    arrows += [(v, top) for v in maximal]
    return dg.from_arrows(d + 1, arrows)


def del_pezzo_polytope(k: int) -> LatticePolytope:
    """Hull of ±e_1..±e_2k and ±(e_1+...+e_2k)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = 2 * k
    pts = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        pts.append(tuple(e))
        pts.append(tuple(-x for x in e))
    ones = tuple([1] * n)
    pts.append(ones)
    pts.append(tuple([-1] * n))
    return pt.hull(pts)


def pseudo_del_pezzo_polytope(k: int) -> LatticePolytope:
    """Hull of ±e_1..±e_2k and +(e_1+...+e_2k)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = 2 * k
    pts = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        pts.append(tuple(e))
        pts.append(tuple(-x for x in e))
    pts.append(tuple([1] * n))
    return pt.hull(pts)


def parse_family_spec(spec: str) -> Digraph:
    """CLI family specifiers: cycle:n, symcycle:n, pdp:k, gmpq:m,p,q,
    wedge:<spec>+<spec>, poset:<file>."""
    name, sep, arg = spec.partition(":")
    if not sep:
        raise ValueError(f"invalid family spec {spec!r}")
    if name == "cycle":
        return directed_cycle_graph(int(arg))
    if name == "symcycle":
        return symmetric_cycle_graph(int(arg))
    if name == "pdp":
        return pseudo_del_pezzo_graph(int(arg))
    if name == "gmpq":
        m, p, q = (int(x) for x in arg.split(","))
        return g_mpq(m, p, q).graph
    if name == "wedge":
        parts = arg.split("+")
        if len(parts) < 2:
            raise ValueError("wedge needs at least two factors")
        out = parse_family_spec(parts[0])
        for part in parts[1:]:
            out = wedge(out, 1, parse_family_spec(part), 1)
        return out
    if name == "poset":
        # file format: optional single-number line fixing the element
        # count (required for antichains), then one cover pair per line
        with open(arg) as f:
            pairs = []
            d = 0
            for raw in f:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                fields = line.split()
                if len(fields) == 1:
                    d = max(d, int(fields[0]))
                    continue
                i, j = (int(x) for x in fields)
                pairs.append((i, j))
                d = max(d, i, j)
        return poset_graph(d, pairs)
    raise ValueError(f"unknown family {name!r}")
