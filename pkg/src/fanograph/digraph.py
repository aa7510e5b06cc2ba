"""Finite directed graphs and the graph-theoretic machinery the polytope
criteria consume: distances, strong connectivity, cycle enumeration with
orientation assignments, and the level function on homogeneous cycles.

Vertices are 1-based everywhere in the public API.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import networkx as nx

Arrow = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    vertex_count: int
    arrows: frozenset[Arrow]

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def edges(self) -> frozenset[frozenset]:
        return frozenset(frozenset(a) for a in self.arrows)

    def sorted_arrows(self) -> list[Arrow]:
        return sorted(self.arrows)

    def is_symmetric(self) -> bool:
        return all((j, i) in self.arrows for i, j in self.arrows)

    def underlying(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.arrows)
        return g

    def directed(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.arrows)
        return g

    def is_connected(self) -> bool:
        return nx.is_connected(self.underlying())


def from_arrows(d: int, arrows: Iterable[Arrow]) -> Digraph:
    """Build a digraph on vertices 1..d; duplicate arrows collapse."""
    if d < 1:
        raise ValueError("vertex count must be positive")
    aset = set()
    for i, j in arrows:
        if i == j:
            raise ValueError(f"loop arrow ({i},{i}) is not allowed")
        if not (1 <= i <= d and 1 <= j <= d):
            raise ValueError(f"arrow ({i},{j}) out of range 1..{d}")
        aset.add((int(i), int(j)))
    return Digraph(d, frozenset(aset))


def parse_graph_text(text: str) -> Digraph:
    """Parse the graph text format: first line d, then `i j` per arrow;
    `#` starts a comment line."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise ValueError("empty graph file")
    try:
        d = int(lines[0])
    except ValueError:
        raise ValueError(f"invalid vertex count line: {lines[0]!r}")
    arrows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"invalid arrow line: {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"invalid arrow line: {line!r}")
        arrows.append((i, j))
    return from_arrows(d, arrows)


def format_graph_text(g: Digraph) -> str:
    out = [str(g.vertex_count)]
    out += [f"{i} {j}" for i, j in g.sorted_arrows()]
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class OrientedCycle:
    """A vertex-distinct cycle plus one traversal orientation per edge.

    orientations[j] is True when step j uses the arrow
    (vertices[j], vertices[j+1]) forward, False when it uses the reverse
    arrow; indices wrap around.
    """
    vertices: tuple[int, ...]
    orientations: tuple[bool, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.orientations):
            raise ValueError("one orientation flag per edge is required")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle vertices must be distinct")
        if len(self.vertices) < 2:
            raise ValueError("a cycle has length at least two")
        if len(self.vertices) == 2 and self.orientations != (True, True):
            raise ValueError("a 2-cycle must use both opposite arrows, "
                             "traversed forward")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arrows_used(self) -> list[Arrow]:
        """The actual arrows traversed, in step order."""
        out = []
        l = self.length
        for j in range(l):
            u, w = self.vertices[j], self.vertices[(j + 1) % l]
            out.append((u, w) if self.orientations[j] else (w, u))
        return out

    @property
    def forward_count(self) -> int:
        return sum(self.orientations)

    @property
    def backward_count(self) -> int:
        return self.length - self.forward_count

    @property
    def delta_plus_size(self) -> int:
        return max(self.forward_count, self.backward_count)

    @property
    def delta_minus_size(self) -> int:
        return min(self.forward_count, self.backward_count)

    def is_directed(self) -> bool:
        return self.backward_count == 0 or self.forward_count == 0

    def check_in(self, g: Digraph) -> None:
        for a in self.arrows_used():
            if a not in g.arrows:
                raise ValueError(f"arrow {a} demanded by the cycle is absent")

    def reversed(self) -> "OrientedCycle":
        """The same oriented cycle traversed in the opposite direction."""
        if self.length == 2:
            return self
        vs = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
        l = self.length
        fl = tuple(not self.orientations[(l - 1 - k) % l] for k in range(l))
        return OrientedCycle(vs, fl)


@dataclass(frozen=True)
class MuAssignment:
    """The unique nonnegative level function on a homogeneous cycle with
    unit steps and minimum zero."""
    values: dict[int, int] = field(hash=False)

    def __getitem__(self, v: int) -> int:
        return self.values[v]


def is_homogeneous(c: OrientedCycle) -> bool:
    return c.forward_count == c.backward_count


def mu(c: OrientedCycle) -> MuAssignment:
    """Walk the cycle: forward steps drop the level by one, backward steps
    raise it; shift so the minimum is zero."""
    l = c.length
    levels = [0]
    for j in range(l):
        step = -1 if c.orientations[j] else 1
        levels.append(levels[-1] + step)
    if levels[-1] != 0:
        raise ValueError("level steps do not close up: cycle is "
                         "nonhomogeneous")
    lo = min(levels[:-1])
    return MuAssignment({v: levels[j] - lo for j, v in enumerate(c.vertices)})


def distance(g: Digraph, i: int, j: int):
    """Shortest directed path length from i to j; math.inf if unreachable."""
    if i == j:
        raise ValueError("distance between equal vertices is undefined")
    try:
        return nx.shortest_path_length(g.directed(), i, j)
    except nx.NetworkXNoPath:
        return math.inf


def all_pairs_distances(g: Digraph) -> dict[int, dict[int, float]]:
    dd = dict(nx.all_pairs_shortest_path_length(g.directed()))
    return {i: {j: dd[i].get(j, math.inf) for j in g.vertices if j != i}
            for i in g.vertices}


def every_arrow_in_directed_cycle(g: Digraph) -> bool:
    """True iff each arrow (i, j) closes into a directed cycle, i.e. i and
    j lie in the same strongly connected component."""
    comp = {}
    for k, scc in enumerate(nx.strongly_connected_components(g.directed())):
        for v in scc:
            comp[v] = k
    return all(comp[i] == comp[j] for i, j in g.arrows)


def _undirected_cycles(g: Digraph, max_length: Optional[int]):
    """Vertex sequences of simple cycles (length >= 3) of the underlying
    graph, one canonical representative each: minimum vertex first, then
    the lexicographically smaller of the two directions."""
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for e in g.edges:
        u, w = sorted(e)
        adj[u].append(w)
        adj[w].append(u)
    for v in adj:
        adj[v] = sorted(set(adj[v]))
    cap = g.vertex_count if max_length is None else min(max_length,
                                                        g.vertex_count)
    out = []

    def extend(path, seen):
        u = path[-1]
        for w in adj[u]:
            if w == path[0] and len(path) >= 3:
                if path[1] < path[-1]:  # reflection dedup
                    out.append(tuple(path))
            if w in seen or w <= path[0]:
                continue
            if len(path) == cap:
                continue
            path.append(w)
            seen.add(w)
            extend(path, seen)
            path.pop()
            seen.remove(w)

    for s in g.vertices:
        extend([s], {s})
    return out


def enumerate_oriented_cycles(g: Digraph,
                              max_length: Optional[int] = None
                              ) -> Iterator[OrientedCycle]:
    """All oriented cycles of g, each once up to rotation and reflection.

    Every simple cycle of the underlying graph is expanded into all
    orientation assignments realizable by present arrows; directed 2-cycles
    are included.  Emission order is deterministic: increasing length,
    then vertex sequence, then flags.
    """
    found: list[OrientedCycle] = []
    if max_length is None or max_length >= 2:
        for e in sorted(tuple(sorted(x)) for x in g.edges):
            i, j = e
            if (i, j) in g.arrows and (j, i) in g.arrows:
                found.append(OrientedCycle((i, j), (True, True)))
    for vs in _undirected_cycles(g, max_length):
        l = len(vs)
        options = []
        ok = True
        for j in range(l):
            u, w = vs[j], vs[(j + 1) % l]
            opts = []
            if (u, w) in g.arrows:
                opts.append(True)
            if (w, u) in g.arrows:
                opts.append(False)
            if not opts:
                ok = False
                break
            options.append(opts)
        if not ok:
            continue
        found.extend(OrientedCycle(vs, flags)
                     for flags in _product(options))
    found.sort(key=lambda c: (c.length, c.vertices, c.orientations))
    yield from found


def _product(options):
    import itertools
    return itertools.product(*options)


def has_nonhomogeneous_cycle(g: Digraph) -> bool:
    """True iff some oriented cycle has unequal forward/backward counts.

    Short-circuits: a directed 2-cycle or any odd cycle suffices.
    """
    for i, j in g.arrows:
        if (j, i) in g.arrows:
            return True
    for c in enumerate_oriented_cycles(g):
        if not is_homogeneous(c):
            return True
    return False


def has_even_cycle(g: Digraph) -> bool:
    """True iff the underlying simple graph has a cycle of even length."""
    return any(len(vs) % 2 == 0 for vs in _undirected_cycles(g, None))


def two_connected_components(g: Digraph) -> list[dict]:
    """Blocks of the underlying graph, each classified as single-edge,
    odd-cycle, or other."""
    und = g.underlying()
    blocks = []
    for comp in nx.biconnected_components(und):
        sub = und.subgraph(comp)
        edges = sorted(tuple(sorted(e)) for e in sub.edges)
        verts = sorted(comp)
        if len(edges) == 1:
            kind = "single-edge"
        elif (len(edges) == len(verts) and len(verts) % 2 == 1
              and all(sub.degree(v) == 2 for v in verts)):
            kind = "odd-cycle"
        else:
            kind = "other"
        blocks.append({"vertices": verts, "edges": edges, "kind": kind})
    blocks.sort(key=lambda b: b["vertices"])
    return blocks
