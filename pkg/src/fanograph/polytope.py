"""Exact lattice polytope kernel.

V-representation (integer vertices) and H-representation (primitive integer
facet normals with integer offsets) are both computed and kept consistent.
Facet enumeration brute-forces supporting hyperplanes through all
dim-subsets of the generating points, which is exact and fast enough at
desk scale (tens of points, dimension around ten).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import linalg
from .linalg import Vec, dot, vec_neg, vec_sub


@dataclass(frozen=True)
class Hyperplane:
    """Supporting hyperplane {x : <normal, x> = offset}; normal is primitive
    and outer (the polytope satisfies <normal, x> <= offset)."""
    normal: Vec
    offset: int

    def evaluate(self, x) -> int:
        return dot(self.normal, x)


@dataclass(frozen=True)
class LatticePolytope:
    ambient_dim: int
    dim: int
    full_dimensional: bool
    vertices: tuple[Vec, ...]            # ambient coordinates, sorted
    facets: tuple[Hyperplane, ...]       # in lattice coordinates (see below)
    facet_vertex_incidence: tuple[tuple[int, ...], ...]
    # lattice coordinates of the vertices: equal to ambient coordinates when
    # full-dimensional, otherwise coordinates in a lattice basis of the
    # affine hull (same vertex order as `vertices`)
    lattice_vertices: tuple[Vec, ...]
    # lattice coordinates of the ambient origin, when it lies in the
    # affine hull; None otherwise
    origin: Optional[Vec]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def facet_count(self) -> int:
        return len(self.facets)


@dataclass(frozen=True)
class ClassificationReport:
    dim: int
    full_dimensional: bool
    is_fano: bool
    is_terminal: bool
    is_gorenstein: bool
    is_simplicial: bool
    is_smooth: bool
    vertex_count: int
    facet_count: int
    boundary_lattice_point_count: int
    non_simplicial_facet_witness: Optional[int] = None


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    vertex_count: int
    facet_count: int
    boundary_lattice_point_count: int
    normalized_volume: int
    centrally_symmetric: bool
    pseudo_symmetric: bool


def rho(arrow: tuple[int, int], d: int) -> Vec:
    """Image e_i - e_j in Z^d of an arrow (i, j), 1-based."""
    i, j = arrow
    if not (1 <= i <= d and 1 <= j <= d) or i == j:
        raise ValueError(f"invalid arrow {arrow} for {d} vertices")
    v = [0] * d
    v[i - 1] = 1
    v[j - 1] = -1
    return tuple(v)


def project_to_sum_zero_lattice(points: Sequence[Vec]) -> list[Vec]:
    """Drop the last coordinate of points lying in the sum-zero hyperplane.

    This is a lattice isomorphism from Z^d ∩ {Σ x_i = 0} onto Z^(d-1).
    """
    out = []
    for p in points:
        if sum(p) != 0:
            raise ValueError(f"point {p} has nonzero coordinate sum")
        out.append(tuple(p[:-1]))
    return out


def _enumerate_facets(points: list[Vec]):
    """Facets of the full-dimensional hull of `points` in Z^n, n >= 1.

    Returns list of (normal, offset) with primitive outer normals.
    """
    n = len(points[0])
    if n == 1:
        vals = [p[0] for p in points]
        return [((1,), max(vals)), ((-1,), -min(vals))]

    pts_arr = np.array(points, dtype=np.int64)
    facets: dict[tuple[Vec, int], int] = {}
    facet_masks: list[int] = []

    for combo in itertools.combinations(range(len(points)), n):
        mask = 0
        for i in combo:
            mask |= 1 << i
        # skip subsets already known to lie inside a found facet
        if any((mask & ~fm) == 0 for fm in facet_masks):
            continue
        hp = linalg.hyperplane_through([points[i] for i in combo])
        if hp is None:
            continue
        a, b = hp
        vals = pts_arr @ np.array(a, dtype=np.int64) - b
        mx = int(vals.max())
        mn = int(vals.min())
        if mx > 0 and mn < 0:
            continue
        if mx > 0:
            a, b = vec_neg(a), -b
            vals = -vals
        key = (a, b)
        if key in facets:
            continue
        facets[key] = 1
        fmask = 0
        for i in np.nonzero(vals == 0)[0]:
            fmask |= 1 << int(i)
        facet_masks.append(fmask)
    return list(facets.keys())


def hull(points: Sequence[Vec]) -> LatticePolytope:
    """Exact convex hull of integer points.

    Non-full-dimensional hulls are handled by mapping the affine hull's
    induced lattice onto Z^r via an integer basis and recursing.
    """
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    if not pts:
        raise ValueError("hull of empty point set")
    n = len(pts[0])
    p0 = pts[0]
    diffs = [list(vec_sub(p, p0)) for p in pts[1:]]
    r = linalg.rank_int(diffs) if diffs else 0

    if r == 0:
        origin = () if all(x == 0 for x in p0) else None
        return LatticePolytope(
            ambient_dim=n, dim=0, full_dimensional=(n == 0),
            vertices=(p0,), facets=(), facet_vertex_incidence=(),
            lattice_vertices=((),), origin=origin)

    if r < n:
        basis = linalg.saturated_row_space(diffs)
        bt = linalg.transpose([list(b) for b in basis])  # n x r
        work_pts = []
        for p in pts:
            c = linalg.solve_integer(bt, list(vec_sub(p, p0)))
            assert c is not None, "saturated basis must give integer coords"
            work_pts.append(c)
        inner = hull(work_pts)
        # map inner's vertex order back to ambient coordinates
        amb_vertices = []
        for w in inner.vertices:
            amb = tuple(p0[i] + sum(b[i] * c for b, c in zip(basis, w))
                        for i in range(n))
            amb_vertices.append(amb)
        origin = linalg.solve_integer(bt, [-x for x in p0])
        return LatticePolytope(
            ambient_dim=n, dim=inner.dim, full_dimensional=False,
            vertices=tuple(amb_vertices), facets=inner.facets,
            facet_vertex_incidence=inner.facet_vertex_incidence,
            lattice_vertices=inner.vertices,
            origin=origin)

    raw_facets = _enumerate_facets(pts)
    # vertices: points whose tight facet normals span R^n
    tight_normals = {p: [] for p in pts}
    for a, b in raw_facets:
        for p in pts:
            if dot(a, p) == b:
                tight_normals[p].append(list(a))
    vertices = [p for p in pts
                if len(tight_normals[p]) >= n
                and linalg.rank_int(tight_normals[p]) == n]
    vertices.sort()
    facets = sorted(raw_facets)
    incidence = tuple(
        tuple(i for i, v in enumerate(vertices) if dot(a, v) == b)
        for a, b in facets)
    return LatticePolytope(
        ambient_dim=n, dim=n, full_dimensional=True,
        vertices=tuple(vertices),
        facets=tuple(Hyperplane(a, b) for a, b in facets),
        facet_vertex_incidence=incidence,
        lattice_vertices=tuple(vertices),
        origin=tuple([0] * n))


def _centered(p: LatticePolytope):
    """Lattice vertices and facets translated so the ambient origin maps
    to 0; requires the origin to lie in the affine hull."""
    c0 = p.origin
    if c0 is None:
        raise ValueError("origin is not in the affine hull")
    verts = [vec_sub(v, c0) for v in p.lattice_vertices]
    facets = [Hyperplane(f.normal, f.offset - dot(f.normal, c0))
              for f in p.facets]
    return verts, facets


def lattice_points(p: LatticePolytope) -> list[Vec]:
    """All integer points of the polytope, in ambient coordinates."""
    work = _lattice_points_work(p.lattice_vertices, p.facets, p.dim)
    if p.full_dimensional:
        return work
    # map back through the affine-hull chart
    if not work:
        return []
    # reconstruct chart from two representations: solve for each point
    # using vertices as anchors (lattice_vertices[i] <-> vertices[i])
    out = []
    amb = p.vertices
    lat = p.lattice_vertices
    if p.dim == 0:
        return [amb[0]]
    # affine map: x_amb = A * x_lat + t, determined by dim+1 affinely
    # independent vertex pairs; solve coordinate-wise
    rows = [list(l) + [1] for l in lat]
    n = p.ambient_dim
    cols = []
    for i in range(n):
        b = [a[i] for a in amb]
        sol = linalg.solve_rational(rows, b)
        assert sol is not None
        cols.append(sol)
    for w in work:
        pt = tuple(int(sum(c[j] * w[j] for j in range(p.dim)) + c[p.dim])
                   for c in cols)
        out.append(pt)
    return out


def _lattice_points_work(verts, facets, dim) -> list[Vec]:
    if dim == 0:
        return [verts[0]]
    los = [min(v[i] for v in verts) for i in range(dim)]
    his = [max(v[i] for v in verts) for i in range(dim)]
    ranges = [np.arange(lo, hi + 1, dtype=np.int64)
              for lo, hi in zip(los, his)]
    grid = np.stack([g.ravel() for g in np.meshgrid(*ranges, indexing="ij")],
                    axis=-1)
    normals = np.array([f.normal for f in facets], dtype=np.int64)
    offsets = np.array([f.offset for f in facets], dtype=np.int64)
    ok = np.all(grid @ normals.T <= offsets, axis=1)
    return [tuple(int(x) for x in row) for row in grid[ok]]


def _boundary_count(verts, facets, dim) -> int:
    if dim == 0 or not facets:
        return 0
    pts = _lattice_points_work(verts, facets, dim)
    cnt = 0
    for x in pts:
        if any(dot(f.normal, x) == f.offset for f in facets):
            cnt += 1
    return cnt


def classify(p: LatticePolytope) -> ClassificationReport:
    """Geometric classification: Fano, terminal, Gorenstein, simplicial,
    smooth, plus basic counts.

    Non-full-dimensional polytopes are classified within the lattice of
    their affine hull; when the origin is not in the affine hull all Fano
    flags are False.
    """
    dim = p.dim
    witness = None
    if dim == 0:
        return ClassificationReport(
            dim=0, full_dimensional=p.full_dimensional,
            is_fano=False, is_terminal=False, is_gorenstein=False,
            is_simplicial=False, is_smooth=False,
            vertex_count=1, facet_count=0,
            boundary_lattice_point_count=0)
    if p.origin is None:
        verts = list(p.lattice_vertices)
        facets = list(p.facets)
        fano_possible = False
    else:
        verts, facets = _centered(p)
        fano_possible = True

    boundary = _boundary_count(verts, facets, dim)
    is_simplicial = True
    for idx, inc in enumerate(p.facet_vertex_incidence):
        if len(inc) != dim:
            is_simplicial = False
            witness = idx
            break

    is_fano = is_terminal = is_gorenstein = is_smooth = False
    if fano_possible and all(f.offset >= 1 for f in facets):
        pts = _lattice_points_work(verts, facets, dim)
        interior = [x for x in pts
                    if all(dot(f.normal, x) < f.offset for f in facets)]
        is_fano = interior == [tuple([0] * dim)]
        if is_fano:
            vset = set(verts)
            is_terminal = all(
                any(dot(f.normal, x) == f.offset for f in facets)
                <= (x in vset)  # boundary implies vertex
                for x in pts if x != tuple([0] * dim))
            is_gorenstein = all(f.offset == 1 for f in facets)
            if is_simplicial:
                is_smooth = all(
                    abs(linalg.bareiss_det([list(verts[i]) for i in inc])) == 1
                    for inc in p.facet_vertex_incidence)

    return ClassificationReport(
        dim=dim, full_dimensional=p.full_dimensional,
        is_fano=is_fano, is_terminal=is_terminal,
        is_gorenstein=is_gorenstein, is_simplicial=is_simplicial,
        is_smooth=is_smooth,
        vertex_count=p.vertex_count, facet_count=p.facet_count,
        boundary_lattice_point_count=boundary,
        non_simplicial_facet_witness=witness)


def normalized_volume(p: LatticePolytope) -> int:
    """dim! times the Euclidean volume, via recursive cone decomposition
    over facets from a base vertex (exact)."""
    verts, facets = (list(p.lattice_vertices), list(p.facets)) \
        if p.origin is None else _centered(p)
    return _norm_vol(verts, facets, p.facet_vertex_incidence, p.dim)


def _norm_vol(verts, facets, incidence, dim) -> int:
    if dim == 0:
        return 1
    if dim == 1:
        vals = [v[0] for v in verts]
        return max(vals) - min(vals)
    v0 = verts[0]
    total = 0
    for f, inc in zip(facets, incidence):
        h = f.offset - dot(f.normal, v0)
        if h == 0:
            continue
        to_chart, _ = linalg.hyperplane_chart(f.normal, f.offset)
        fverts = [to_chart(verts[i]) for i in inc]
        sub = hull(fverts)
        assert sub.full_dimensional and sub.dim == dim - 1
        total += h * _norm_vol(list(sub.lattice_vertices), list(sub.facets),
                               sub.facet_vertex_incidence, dim - 1)
    return total


def fingerprint(p: LatticePolytope) -> Fingerprint:
    """Unimodular-invariant evidence record; requires the origin in the
    affine hull (the interesting polytopes all contain it)."""
    verts, facets = _centered(p)
    vset = set(verts)
    centrally = all(vec_neg(v) in vset for v in verts)
    fset = set((f.normal, f.offset) for f in facets)
    pseudo = any((vec_neg(f.normal), f.offset) in fset for f in facets)
    return Fingerprint(
        dim=p.dim,
        vertex_count=p.vertex_count,
        facet_count=p.facet_count,
        boundary_lattice_point_count=_boundary_count(verts, facets, p.dim),
        normalized_volume=_norm_vol(verts, facets,
                                    p.facet_vertex_incidence, p.dim),
        centrally_symmetric=centrally,
        pseudo_symmetric=pseudo or centrally,
    )


def free_sum(p1: LatticePolytope, p2: LatticePolytope) -> LatticePolytope:
    """Hull of p1 embedded in the first coordinate block and p2 in the
    second; both must be full-dimensional with the origin interior."""
    for p in (p1, p2):
        if not p.full_dimensional:
            raise ValueError("free_sum requires full-dimensional summands")
        if any(f.offset <= 0 for f in p.facets):
            raise ValueError("free_sum requires the origin in the interior")
    d1, d2 = p1.dim, p2.dim
    pts = [v + tuple([0] * d2) for v in p1.vertices]
    pts += [tuple([0] * d1) + v for v in p2.vertices]
    return hull(pts)
