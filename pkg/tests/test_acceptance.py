"""Acceptance gate: one test per headline criterion.

Each test prints a single ``criterion N: PASS`` line on success; a failed
assertion marks the criterion failed.  All comparisons are exact integer
equality; the only tolerance anywhere is the wall-clock bound of
criterion 1 (1.0 s).
"""

import itertools
import random
import time

import pytest

import fanograph as fg
from fanograph import families, linalg
from fanograph.sweep import cross_validate, enumerate_digraphs


@pytest.fixture(scope="module")
def fano_records():
    """cross_validate over every connected digraph on d <= 4 vertices
    with every arrow on a directed cycle."""
    out = []
    for d in (2, 3, 4):
        for g in enumerate_digraphs(d, require_fano=True):
            out.append(cross_validate(g))
    return out


@pytest.fixture(scope="module")
def all_connected_d4():
    """(graph, geometric classification) for every connected digraph on
    d <= 4 vertices, with no cycle-cover assumption."""
    out = []
    for d in (2, 3, 4):
        for g in enumerate_digraphs(d, require_fano=False):
            out.append((g, fg.classify(fg.polytope_of(g))))
    return out


def test_criterion_01_first_example_exact_and_fast():
    start = time.perf_counter()
    g = fg.from_arrows(3, [(1, 2), (2, 1), (2, 3), (3, 1)])
    c = fg.classify(fg.polytope_of(g))
    elapsed = time.perf_counter() - start
    assert c.is_smooth and c.is_fano
    assert c.dim == 2
    assert c.vertex_count == 4
    assert elapsed < 1.0
    print(f"criterion 1: PASS — smooth Fano, dim 2, 4 vertices "
          f"({elapsed:.3f} s)")


def test_criterion_02_smoothness_equivalence_d_le_4(fano_records):
    bad = [r for r in fano_records if not r.smooth_agree]
    simplicial_not_smooth = [
        r for r in fano_records
        if r.geometric_simplicial and not r.geometric_smooth]
    assert bad == []
    assert simplicial_not_smooth == []
    print(f"criterion 2: PASS — {len(fano_records)} graphs, "
          "obstruction-free = simplicial = smooth, "
          "0 simplicial-but-not-smooth")


def test_criterion_03_terminal_gorenstein_fano_equivalence(all_connected_d4):
    checked = 0
    for g, c in all_connected_d4:
        predicate = fg.every_arrow_in_directed_cycle(g)
        geometric = (c.is_fano and c.is_terminal and c.is_gorenstein
                     and c.dim == g.vertex_count - 1)
        assert predicate == geometric, g
        checked += 1
    print(f"criterion 3: PASS — cycle-cover predicate matches terminal "
          f"Gorenstein Fano of full dimension on {checked} graphs")


def test_criterion_04_dimension_equivalence(all_connected_d4):
    checked = 0
    for g, c in all_connected_d4:
        assert fg.has_nonhomogeneous_cycle(g) == \
            (c.dim == g.vertex_count - 1), g
        checked += 1
    print(f"criterion 4: PASS — nonhomogeneous cycle = full dimension "
          f"on {checked} graphs")


def test_criterion_05_directed_cycles_are_projective_simplices():
    for n in range(3, 9):
        p = fg.polytope_of(families.directed_cycle_graph(n))
        c = fg.classify(p)
        assert c.is_smooth
        assert c.vertex_count == n
        assert c.facet_count == n
        assert all(f.offset == 1 for f in p.facets)
    print("criterion 5: PASS — directed n-cycles give smooth simplices "
          "with n facets of offset 1, n = 3..8")


def test_criterion_06_symmetric_cycles():
    for n in (3, 5, 7):
        k = (n - 1) // 2
        f = fg.fingerprint(fg.polytope_of(families.symmetric_cycle_graph(n)))
        assert f.vertex_count == 2 * n == 4 * k + 2
        assert f.centrally_symmetric
        assert f == fg.fingerprint(families.del_pezzo_polytope(k))
        assert fg.classify(families.del_pezzo_polytope(k)).is_smooth
    for n in (4, 6):
        g = families.symmetric_cycle_graph(n)
        c = fg.classify(fg.polytope_of(g))
        assert not c.is_simplicial
        # the alternating 0/1 hyperplane supports a face through all n
        # arrow images with alternating sign
        a = tuple(1 if i % 2 == 0 else 0 for i in range(n))
        on_face = 0
        for arrow in g.arrows:
            val = linalg.dot(a, fg.rho(arrow, n))
            assert val <= 1
            if val == 1:
                on_face += 1
        assert on_face == n
    print("criterion 6: PASS — odd symmetric cycles match del Pezzo "
          "fingerprints; even ones are non-simplicial with a supporting "
          "alternating hyperplane")


def test_criterion_07_pseudo_del_pezzo():
    for k in (1, 2, 3):
        f = fg.fingerprint(
            fg.polytope_of(families.pseudo_del_pezzo_graph(k)))
        assert f.vertex_count == 4 * k + 1
        assert f.pseudo_symmetric
        assert not f.centrally_symmetric
        assert f == fg.fingerprint(families.pseudo_del_pezzo_polytope(k))
        assert fg.classify(families.pseudo_del_pezzo_polytope(k)).is_smooth
    print("criterion 7: PASS — pseudo del Pezzo graphs k = 1..3 match the "
          "coordinate construction, smooth and pseudo symmetric")


def test_criterion_08_three_parameter_family_sweep():
    checked = 0
    for m in (1, 2, 3):
        for p in range(0, 4):
            for q in range(0, p + 1):
                fam = families.g_mpq(m, p, q)
                g = fam.graph
                assert fg.is_fano_graph(g)
                graph_smooth = fg.find_obstruction(g) is None
                geo = fg.classify(fg.polytope_of(g))
                assert graph_smooth == geo.is_smooth == fam.predicted_smooth, \
                    (m, p, q)
                assert geo.dim == fam.predicted_dim == g.vertex_count - 1
                if q >= 1 and fam.predicted_smooth:
                    # with both chains populated the vertex count is
                    # 2m+p+q, so the smooth members have that dimension
                    # minus one
                    assert geo.dim == 2 * m + p + q - 1
                checked += 1
    print(f"criterion 8: PASS — {checked} (m,p,q) members: closed-form "
          "prediction = obstruction search = geometric smoothness, "
          "dimensions as constructed")


def test_criterion_09_wedges_match_free_sums():
    cyc4 = families.directed_cycle_graph(4)
    combos = [
        [cyc4, cyc4],
        [families.interval_graph(), families.symmetric_cycle_graph(3),
         families.pseudo_del_pezzo_graph(1)],
        [families.interval_graph(), families.interval_graph(),
         families.symmetric_cycle_graph(3)],
        [families.directed_cycle_graph(6),
         families.symmetric_cycle_graph(5)],
        [families.interval_graph(), families.directed_cycle_graph(3)],
    ]
    for graphs in combos:
        wedged = graphs[0]
        for g in graphs[1:]:
            wedged = families.wedge(wedged, 1, g, 1)
        p = fg.polytope_of(wedged)
        parts = [fg.polytope_of(g) for g in graphs]
        ref = parts[0]
        for part in parts[1:]:
            ref = fg.free_sum(ref, part)
        assert fg.fingerprint(p) == fg.fingerprint(ref)
        assert p.vertex_count == sum(q.vertex_count for q in parts)
    print(f"criterion 9: PASS — {len(combos)} wedge combinations match "
          "the free sums of their factors, vertex counts additive")


def test_criterion_10_witness_soundness_over_sweep(fano_records):
    witnesses = 0
    for r in fano_records:
        if r.graph_smooth is not False:
            continue
        g = r.graph
        d = g.vertex_count
        c = fg.find_obstruction(g)
        h = fg.witness_hyperplane(g, c)
        for arrow in g.arrows:
            assert linalg.dot(h.normal, fg.rho(arrow, d)) <= 1
        signed = [0] * d
        for flag, arrow in zip(c.orientations, c.arrows_used()):
            assert linalg.dot(h.normal, fg.rho(arrow, d)) == 1
            sign = 1 if flag else -1
            signed = [s + sign * x
                      for s, x in zip(signed, fg.rho(arrow, d))]
        assert all(x == 0 for x in signed)
        witnesses += 1
    assert witnesses > 0
    print(f"criterion 10: PASS — {witnesses} witness hyperplanes support "
          "the polytope, tight on the cycle, signed sums vanish")


def test_criterion_11_fingerprint_unimodular_invariance():
    def random_unimodular(rng, n, steps=3):
        m = linalg.identity(n)
        if n == 1:
            return [[rng.choice([-1, 1])]]
        for _ in range(steps):
            i, j = rng.sample(range(n), 2)
            c = rng.choice([-1, 1])
            for row in m:
                row[j] += c * row[i]
            if rng.random() < 0.5:
                i = rng.randrange(n)
                for row in m:
                    row[i] = -row[i]
        assert abs(linalg.bareiss_det(m)) == 1
        return m

    references = [
        fg.hull([(-1,), (1,)]),
        fg.hull([(1, 0), (0, 1), (-1, -1)]),
        fg.hull([(1, 0), (-1, 0), (0, 1), (0, -1)]),
        families.del_pezzo_polytope(1),
        families.pseudo_del_pezzo_polytope(1),
        fg.hull(list(itertools.product([-1, 1], repeat=2))),
        fg.polytope_of(families.directed_cycle_graph(4)),
        fg.polytope_of(families.g_mpq(1, 1, 0).graph),
        families.del_pezzo_polytope(2),
        families.pseudo_del_pezzo_polytope(2),
    ]
    assert len(references) == 10
    rng = random.Random(20240817)
    applied = 0
    for p in references:
        base = fg.fingerprint(p)
        n = p.ambient_dim
        for _ in range(10):
            t = random_unimodular(rng, n)
            moved = fg.hull(
                [tuple(linalg.mat_vec(t, v)) for v in p.vertices])
            assert fg.fingerprint(moved) == base
            applied += 1
    assert applied == 100
    print("criterion 11: PASS — 100 unimodular transformations over 10 "
          "reference polytopes, fingerprints unchanged")
