"""Tour of the named graph families and their polytopes.

Directed cycles give projective-space simplices; symmetric odd cycles
give del Pezzo polytopes; wedging graphs at a vertex takes free sums of
their polytopes; the three-parameter family interpolates between them.
"""

import fanograph as fg
from fanograph import families

print("directed 6-cycle:", end=" ")
p = fg.polytope_of(families.directed_cycle_graph(6))
print(f"dim {p.dim}, {p.vertex_count} vertices, {p.facet_count} facets "
      "(the projective 5-space simplex)")

print("symmetric 5-cycle:", end=" ")
f = fg.fingerprint(fg.polytope_of(families.symmetric_cycle_graph(5)))
print(f"dim {f.dim}, {f.vertex_count} vertices, centrally symmetric: "
      f"{f.centrally_symmetric}")
print("  same fingerprint as the coordinate del Pezzo 4-polytope:",
      f == fg.fingerprint(families.del_pezzo_polytope(2)))

print("pseudo del Pezzo graph k=1:", end=" ")
f = fg.fingerprint(fg.polytope_of(families.pseudo_del_pezzo_graph(1)))
print(f"{f.vertex_count} vertices, pseudo symmetric: {f.pseudo_symmetric}")

print("wedge of two directed 4-cycles:", end=" ")
w = families.wedge(families.directed_cycle_graph(4), 1,
                   families.directed_cycle_graph(4), 1)
pw = fg.polytope_of(w)
c4 = fg.polytope_of(families.directed_cycle_graph(4))
print(f"{pw.vertex_count} vertices; equals the free sum of two "
      "3-simplices:",
      fg.fingerprint(pw) == fg.fingerprint(fg.free_sum(c4, c4)))

print("three-parameter family (m,p,q):")
for mpq in [(1, 1, 0), (1, 2, 1), (1, 2, 0), (1, 3, 0)]:
    fam = families.g_mpq(*mpq)
    smooth = fg.find_obstruction(fam.graph) is None
    print(f"  {mpq}: predicted smooth {fam.predicted_smooth}, "
          f"obstruction search says {smooth}, dim {fam.predicted_dim}")
