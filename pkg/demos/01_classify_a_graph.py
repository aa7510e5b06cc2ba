"""Classify the polytope of a small mixed digraph.

The graph has arrows 1->2, 2->1, 2->3, 3->1.  Its arrow images
e_i - e_j span a polygon in the sum-zero plane, which turns out to be a
smooth Fano polytope of dimension two.
"""

import fanograph as fg

g = fg.from_arrows(3, [(1, 2), (2, 1), (2, 3), (3, 1)])
print("graph:", sorted(g.arrows))

p = fg.polytope_of(g)
print("vertices (lattice coordinates):", p.vertices)
for f in p.facets:
    print("facet:", f.normal, "<= ", f.offset)

c = fg.classify(p)
print("dim:", c.dim)
print("fano:", c.is_fano, " terminal:", c.is_terminal,
      " gorenstein:", c.is_gorenstein)
print("simplicial:", c.is_simplicial, " smooth:", c.is_smooth)

# the same verdict without any geometry: no homogeneous cycle of the
# graph satisfies the distance condition, so the polytope is smooth
print("obstruction cycle:", fg.find_obstruction(g))
