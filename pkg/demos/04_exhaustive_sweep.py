"""Cross-validate graph criteria against geometry on every small graph.

For every connected digraph on up to 4 vertices whose arrows all lie on
directed cycles, the obstruction search, the simpliciality check, and
the smoothness check must give one and the same answer.
"""

from fanograph.sweep import sweep

report = sweep(4)
print("graphs enumerated: ", report.graphs_enumerated)
print("smooth:            ", report.smooth_count)
print("non-simplicial:    ", report.non_simplicial_count)
print("simplicial but not smooth (must be 0):",
      report.simplicial_not_smooth_count)
print("graph/geometry discrepancies (must be 0):",
      len(report.discrepancies))
