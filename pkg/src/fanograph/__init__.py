"""Lattice polytopes of finite directed graphs.

Build the polytope spanned by the arrow images e_i - e_j of a digraph,
classify it exactly (Fano / terminal / Gorenstein / simplicial / smooth),
and decide the same questions purely graph-theoretically; the two routes
are cross-validated exhaustively on small instances.
"""

from .digraph import (Digraph, MuAssignment, OrientedCycle, distance,
                      enumerate_oriented_cycles,
                      every_arrow_in_directed_cycle, from_arrows,
                      has_even_cycle, has_nonhomogeneous_cycle,
                      is_homogeneous, mu, parse_graph_text,
                      two_connected_components)
from .polytope import (ClassificationReport, Fingerprint, Hyperplane,
                       LatticePolytope, classify, fingerprint, free_sum,
                       hull, lattice_points, normalized_volume,
                       project_to_sum_zero_lattice, rho)
from .criteria import (FullReport, SmoothnessVerdict, find_obstruction,
                       full_report, is_fano_graph, polytope_of,
                       spans_full_dimension, symmetric_is_smooth,
                       witness_hyperplane)
from .families import (del_pezzo_polytope, directed_cycle_graph, g_mpq,
                       parse_family_spec, poset_graph,
                       pseudo_del_pezzo_graph, pseudo_del_pezzo_polytope,
                       split_graph, symmetric_cycle_graph, wedge)
from .sweep import (SweepReport, cross_validate, enumerate_fano_digraphs,
                    sweep)

__version__ = "0.1.0"
