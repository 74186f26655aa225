"""Library and CLI for 2-distance-transitive Cayley graphs over Q_4n.

Subpackages: group arithmetic (``groups``), finite fields and designs
(``fields``), bitset graphs with graph6 I/O (``graphs``), automorphism and
transitivity machinery (``symmetry``), voltage covers and quotients
(``voltage``), the classified family constructors (``families``), the
exhaustive Cayley census (``census``), census figures (``report``) and the
command-line driver (``cli``).
"""

from .graphs import Graph, decode_graph6, encode_graph6
from .groups import (FiniteGroup, QuaternionGroup, cyclic_group, dihedral_group,
                     quaternion_group, normal_subgroups, quotient_group)
from .symmetry import (PermutationGroup, automorphism_group, canonical_form,
                       is_isomorphic, is_vertex_transitive, is_arc_transitive,
                       is_2_arc_transitive, is_s_distance_transitive)
from .voltage import (VoltageAssignment, CoverGraph, derive_cover, walk_voltage,
                      quotient_by_orbits, is_n_cover, semiregular_cyclic_quotient)
from .families import (CatalogEntry, catalog_for_order, cayley_graph,
                       complete_multipartite, complete_bipartite,
                       complete_bipartite_minus_matching, generalized_petersen,
                       incidence_pg, incidence_h11, hamming, x1_4q, kq1_2d,
                       g2pr, x2_3, x_22, x_prime_32, gamma_dq, gamma_dqr)
from .census import CensusConfig, CensusRow, run_census, write_csv

__version__ = "0.1.0"

__all__ = [
    "Graph", "decode_graph6", "encode_graph6",
    "FiniteGroup", "QuaternionGroup", "cyclic_group", "dihedral_group",
    "quaternion_group", "normal_subgroups", "quotient_group",
    "PermutationGroup", "automorphism_group", "canonical_form",
    "is_isomorphic", "is_vertex_transitive", "is_arc_transitive",
    "is_2_arc_transitive", "is_s_distance_transitive",
    "VoltageAssignment", "CoverGraph", "derive_cover", "walk_voltage",
    "quotient_by_orbits", "is_n_cover", "semiregular_cyclic_quotient",
    "CatalogEntry", "catalog_for_order", "cayley_graph",
    "complete_multipartite", "complete_bipartite",
    "complete_bipartite_minus_matching", "generalized_petersen",
    "incidence_pg", "incidence_h11", "hamming", "x1_4q", "kq1_2d",
    "g2pr", "x2_3", "x_22", "x_prime_32", "gamma_dq", "gamma_dqr",
    "CensusConfig", "CensusRow", "run_census", "write_csv",
    "__version__",
]
