"""Orthogonal product sets, their extendibility, and cardinality bounds for GUPBs."""

from .bounds import (excluded_interval, max_ges_dim, min_gupb, min_upb_bipartite, prop1_max_k,
                     prop1_max_k_scan, report, table1)
from .constructions import (computational_basis_set, flag_construction, flag_witness,
                            grouping_reduction, shifts, tensor_construction)
from .extendibility import (SearchInfeasible, check_gupb, is_extendible_bipartite,
                            is_extendible_bruteforce, is_extendible_multipartite)
from .graph import build_graph, pigeonhole_bound, pigeonhole_witness, to_dot
from .linalg import DEFAULT_TOL, Tolerance
from .product import (Bipartition, ProductVector, ProductVectorSet, SystemShape, all_bipartitions,
                      coarse_grain, load_set, dump_set, validate_set)
from .prover import BiproductWitness, NoGuarantee, prove_biproduct, validate_witness
from .random_sets import InfeasiblePattern, generate_orthogonal_set
from .seesaw import seesaw_search

__version__ = "0.1.0"
