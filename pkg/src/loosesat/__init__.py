"""Verification and search toolkit for loose-triangle saturation in 3-uniform hypergraphs."""

from .canonical import canonical_form, canonical_labeling
from .construction import construct_gn, expected_edge_count
from .discharge import audit_summary, classify_edges, partition, run_discharge
from .errors import DomainError, ParseError, PreconditionError, SearchTimeout
from .hypergraph import Hypergraph3, find_link, is_good_pair
from .io import parse_h3, write_h3
from .kernels import BACKEND
from .lemmas import (
    check_codegree_step,
    check_good_pair_double_neighbor,
    check_jfar_bound,
    check_two_deg2,
    j_far_neighbors,
    run_all,
)
from .saturation import Verdict, is_saturated, saturate_greedy, verify_saturated
from .search import Budget, enumerate_extremal, exists_saturated, min_saturation
from .triangle import creates_triangle, find_triangle, find_triangle_bruteforce

__version__ = "0.1.0"
