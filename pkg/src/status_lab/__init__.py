"""Minimum status of trees and graphs versus matching and domination number."""

from .errors import *  # noqa: F401,F403
from .graph import (
    BranchProfile,
    Graph,
    StatusProfile,
    branch_profile,
    diameter,
    distances_from,
    graph_from_edges,
    is_median_vertex,
    min_status,
    parse_edgelist,
    status_profile,
    to_edgelist,
)
from .invariants import (
    DominationResult,
    MatchingResult,
    domination_number_bruteforce,
    domination_number_tree,
    matching_number_bruteforce,
    matching_number_tree,
)
from .families import (
    bound_domination_lower,
    bound_domination_upper_large,
    bound_domination_upper_small,
    bound_matching_lower,
    bound_matching_upper,
    bound_order,
    make_A,
    make_caterpillar,
    make_cycle,
    make_dumbbell,
    make_path,
    make_star,
)
from .transforms import CutEdge, caterpillar_shift, contract_to_pendant, dumbbell_shift, move_branches
from .enumeration import TreeCode, canonical_code, enumerate_connected_graphs, enumerate_trees, random_tree

__version__ = "0.1.0"
