"""Baxter permutations, their dihedral symmetries, generating trees and exact counts."""
from ._kernels import BACKEND
from .enumeration import (
    CountRow,
    CountTable,
    FamilySpec,
    baxter_count,
    brute_count,
    catalan,
    fpf_involution_count,
    quarter_turn_count,
    stats_table,
)
from .gentree import (
    GenTree,
    SuccessionRule,
    check_isomorphism,
    expand_rule,
    explicit_tree,
    rule_children,
)
from .insertion import (
    admissible_boundary_labels,
    admissible_largest_gaps,
    admissible_smallest_gaps,
    children_oracle,
    half_turn_children,
    insert_boundary,
    insert_largest,
    insert_smallest,
    quarter_turn_children,
    quarter_turn_parent,
    remove,
)
from .perm import (
    ContractError,
    Perm,
    PermStats,
    PermutationParseError,
    Symmetry,
    VincularPattern,
    apply_symmetry,
    format_perm,
    is_baxter,
    is_fixed,
    parse_perm,
    quarter_cycle_check,
    stats,
    vincular_occurrences,
)

__version__ = "0.1.0"
