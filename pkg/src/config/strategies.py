"""
Named strategies and rule identifiers.
Kept as enums so reports and certificates can record which one was used.
"""

from enum import Enum

# ============================================================================
# ISOLATED FLATS CRITERION
# ============================================================================

class FlatsStrategy(Enum):
    """Available isolated-flats criteria for triangle-free graphs"""
    CAPRACE_K23 = "caprace-k23-default"  # no non-adjacent pair with >= 3 common neighbours
    HYPERBOLIC_ONLY = "hyperbolic-only"  # only certify the vacuous (square-free) case

# Default criterion (recorded in every classification report)
DEFAULT_FLATS_STRATEGY = FlatsStrategy.CAPRACE_K23

# ============================================================================
# REDUCTION RULES
# ============================================================================

class RewriteRule(Enum):
    """Moves the reduction engine can record in a certificate"""
    # same-graph shortenings
    BRANCH_CHORD = "branch-chord"
    ADJACENT_BRANCH_CHORD = "adjacent-branch-chord"
    DISJOINT_BRANCH_CHORD = "disjoint-branch-chord"
    SIBLING_PAIR_CONTACT = "sibling-pair-contact"
    SIBLING_CROSS_CONTACT = "sibling-cross-contact"
    TWO_SIDED_PATH_CONTACT = "two-sided-path-contact"
    # doubling constructions
    REROUTE_THROUGH_COPY = "reroute-through-copy"
    MIRROR_SIDE = "mirror-side"
    K5_DOUBLE = "k5-double"
    # searched doubles, used only when every construction fails
    ENDPOINT_DOUBLE = "endpoint-double"
    EXHAUSTIVE_DOUBLE = "exhaustive-double"
    # K5 handled without doubling
    K5_SPLIT = "k5-split"

SHORTEN_RULES = (
    RewriteRule.BRANCH_CHORD,
    RewriteRule.ADJACENT_BRANCH_CHORD,
    RewriteRule.DISJOINT_BRANCH_CHORD,
    RewriteRule.SIBLING_PAIR_CONTACT,
    RewriteRule.SIBLING_CROSS_CONTACT,
    RewriteRule.TWO_SIDED_PATH_CONTACT,
)

DOUBLE_RULES = (
    RewriteRule.REROUTE_THROUGH_COPY,
    RewriteRule.MIRROR_SIDE,
    RewriteRule.K5_DOUBLE,
    RewriteRule.ENDPOINT_DOUBLE,
    RewriteRule.EXHAUSTIVE_DOUBLE,
)

assert not set(SHORTEN_RULES) & set(DOUBLE_RULES), "Rule families must be disjoint"
