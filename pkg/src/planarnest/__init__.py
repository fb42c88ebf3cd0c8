"""Nested 3-clique hierarchies and bubble trees of maximal planar graphs."""
from .bubbles import (
    Bubble,
    BubbleTree,
    all_bubbles,
    bubble_from_clique,
    build_bubble_tree,
    decompose,
    is_bubble,
    maximal_bubble,
    shared_clique,
)
from .graph import (
    GraphError,
    InvalidCliqueError,
    NotMaximalPlanarError,
    ParseError,
    PlanarGraph,
    SelfLoopError,
    ValidationReport,
    components_after_removal,
    enumerate_3cliques,
    format_edge_list,
    parse_edge_list,
    planarity_test,
    validate_maximal_planar,
)
from .hierarchy import (
    CliqueOrientation,
    HierarchyForest,
    InvariantViolation,
    TieBreakPolicy,
    build_forest,
    closure,
    leq,
    maximal_elements,
    nested_communities,
    orient_clique,
)

__version__ = "0.1.0"
