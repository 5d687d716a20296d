"""Comment map construction: topic tree, hex plane, assignment, export."""

from .assign import (
    Assignment,
    BoundaryEdge,
    CountyPlan,
    assign_comments,
    build_grid,
    mark_boundaries,
    plan_counties,
)
from .hexgrid import (
    AXIAL_DIRS,
    CELL_AREA,
    HexCell,
    HexGrid,
    axial_distance,
    compute_seed_count,
    generate_hex_plane,
)
from .layout import (
    LAYOUT_VERSION,
    Country,
    MapLayout,
    Station,
    build_railway,
    export_layout,
    layout_to_bytes,
    sentiment_to_color,
)
from .tree import (
    PeriodNode,
    SkeletonLayout,
    SkeletonNode,
    TopicNode,
    TopicTree,
    bubble_tree_layout,
    build_topic_tree,
)

__all__ = [
    "AXIAL_DIRS",
    "Assignment",
    "BoundaryEdge",
    "CELL_AREA",
    "Country",
    "CountyPlan",
    "HexCell",
    "HexGrid",
    "LAYOUT_VERSION",
    "MapLayout",
    "PeriodNode",
    "SkeletonLayout",
    "SkeletonNode",
    "Station",
    "TopicNode",
    "TopicTree",
    "assign_comments",
    "axial_distance",
    "bubble_tree_layout",
    "build_grid",
    "build_railway",
    "build_topic_tree",
    "compute_seed_count",
    "export_layout",
    "generate_hex_plane",
    "layout_to_bytes",
    "mark_boundaries",
    "plan_counties",
    "sentiment_to_color",
]
