"""Topic tree construction and the disk-packing skeleton layout.

Every period contributes a chain node represented by its largest topic;
the period's remaining topics are packed tangentially around it on free
angular arcs, so no two disks ever overlap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .hexgrid import HEX_SIDE

# Clearance added around every disk during packing (half a hex side each, so
# one side of breathing room between tangent disks). Frontier growth
# quantizes each territory to whole cells and can spill a ring past the
# ideal disk; the margin keeps a big neighbor's spill from wrapping around a
# small topic's reserved seed cell, while staying thinner than a cell so
# neighboring territories still touch and draw boundaries.
PACK_MARGIN = 0.5 * HEX_SIDE


@dataclass(frozen=True)
class TopicNode:
    period_index: int
    topic_id: int
    comment_count: int

    @property
    def radius(self) -> float:
        return math.sqrt(self.comment_count)


@dataclass(frozen=True)
class PeriodNode:
    index: int
    representative: TopicNode
    children: tuple   # remaining topics, largest first


@dataclass(frozen=True)
class TopicTree:
    periods: tuple


@dataclass(frozen=True)
class SkeletonNode:
    period_index: int
    topic_id: int
    x: float
    y: float
    radius: float
    is_representative: bool


@dataclass(frozen=True)
class SkeletonLayout:
    """Disk positions plus a bounding box padded by the largest node radius."""

    nodes: tuple
    bounds: tuple   # (x0, y0, w, h)

    def node_for(self, period_index: int, topic_id: int) -> SkeletonNode:
        for node in self.nodes:
            if node.period_index == period_index and node.topic_id == topic_id:
                return node
        raise KeyError((period_index, topic_id))

    def representative(self, period_index: int) -> SkeletonNode:
        for node in self.nodes:
            if node.period_index == period_index and node.is_representative:
                return node
        raise KeyError(period_index)


def build_topic_tree(periods, topics_per_period) -> TopicTree:
    """Chronological chain of periods, each holding its topics by size.

    ``topics_per_period`` maps period index to that period's stable topics
    (must be non-empty; only topics with members contribute nodes).
    """
    period_nodes = []
    for period in periods:
        topics = [t for t in topics_per_period[period.index] if t.member_comment_ids]
        if not topics:
            raise ValueError(f"period {period.index} has no topics with members")
        nodes = [TopicNode(period_index=period.index, topic_id=t.id,
                           comment_count=len(t.member_comment_ids))
                 for t in topics]
        nodes.sort(key=lambda n: (-n.radius, n.topic_id))
        period_nodes.append(PeriodNode(index=period.index,
                                       representative=nodes[0],
                                       children=tuple(nodes[1:])))
    return TopicTree(periods=tuple(period_nodes))


def _pack_children(rep: TopicNode, children, margin: float) -> list:
    """Tangent placement of children around the representative disk.

    All geometry uses radii inflated by ``margin``. Children occupy angular
    arcs sized by the half-angle each padded disk subtends from the cluster
    center; when a ring fills up, packing continues on a larger ring.
    Placement at (d1, b1), (d2, b2) with angular gap b1+b2 guarantees a
    center distance of at least the padded radii sum.
    """
    placed = []
    if not children:
        return placed
    base = rep.radius + margin
    ring = []
    ring_start = math.pi / 2.0
    angle = ring_start
    ring_max = children[0].radius + margin
    first_half = None
    for child in children:
        pad_r = child.radius + margin
        d = base + pad_r
        half = math.asin(min(1.0, pad_r / d))
        if first_half is None:
            theta = ring_start + half
            first_half = half
        else:
            theta = angle + half
        # Does this child still fit on the current ring without biting the first?
        if ring and theta + half > ring_start + 2.0 * math.pi - first_half:
            base += 2.0 * ring_max
            ring = []
            ring_max = pad_r
            d = base + pad_r
            half = math.asin(min(1.0, pad_r / d))
            theta = ring_start + half
            first_half = half
        placed.append((child, d, theta))
        ring.append(child)
        angle = theta + half
    return placed


def bubble_tree_layout(tree: TopicTree, margin: float = PACK_MARGIN) -> SkeletonLayout:
    """Deterministic skeleton: chain clusters along +x, children on rings.

    Consecutive clusters are separated by their facing directional extents,
    so x-projections of their padded disks never overlap but the nearest
    territories sit close enough to share drawn borders.
    """
    clusters = []
    max_radius = 0.0
    for period in tree.periods:
        rep = period.representative
        packed = _pack_children(rep, period.children, margin)
        # local offsets: rep at 0, children on their rings
        offsets = [(0.0, 0.0, rep.radius)]
        offsets += [(d * math.cos(theta), d * math.sin(theta), child.radius)
                    for child, d, theta in packed]
        left = max(r + margin - x for x, _, r in offsets)
        right = max(x + r + margin for x, _, r in offsets)
        clusters.append((period, packed, left, right))
        max_radius = max(max_radius, rep.radius,
                         max((c.radius for c in period.children), default=0.0))

    nodes = []
    cx = 0.0
    prev_right = None
    for period, packed, left, right in clusters:
        if prev_right is not None:
            cx += prev_right + left
        rep = period.representative
        nodes.append(SkeletonNode(period_index=period.index, topic_id=rep.topic_id,
                                  x=cx, y=0.0, radius=rep.radius,
                                  is_representative=True))
        for child, d, theta in packed:
            nodes.append(SkeletonNode(period_index=period.index,
                                      topic_id=child.topic_id,
                                      x=cx + d * math.cos(theta),
                                      y=d * math.sin(theta),
                                      radius=child.radius,
                                      is_representative=False))
        prev_right = right

    min_x = min(n.x - n.radius for n in nodes)
    max_x = max(n.x + n.radius for n in nodes)
    min_y = min(n.y - n.radius for n in nodes)
    max_y = max(n.y + n.radius for n in nodes)
    pad = max_radius
    bounds = (min_x - pad, min_y - pad,
              (max_x - min_x) + 2 * pad, (max_y - min_y) + 2 * pad)
    return SkeletonLayout(nodes=tuple(nodes), bounds=bounds)
