"""Assignment of comments to hex cells and boundary marking.

Territories grow frontier-first: each topic claims the cell containing its
center, then repeatedly takes the unassigned cell adjacent to its claimed
region that lies closest to the topic center. This keeps territories
connected; a global nearest-cell fallback only fires when a region is
completely walled in, and every such event is counted.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from ..errors import GridExhaustedError
from .hexgrid import AXIAL_DIRS, HexGrid, generate_hex_plane


@dataclass(frozen=True)
class CountyPlan:
    """One topic's assignment work unit, in processing order."""

    county_id: int
    period_index: int
    topic_id: int
    center: tuple
    comment_ids: tuple   # chronological


@dataclass
class Assignment:
    cell_to_comment: dict    # (q, r) -> comment id
    cell_to_county: dict     # (q, r) -> county id
    county_to_cells: dict    # county id -> [(q, r), ...] in claim order
    fallback_count: int


def _euclid(a, b) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def plan_counties(skeleton, periods, topics_per_period) -> list:
    """Processing order: periods chronologically, topics by descending size."""
    plans = []
    county_id = 0
    for period in periods:
        topics = [t for t in topics_per_period[period.index] if t.member_comment_ids]
        topics.sort(key=lambda t: (-len(t.member_comment_ids), t.id))
        for topic in topics:
            node = skeleton.node_for(period.index, topic.id)
            plans.append(CountyPlan(
                county_id=county_id,
                period_index=period.index,
                topic_id=topic.id,
                center=(node.x, node.y),
                comment_ids=tuple(topic.member_comment_ids),
            ))
            county_id += 1
    return plans


def _nearest_unassigned(grid: HexGrid, unassigned, center):
    best = None
    for qr in unassigned:
        cell = grid.cells[qr]
        key = (_euclid((cell.x, cell.y), center), qr[0], qr[1])
        if best is None or key < best[0]:
            best = (key, qr)
    return best[1] if best else None


def assign_comments(skeleton, grid: HexGrid, periods, topics_per_period,
                    mode: str = "frontier") -> Assignment:
    """Assign every comment to a distinct cell; one comment per cell.

    ``mode="frontier"`` grows connected territories; ``mode="global"`` is the
    literal nearest-unassigned-cell rule kept for comparison.
    """
    plans = plan_counties(skeleton, periods, topics_per_period)
    total = sum(len(p.comment_ids) for p in plans)
    if total > len(grid):
        raise GridExhaustedError(f"{total} comments but only {len(grid)} cells")

    unassigned = set(grid.cells)
    cell_to_comment = {}
    cell_to_county = {}
    county_to_cells = {}
    fallback_count = 0

    # Reserve every topic's seed cell up front (first come in processing
    # order) so an earlier neighbor's growth cannot claim it; this keeps the
    # first-comment-at-center rule intact for every topic.
    reserved = {}
    if mode != "global":
        for plan in plans:
            if not plan.comment_ids:
                continue
            seed = grid.axial_at_point(*plan.center)
            if seed in unassigned and seed not in reserved.values():
                reserved[plan.county_id] = seed
                unassigned.discard(seed)

    for plan in plans:
        seed_cell = reserved.pop(plan.county_id, None) if mode != "global" else None
        if seed_cell is not None:
            unassigned.add(seed_cell)
        claimed = []
        frontier: list = []

        def claim(qr):
            unassigned.discard(qr)
            claimed.append(qr)
            for nb in grid.neighbors(*qr):
                if nb in unassigned:
                    cell = grid.cells[nb]
                    heapq.heappush(frontier, (_euclid((cell.x, cell.y), plan.center),
                                              nb[0], nb[1]))

        for comment_id in plan.comment_ids:
            target = None
            if mode == "global":
                target = _nearest_unassigned(grid, unassigned, plan.center)
            elif not claimed:
                seed = grid.axial_at_point(*plan.center)
                if seed in unassigned:
                    target = seed
            else:
                while frontier:
                    _, q, r = heapq.heappop(frontier)
                    if (q, r) in unassigned:
                        target = (q, r)
                        break
            if target is None:
                target = _nearest_unassigned(grid, unassigned, plan.center)
                if mode != "global":
                    fallback_count += 1
            if target is None:
                raise GridExhaustedError("no unassigned cells left")
            claim(target)
            cell_to_comment[target] = comment_id
            cell_to_county[target] = plan.county_id
        county_to_cells[plan.county_id] = claimed

    return Assignment(cell_to_comment=cell_to_comment,
                      cell_to_county=cell_to_county,
                      county_to_cells=county_to_cells,
                      fallback_count=fallback_count)


def build_grid(skeleton, n_comments: int, retries: int = 3) -> HexGrid:
    """Grid over the skeleton bounds, densified until all comments fit."""
    area = math.pi
    grid = generate_hex_plane(skeleton, cell_area=area)
    for _ in range(retries):
        if len(grid) >= n_comments:
            return grid
        area *= (len(grid) / n_comments) * 0.9
        grid = generate_hex_plane(skeleton, cell_area=area)
    if len(grid) >= n_comments:
        return grid
    raise GridExhaustedError(
        f"grid holds {len(grid)} cells for {n_comments} comments after {retries} retries")


@dataclass(frozen=True)
class BoundaryEdge:
    a: tuple
    b: tuple
    kind: str   # "national" or "county"


def mark_boundaries(assignment: Assignment, county_to_country) -> list:
    """Edges between adjacent assigned cells of different counties.

    Different countries give national edges, different counties of the same
    country give county edges; edges against unassigned cells are omitted
    (the gap itself separates).
    """
    edges = set()
    for qr, county in assignment.cell_to_county.items():
        for dq, dr in AXIAL_DIRS:
            nb = (qr[0] + dq, qr[1] + dr)
            other = assignment.cell_to_county.get(nb)
            if other is None or other == county:
                continue
            a, b = (qr, nb) if qr <= nb else (nb, qr)
            if county_to_country[county] != county_to_country[other]:
                edges.add(BoundaryEdge(a=a, b=b, kind="national"))
            else:
                edges.add(BoundaryEdge(a=a, b=b, kind="county"))
    return sorted(edges, key=lambda e: (e.a, e.b))
