import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commentmap.errors import GridExhaustedError
from commentmap.mapgen.assign import (
    Assignment,
    assign_comments,
    build_grid,
    mark_boundaries,
)
from commentmap.mapgen.hexgrid import axial_distance, generate_hex_plane
from commentmap.mapgen.tree import SkeletonLayout, SkeletonNode
from commentmap.segmentation import TimePeriod
from commentmap.topics import Topic


def single_topic_setup(n_comments, bounds=(-10.0, -10.0, 20.0, 20.0)):
    node = SkeletonNode(period_index=0, topic_id=0, x=0.0, y=0.0,
                        radius=max(1.0, math.sqrt(n_comments)),
                        is_representative=True)
    skeleton = SkeletonLayout(nodes=(node,), bounds=bounds)
    ids = tuple(f"c{i:03d}" for i in range(n_comments))
    periods = [TimePeriod(index=0, start=0, end=100, comment_ids=ids)]
    topics = {0: [Topic(id=0, word_weights={}, top_words=(),
                        member_comment_ids=list(ids))]}
    return skeleton, periods, topics


class TestAssignComments:
    def test_single_comment_lands_on_center_cell(self):
        skeleton, periods, topics = single_topic_setup(1)
        grid = generate_hex_plane(skeleton)
        result = assign_comments(skeleton, grid, periods, topics)
        assert len(result.cell_to_comment) == 1
        (qr,) = result.cell_to_comment
        assert qr == grid.axial_at_point(0.0, 0.0)
        assert result.fallback_count == 0

    def test_seven_comments_take_nearest_cells_connected(self):
        skeleton, periods, topics = single_topic_setup(7)
        grid = generate_hex_plane(skeleton)
        result = assign_comments(skeleton, grid, periods, topics)
        taken = set(result.cell_to_comment)
        # oracle: brute-force distance sort over the whole lattice
        ranked = sorted(grid.cells,
                        key=lambda k: (math.hypot(grid.cells[k].x, grid.cells[k].y),
                                       k[0], k[1]))
        assert taken == set(ranked[:7])
        assert result.fallback_count == 0
        assert is_connected(taken)

    def test_zero_comment_topic_emits_nothing(self):
        skeleton, periods, topics = single_topic_setup(3)
        topics[0].append(Topic(id=1, word_weights={}, top_words=(),
                               member_comment_ids=[]))
        grid = generate_hex_plane(skeleton)
        result = assign_comments(skeleton, grid, periods, topics)
        assert set(result.county_to_cells) == {0}
        assert len(result.cell_to_comment) == 3

    def test_bijection_every_comment_one_cell(self, planted_small):
        from commentmap.pipeline import build_layout
        from tests.conftest import small_config

        doc = build_layout(planted_small.commentset, "S1", small_config())
        cells = doc["cells"]
        assert len(cells) == len(planted_small.commentset)
        ids = [c["comment_id"] for c in cells]
        assert len(set(ids)) == len(ids)
        coords = [(c["q"], c["r"]) for c in cells]
        assert len(set(coords)) == len(coords)

    def test_overfull_grid_rejected(self):
        skeleton, periods, topics = single_topic_setup(10_000,
                                                       bounds=(-5.0, -5.0, 10.0, 10.0))
        grid = generate_hex_plane(skeleton)
        with pytest.raises(GridExhaustedError):
            assign_comments(skeleton, grid, periods, topics)

    def test_build_grid_densifies(self):
        skeleton, _, _ = single_topic_setup(200, bounds=(-5.0, -5.0, 10.0, 10.0))
        grid = build_grid(skeleton, 200)
        assert len(grid) >= 200

    def test_global_mode_matches_distance_order(self):
        skeleton, periods, topics = single_topic_setup(12)
        grid = generate_hex_plane(skeleton)
        result = assign_comments(skeleton, grid, periods, topics, mode="global")
        ranked = sorted(grid.cells,
                        key=lambda k: (math.hypot(grid.cells[k].x, grid.cells[k].y),
                                       k[0], k[1]))
        # chronological comment order maps onto increasing distance rank
        for pos, qr in enumerate(ranked[:12]):
            assert result.cell_to_comment[qr] == f"c{pos:03d}"


def is_connected(cells):
    cells = set(cells)
    if not cells:
        return True
    seen = set()
    stack = [next(iter(sorted(cells)))]
    while stack:
        qr = stack.pop()
        if qr in seen:
            continue
        seen.add(qr)
        q, r = qr
        for dq, dr in ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)):
            nb = (q + dq, r + dr)
            if nb in cells and nb not in seen:
                stack.append(nb)
    return seen == cells


def brute_force_boundaries(cell_to_county, county_to_country):
    """Oracle: scan every unordered pair of assigned cells."""
    out = set()
    keys = sorted(cell_to_county)
    for i, a in enumerate(keys):
        for b in keys[i + 1:]:
            if axial_distance(a, b) != 1:
                continue
            ca, cb = cell_to_county[a], cell_to_county[b]
            if ca == cb:
                continue
            kind = ("national" if county_to_country[ca] != county_to_country[cb]
                    else "county")
            out.add((a, b, kind))
    return out


class TestMarkBoundaries:
    def assignment_of(self, mapping):
        return Assignment(cell_to_comment={k: f"c{i}" for i, k in enumerate(mapping)},
                          cell_to_county=dict(mapping), county_to_cells={},
                          fallback_count=0)

    def test_same_county_no_edge(self):
        a = self.assignment_of({(0, 0): 0, (1, 0): 0})
        assert mark_boundaries(a, {0: 0}) == []

    def test_national_edge(self):
        a = self.assignment_of({(0, 0): 0, (1, 0): 1})
        edges = mark_boundaries(a, {0: 0, 1: 1})
        assert len(edges) == 1
        assert edges[0].kind == "national"
        assert (edges[0].a, edges[0].b) == ((0, 0), (1, 0))

    def test_county_edge_same_country(self):
        a = self.assignment_of({(0, 0): 0, (1, 0): 1})
        edges = mark_boundaries(a, {0: 0, 1: 0})
        assert [e.kind for e in edges] == ["county"]

    def test_unassigned_neighbor_no_edge(self):
        a = self.assignment_of({(0, 0): 0, (2, 0): 1})  # not adjacent
        assert mark_boundaries(a, {0: 0, 1: 1}) == []

    @settings(max_examples=80, deadline=None)
    @given(st.dictionaries(
        st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
        st.integers(0, 5), min_size=1, max_size=40))
    def test_matches_brute_force_scan(self, mapping):
        county_to_country = {c: c % 3 for c in range(6)}
        a = self.assignment_of(mapping)
        got = {(e.a, e.b, e.kind) for e in mark_boundaries(a, county_to_country)}
        assert got == brute_force_boundaries(mapping, county_to_country)
