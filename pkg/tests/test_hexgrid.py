import math

import numpy as np
import pytest

from commentmap.mapgen.hexgrid import (
    AXIAL_DIRS,
    axial_distance,
    compute_seed_count,
    generate_hex_plane,
)


class TestComputeSeedCount:
    def test_ten_by_ten(self):
        assert compute_seed_count(10, 10) == 32

    def test_pi_by_one(self):
        assert compute_seed_count(math.pi, 1) == 1

    def test_zero_width_rejected(self):
        with pytest.raises(ValueError):
            compute_seed_count(0, 10)
        with pytest.raises(ValueError):
            compute_seed_count(10, -1)

    def test_round_half_up(self):
        # w*h = 2.5 * pi exactly -> 2.5 rounds half-up to 3
        assert compute_seed_count(2.5 * math.pi, 1.0) == 3


def analytic_cell_count(bounds, side):
    """Independent lattice-point count straight from the spacing geometry."""
    x0, y0, w, h = bounds
    col = math.sqrt(3.0) * side
    row = 1.5 * side
    count = 0
    r = 0
    while row / 2 + r * row <= h + 1e-9:
        y_off = col / 2 + (r / 2.0) * col  # stagger of row r
        # centers at x0 + y_off + q*col within [x0, x0+w]
        qmin = math.ceil((0 - y_off) / col - 1e-9)
        qmax = math.floor((w - y_off) / col + 1e-9)
        count += max(0, qmax - qmin + 1)
        r += 1
    return count


class TestHexGrid:
    def test_ten_by_ten_count_in_spec_window(self):
        grid = generate_hex_plane((0.0, 0.0, 10.0, 10.0))
        assert 29 <= len(grid) <= 36
        assert len(grid) == analytic_cell_count(grid.bounds, grid.side)

    def test_count_tracks_seed_formula_random_boxes(self):
        rng = np.random.default_rng(23)
        for _ in range(40):
            w = float(rng.uniform(15, 60))
            h = float(rng.uniform(15, 60))
            x0 = float(rng.uniform(-30, 30))
            y0 = float(rng.uniform(-30, 30))
            grid = generate_hex_plane((x0, y0, w, h))
            target = compute_seed_count(w, h)
            assert abs(len(grid) - target) <= 0.10 * target, (w, h, len(grid), target)

    def test_centers_inside_bounds(self):
        rng = np.random.default_rng(24)
        for _ in range(20):
            bounds = (float(rng.uniform(-5, 5)), float(rng.uniform(-5, 5)),
                      float(rng.uniform(5, 40)), float(rng.uniform(5, 40)))
            grid = generate_hex_plane(bounds)
            x0, y0, w, h = bounds
            for cell in grid.cells.values():
                assert x0 - 1e-9 <= cell.x <= x0 + w + 1e-9
                assert y0 - 1e-9 <= cell.y <= y0 + h + 1e-9

    def test_tiny_box_min_one_cell(self):
        grid = generate_hex_plane((0.0, 0.0, 0.2, 0.2))
        assert len(grid) >= 1

    def test_cell_area_is_pi(self):
        grid = generate_hex_plane((0, 0, 10, 10))
        area = 3 * math.sqrt(3) / 2 * grid.side ** 2
        assert area == pytest.approx(math.pi)

    def test_point_lookup_roundtrip(self):
        grid = generate_hex_plane((-7.0, 3.0, 25.0, 18.0))
        for (q, r), cell in grid.cells.items():
            assert grid.axial_at_point(cell.x, cell.y) == (q, r)

    def test_point_lookup_nearest_center(self):
        # the containing hexagon is the one whose center is nearest
        grid = generate_hex_plane((0.0, 0.0, 20.0, 20.0))
        rng = np.random.default_rng(25)
        centers = {k: (c.x, c.y) for k, c in grid.cells.items()}
        for _ in range(200):
            px = float(rng.uniform(2, 18))
            py = float(rng.uniform(2, 18))
            got = grid.axial_at_point(px, py)
            nearest = min(centers, key=lambda k: math.hypot(centers[k][0] - px,
                                                            centers[k][1] - py))
            if got != nearest:
                d_got = math.hypot(grid.center(*got)[0] - px, grid.center(*got)[1] - py)
                d_near = math.hypot(centers[nearest][0] - px, centers[nearest][1] - py)
                assert d_got == pytest.approx(d_near, abs=1e-9)

    def test_six_neighbors_on_interior_cell(self):
        grid = generate_hex_plane((0.0, 0.0, 20.0, 20.0))
        inner = min(grid.cells, key=lambda k: math.hypot(grid.cells[k].x - 10,
                                                         grid.cells[k].y - 10))
        assert len(list(grid.neighbors(*inner))) == 6

    def test_neighbor_distance_unity(self):
        for dq, dr in AXIAL_DIRS:
            assert axial_distance((0, 0), (dq, dr)) == 1
        assert axial_distance((0, 0), (2, -1)) == 2
