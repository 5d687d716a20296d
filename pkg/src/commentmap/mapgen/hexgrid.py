"""Pointy-top hexagonal lattice with axial coordinates.

Cells have unit-comment area pi, so a bounding box of area A holds about
A/pi cells, matching the seed-count rule used for the plane partition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

CELL_AREA = math.pi
# Regular hexagon area = (3*sqrt(3)/2) * side^2
HEX_SIDE = math.sqrt(2.0 * CELL_AREA / (3.0 * math.sqrt(3.0)))

AXIAL_DIRS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))

_EPS = 1e-9


@dataclass(frozen=True)
class HexCell:
    q: int
    r: int
    x: float
    y: float


def compute_seed_count(w: float, h: float) -> int:
    """Seed points for a w-by-h box: round-half-up of w*h/pi, at least 1."""
    if w <= 0 or h <= 0:
        raise ValueError("bounding box dimensions must be positive")
    return max(1, math.floor(w * h / math.pi + 0.5))


class HexGrid:
    """Lattice of hex cells whose centers fall inside a bounding box."""

    def __init__(self, bounds, cell_area: float = CELL_AREA):
        x0, y0, w, h = bounds
        if w <= 0 or h <= 0:
            raise ValueError("bounding box dimensions must be positive")
        self.bounds = (float(x0), float(y0), float(w), float(h))
        self.side = math.sqrt(2.0 * cell_area / (3.0 * math.sqrt(3.0)))
        self.col_spacing = math.sqrt(3.0) * self.side
        self.row_spacing = 1.5 * self.side
        self.origin = (x0 + self.col_spacing / 2.0, y0 + self.row_spacing / 2.0)
        self.cells: dict = {}
        self._build()

    def _build(self):
        x0, y0, w, h = self.bounds
        ox, oy = self.origin
        r = 0
        while oy + r * self.row_spacing <= y0 + h + _EPS:
            y = oy + r * self.row_spacing
            # x(q) = ox + col_spacing * (q + r/2) must lie within [x0, x0+w]
            qmin = math.ceil((x0 - ox) / self.col_spacing - r / 2.0 - _EPS)
            qmax = math.floor((x0 + w - ox) / self.col_spacing - r / 2.0 + _EPS)
            for q in range(qmin, qmax + 1):
                x = ox + self.col_spacing * (q + r / 2.0)
                self.cells[(q, r)] = HexCell(q=q, r=r, x=x, y=y)
            r += 1
        if not self.cells:
            # Degenerate box: guarantee at least one cell, nearest the center.
            q, r = self.axial_at_point(x0 + w / 2.0, y0 + h / 2.0)
            x, y = self.center(q, r)
            self.cells[(q, r)] = HexCell(q=q, r=r, x=x, y=y)

    def __len__(self):
        return len(self.cells)

    def __contains__(self, qr) -> bool:
        return qr in self.cells

    def center(self, q: int, r: int):
        ox, oy = self.origin
        return (ox + self.col_spacing * (q + r / 2.0), oy + self.row_spacing * r)

    def axial_at_point(self, x: float, y: float):
        """Axial coords of the hexagon containing (x, y)."""
        ox, oy = self.origin
        px = (x - ox) / self.side
        py = (y - oy) / self.side
        qf = math.sqrt(3.0) / 3.0 * px - py / 3.0
        rf = 2.0 / 3.0 * py
        return _cube_round(qf, rf)

    def cell_at_point(self, x: float, y: float) -> Optional[HexCell]:
        return self.cells.get(self.axial_at_point(x, y))

    def neighbors(self, q: int, r: int):
        for dq, dr in AXIAL_DIRS:
            key = (q + dq, r + dr)
            if key in self.cells:
                yield key


def _cube_round(qf: float, rf: float):
    sf = -qf - rf
    q, r, s = round(qf), round(rf), round(sf)
    dq, dr, ds = abs(q - qf), abs(r - rf), abs(s - sf)
    if dq > dr and dq > ds:
        q = -r - s
    elif dr > ds:
        r = -q - s
    return int(q), int(r)


def axial_distance(a, b) -> int:
    dq = a[0] - b[0]
    dr = a[1] - b[1]
    return (abs(dq) + abs(dr) + abs(dq + dr)) // 2


def generate_hex_plane(skeleton_or_bounds, cell_area: float = CELL_AREA) -> HexGrid:
    """Hex lattice covering a skeleton's (padded) bounding box.

    Accepts a SkeletonLayout or a raw ``(x0, y0, w, h)`` tuple. Cell count
    tracks ``compute_seed_count(w, h)`` to within about ten percent for
    boxes a few cells across or larger.
    """
    bounds = getattr(skeleton_or_bounds, "bounds", skeleton_or_bounds)
    return HexGrid(bounds, cell_area=cell_area)
