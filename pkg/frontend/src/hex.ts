// Pointy-top hexagon geometry shared by the map renderer.

export interface Point {
  x: number;
  y: number;
}

/** The six corners of a pointy-top hexagon with circumradius `size`. */
export function hexCorners(cx: number, cy: number, size: number): Point[] {
  const corners: Point[] = [];
  for (let i = 0; i < 6; i++) {
    const angle = (Math.PI / 180) * (60 * i + 30);
    corners.push({ x: cx + size * Math.cos(angle), y: cy + size * Math.sin(angle) });
  }
  return corners;
}

export function polygonPoints(corners: Point[]): string {
  return corners.map((p) => `${round2(p.x)},${round2(p.y)}`).join(" ");
}

/** Endpoints of the edge shared by two adjacent hexagons. */
export function sharedEdge(a: Point, b: Point, size: number): [Point, Point] {
  const mx = (a.x + b.x) / 2;
  const my = (a.y + b.y) / 2;
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len = Math.hypot(dx, dy) || 1;
  const px = -dy / len;
  const py = dx / len;
  const half = size / 2;
  return [
    { x: mx + px * half, y: my + py * half },
    { x: mx - px * half, y: my - py * half },
  ];
}

function round2(v: number): number {
  return Math.round(v * 100) / 100;
}
