// Pure scene model: turns a layout document into drawable primitives.
// No geometry is recomputed beyond polygon corners; the document is the
// single source of truth for what exists on the map.

import { fillForColorClass } from "./colors.js";
import { hexCorners, polygonPoints, sharedEdge } from "./hex.js";
import { LayoutDoc } from "./types.js";

export interface CellShape {
  q: number;
  r: number;
  commentId: string;
  county: number;
  colorClass: string;
  fill: string;
  points: string;
  cx: number;
  cy: number;
}

export interface BoundarySegment {
  kind: "national" | "county";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface StationShape {
  index: number;
  x: number;
  y: number;
  style: "solid" | "double";
}

export interface Scene {
  width: number;
  height: number;
  cellSize: number;
  cells: CellShape[];
  boundaries: BoundarySegment[];
  stations: StationShape[];
  railwayPath: string;
}

export function buildScene(doc: LayoutDoc): Scene {
  const size = doc.canvas.cell_size;
  const centers = new Map<string, { x: number; y: number }>();
  const cells: CellShape[] = doc.cells.map((cell) => {
    centers.set(`${cell.q},${cell.r}`, { x: cell.x, y: cell.y });
    return {
      q: cell.q,
      r: cell.r,
      commentId: cell.comment_id,
      county: cell.county,
      colorClass: cell.color,
      fill: fillForColorClass(cell.color),
      points: polygonPoints(hexCorners(cell.x, cell.y, size)),
      cx: cell.x,
      cy: cell.y,
    };
  });

  const boundaries: BoundarySegment[] = doc.boundaries.map((edge) => {
    const a = centers.get(`${edge.a[0]},${edge.a[1]}`);
    const b = centers.get(`${edge.b[0]},${edge.b[1]}`);
    if (!a || !b) {
      throw new Error(`boundary references unknown cell ${edge.a} / ${edge.b}`);
    }
    const [p1, p2] = sharedEdge(a, b, size);
    return { kind: edge.class, x1: p1.x, y1: p1.y, x2: p2.x, y2: p2.y };
  });

  const stations: StationShape[] = doc.countries.map((c) => ({
    index: c.index,
    x: c.station.x,
    y: c.station.y,
    style: c.station.style,
  }));

  const railwayPath = doc.railway
    .map(([x, y], i) => `${i === 0 ? "M" : "L"} ${x} ${y}`)
    .join(" ");

  return {
    width: doc.canvas.w,
    height: doc.canvas.h,
    cellSize: size,
    cells,
    boundaries,
    stations,
    railwayPath,
  };
}

/** Cells grouped by county id, for hover/selection emphasis. */
export function cellsByCounty(scene: Scene): Map<number, CellShape[]> {
  const groups = new Map<number, CellShape[]>();
  for (const cell of scene.cells) {
    const group = groups.get(cell.county);
    if (group) {
      group.push(cell);
    } else {
      groups.set(cell.county, [cell]);
    }
  }
  return groups;
}
