import { describe, expect, it } from "vitest";

import { SENTIMENT_COLOR_CLASS, CLASS_FILL } from "../src/colors.js";
import { buildScene, cellsByCounty } from "../src/mapModel.js";
import { goldenLayout } from "./helpers.js";

describe("scene model from the golden layout", () => {
  const doc = goldenLayout();
  const scene = buildScene(doc);

  it("renders exactly the document's cell count", () => {
    expect(scene.cells.length).toBe(doc.cells.length);
    expect(new Set(scene.cells.map((c) => `${c.q},${c.r}`)).size)
      .toBe(doc.cells.length);
  });

  it("renders exactly the document's boundary count, no recomputation", () => {
    expect(scene.boundaries.length).toBe(doc.boundaries.length);
    const kinds = scene.boundaries.map((b) => b.kind).sort();
    expect(kinds).toEqual(doc.boundaries.map((b) => b.class).sort());
  });

  it("renders one station per country, earliest solid", () => {
    expect(scene.stations.length).toBe(doc.countries.length);
    const byIndex = [...scene.stations].sort((a, b) => a.index - b.index);
    expect(byIndex[0].style).toBe("solid");
    for (const station of byIndex.slice(1)) {
      expect(station.style).toBe("double");
    }
  });

  it("railway path visits every station in order", () => {
    const segments = scene.railwayPath.split("L").length;
    expect(segments).toBe(doc.railway.length);
    expect(scene.railwayPath.startsWith("M ")).toBe(true);
  });

  it("six-entry sentiment color table is exact", () => {
    expect(SENTIMENT_COLOR_CLASS).toEqual({
      happy: "orange",
      angry: "red",
      sad: "blue",
      fear: "violet",
      surprise: "yellow",
      neutral: "green",
    });
    expect(Object.keys(CLASS_FILL).sort()).toEqual(
      Object.values(SENTIMENT_COLOR_CLASS).sort());
  });

  it("every cell fill comes from its color class", () => {
    for (const cell of scene.cells) {
      expect(cell.fill).toBe(CLASS_FILL[cell.colorClass]);
    }
  });

  it("boundary segments have the hex edge length", () => {
    for (const seg of scene.boundaries) {
      const len = Math.hypot(seg.x2 - seg.x1, seg.y2 - seg.y1);
      expect(len).toBeCloseTo(scene.cellSize, 5);
    }
  });

  it("groups cells by county consistently with the document", () => {
    const groups = cellsByCounty(scene);
    const total = [...groups.values()].reduce((acc, g) => acc + g.length, 0);
    expect(total).toBe(doc.cells.length);
    expect(new Set(groups.keys())).toEqual(new Set(doc.cells.map((c) => c.county)));
  });

  it("each polygon has six corners", () => {
    for (const cell of scene.cells.slice(0, 10)) {
      expect(cell.points.split(" ").length).toBe(6);
    }
  });
});
