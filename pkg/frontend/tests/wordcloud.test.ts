import { describe, expect, it } from "vitest";

import { globalCloud, placeWords } from "../src/wordCloud.js";
import { goldenLayout } from "./helpers.js";

const doc = goldenLayout();

describe("word cloud placement", () => {
  it("places the heaviest word first at the center", () => {
    const placed = placeWords([
      { word: "melody", weight: 1.0 },
      { word: "rain", weight: 0.4 },
    ]);
    expect(placed[0].word).toBe("melody");
    expect(placed[0].x).toBe(0);
    expect(placed[0].y).toBe(0);
    expect(placed[0].size).toBeGreaterThan(placed[1].size);
  });

  it("no two word boxes overlap", () => {
    const placed = placeWords(globalCloud(doc));
    for (let i = 0; i < placed.length; i++) {
      for (let j = i + 1; j < placed.length; j++) {
        const a = placed[i];
        const b = placed[j];
        const aw = a.word.length * a.size * 0.62 / 2;
        const bw = b.word.length * b.size * 0.62 / 2;
        const overlapX = Math.abs(a.x - b.x) < aw + bw;
        const overlapY = Math.abs(a.y - b.y) < (a.size + b.size) * 1.15 / 2;
        expect(overlapX && overlapY).toBe(false);
      }
    }
  });

  it("is deterministic", () => {
    const words = globalCloud(doc);
    expect(placeWords(words)).toEqual(placeWords(words));
  });

  it("caps the word count", () => {
    const many = Array.from({ length: 60 }, (_, i) => ({
      word: `word${i}`, weight: 1 - i / 100,
    }));
    expect(placeWords(many, 18).length).toBeLessThanOrEqual(18);
  });

  it("empty cloud places nothing", () => {
    expect(placeWords([])).toEqual([]);
  });
});
