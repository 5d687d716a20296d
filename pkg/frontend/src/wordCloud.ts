// Spiral word-cloud placement: heavier words first, each walking an
// Archimedean spiral until its box stops colliding. Deterministic.

import { CloudWord, LayoutDoc } from "./types.js";

export interface PlacedWord {
  word: string;
  x: number;
  y: number;
  size: number;
}

const MIN_SIZE = 11;
const MAX_SIZE = 26;

interface Box {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

function wordBox(word: string, x: number, y: number, size: number): Box {
  const w = word.length * size * 0.62;
  const h = size * 1.15;
  return { x0: x - w / 2, y0: y - h / 2, x1: x + w / 2, y1: y + h / 2 };
}

function collides(box: Box, placed: Box[]): boolean {
  return placed.some((p) =>
    box.x0 < p.x1 && box.x1 > p.x0 && box.y0 < p.y1 && box.y1 > p.y0);
}

export function placeWords(words: CloudWord[], maxWords = 18): PlacedWord[] {
  const ordered = words
    .slice()
    .sort((a, b) => b.weight - a.weight || a.word.localeCompare(b.word))
    .slice(0, maxWords);
  if (ordered.length === 0) {
    return [];
  }
  const top = ordered[0].weight || 1;
  const placed: PlacedWord[] = [];
  const boxes: Box[] = [];
  for (const entry of ordered) {
    const size = MIN_SIZE + (MAX_SIZE - MIN_SIZE) * (entry.weight / top);
    let t = 0;
    for (; t < 2000; t += 1) {
      const radius = 2.2 * t * 0.1;
      const angle = 0.6 * t * 0.35;
      const x = radius * Math.cos(angle);
      const y = 0.55 * radius * Math.sin(angle);
      const box = wordBox(entry.word, x, y, size);
      if (!collides(box, boxes)) {
        placed.push({ word: entry.word, x, y, size });
        boxes.push(box);
        break;
      }
    }
  }
  return placed;
}

/** Summary cloud over all counties: per-word maximum relative weight. */
export function globalCloud(doc: LayoutDoc, perCounty = 6): CloudWord[] {
  const best = new Map<string, number>();
  for (const county of doc.counties) {
    for (const entry of county.cloud.slice(0, perCounty)) {
      const prev = best.get(entry.word) ?? 0;
      if (entry.weight > prev) {
        best.set(entry.word, entry.weight);
      }
    }
  }
  return Array.from(best, ([word, weight]) => ({ word, weight }));
}
