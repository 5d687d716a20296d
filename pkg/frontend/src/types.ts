// Shapes of the documents served by the explorer API.

export const SUPPORTED_LAYOUT_VERSION = 1;

export interface CloudWord {
  word: string;
  weight: number;
}

export interface MechanismHist {
  music_evaluation: number;
  personal_memory: number;
  contextual_info: number;
  others: number;
}

export interface County {
  id: number;
  country: number;
  cloud: CloudWord[];
  mechanism_hist: MechanismHist;
}

export interface Cell {
  q: number;
  r: number;
  x: number;
  y: number;
  comment_id: string;
  color: string;
  county: number;
}

export interface Boundary {
  a: [number, number];
  b: [number, number];
  class: "national" | "county";
}

export interface Station {
  x: number;
  y: number;
  style: "solid" | "double";
}

export interface Country {
  index: number;
  start: number;
  end: number;
  station: Station;
}

export interface LayoutDoc {
  layout_version: number;
  song_id: string;
  canvas: { w: number; h: number; cell_size: number };
  countries: Country[];
  counties: County[];
  cells: Cell[];
  boundaries: Boundary[];
  railway: [number, number][];
  fallback_count: number;
  config: Record<string, unknown>;
}

export interface TagEntry {
  word: string;
  count: number;
}

export interface SongSummary {
  id: string;
  title: string;
  artist: string;
  album: string;
  comment_count: number;
  tags: TagEntry[];
}

export interface KeywordEntry {
  word: string;
  similarity: number;
}

export interface CommentDetail {
  id: string;
  song_id: string;
  text: string;
  timestamp: number;
  like_count: number;
  user_id: string | null;
  sentiment: string;
  sentiment_confidence: number;
  mechanism: string;
  mechanism_confidence: number;
  keywords: KeywordEntry[];
}

export class SchemaVersionError extends Error {
  constructor(public readonly got: unknown) {
    super(`unsupported layout_version ${String(got)}; ` +
          `this explorer renders version ${SUPPORTED_LAYOUT_VERSION}`);
    this.name = "SchemaVersionError";
  }
}

/** Validate the wire document before rendering; throws on version mismatch. */
export function validateLayout(doc: unknown): LayoutDoc {
  const d = doc as LayoutDoc;
  if (!d || typeof d !== "object" || d.layout_version !== SUPPORTED_LAYOUT_VERSION) {
    throw new SchemaVersionError(d && typeof d === "object" ? d.layout_version : doc);
  }
  for (const key of ["canvas", "countries", "counties", "cells", "boundaries",
                     "railway"] as const) {
    if (!(key in d)) {
      throw new Error(`layout document missing "${key}"`);
    }
  }
  return d;
}
