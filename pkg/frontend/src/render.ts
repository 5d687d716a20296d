// DOM builders. All geometry comes from the scene model; this layer only
// creates elements and wires events.

import { Scene } from "./mapModel.js";
import { TimelineRow } from "./mechanism.js";
import { PlacedWord } from "./wordCloud.js";
import { ViewState } from "./state.js";
import { CommentDetail, SongSummary } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K, attrs: Record<string, string | number> = {}): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className = "", text = ""): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text) {
    node.textContent = text;
  }
  return node;
}

export interface MapHandlers {
  onCellClick(q: number, r: number): void;
  onCountyHover(county: number | null): void;
}

export function renderMap(scene: Scene, state: ViewState,
                          handlers: MapHandlers): SVGSVGElement {
  const pad = scene.cellSize;
  const svg = svgEl("svg", {
    viewBox: `${-pad} ${-pad} ${scene.width + 2 * pad} ${scene.height + 2 * pad}`,
    class: "cm-map",
    role: "img",
  });

  const cellLayer = svgEl("g", { class: "cm-cells" });
  for (const cell of scene.cells) {
    const dimmed = state.county !== null && cell.county !== state.county;
    const poly = svgEl("polygon", {
      points: cell.points,
      fill: cell.fill,
      class: `cm-cell${dimmed ? " cm-dimmed" : ""}`,
      "data-q": cell.q,
      "data-r": cell.r,
      "data-county": cell.county,
      "data-comment": cell.commentId,
    });
    if (state.cell && state.cell[0] === cell.q && state.cell[1] === cell.r) {
      poly.classList.add("cm-selected");
    }
    poly.addEventListener("click", () => handlers.onCellClick(cell.q, cell.r));
    poly.addEventListener("mouseenter", () => handlers.onCountyHover(cell.county));
    poly.addEventListener("mouseleave", () => handlers.onCountyHover(null));
    cellLayer.appendChild(poly);
  }
  svg.appendChild(cellLayer);

  const boundaryLayer = svgEl("g", { class: "cm-boundaries" });
  for (const seg of scene.boundaries) {
    boundaryLayer.appendChild(svgEl("line", {
      x1: seg.x1, y1: seg.y1, x2: seg.x2, y2: seg.y2,
      class: seg.kind === "national" ? "cm-boundary-national" : "cm-boundary-county",
    }));
  }
  svg.appendChild(boundaryLayer);

  if (scene.railwayPath) {
    svg.appendChild(svgEl("path", { d: scene.railwayPath, class: "cm-railway" }));
  }

  const stationLayer = svgEl("g", { class: "cm-stations" });
  for (const station of scene.stations) {
    if (station.style === "double") {
      stationLayer.appendChild(svgEl("circle", {
        cx: station.x, cy: station.y, r: scene.cellSize * 0.85,
        class: "cm-station-outer",
      }));
    }
    stationLayer.appendChild(svgEl("circle", {
      cx: station.x, cy: station.y, r: scene.cellSize * 0.45,
      class: station.style === "solid" ? "cm-station-solid" : "cm-station-inner",
    }));
  }
  svg.appendChild(stationLayer);
  return svg;
}

export function renderTimeline(rows: TimelineRow[],
                               onCountryClick?: (index: number) => void): HTMLElement {
  const wrap = el("div", "cm-timeline");
  for (const row of rows) {
    const rowEl = el("div", "cm-timeline-row");
    rowEl.appendChild(el("div", "cm-timeline-date",
                         `${fmtDate(row.start)} → ${fmtDate(row.end)}`));
    const bars = el("div", "cm-mech-bars");
    for (const bar of row.bars) {
      const barEl = el("div", `cm-mech-bar${bar.darkened ? " cm-darkened" : ""}`);
      barEl.dataset.mechanism = bar.mechanism;
      barEl.dataset.country = String(row.country);
      barEl.title = `${bar.mechanism}: ${bar.count}`;
      const fill = el("div", "cm-mech-fill");
      fill.style.width = `${Math.round(bar.fraction * 100)}%`;
      barEl.appendChild(fill);
      bars.appendChild(barEl);
    }
    rowEl.appendChild(bars);
    if (onCountryClick) {
      rowEl.addEventListener("click", () => onCountryClick(row.country));
    }
    wrap.appendChild(rowEl);
  }
  return wrap;
}

export function renderCloud(words: PlacedWord[]): SVGSVGElement {
  const svg = svgEl("svg", { viewBox: "-160 -60 320 120", class: "cm-cloud" });
  for (const word of words) {
    const text = svgEl("text", {
      x: word.x, y: word.y, "font-size": word.size,
      "text-anchor": "middle", class: "cm-cloud-word",
    });
    text.textContent = word.word;
    svg.appendChild(text);
  }
  return svg;
}

export function renderCommentPanel(detail: CommentDetail | null,
                                   error: string | null): HTMLElement {
  const wrap = el("div", "cm-comment-panel");
  if (error) {
    wrap.appendChild(el("p", "cm-error", error));
    return wrap;
  }
  if (!detail) {
    wrap.appendChild(el("p", "cm-hint", "Click a cell to read its comment."));
    return wrap;
  }
  wrap.appendChild(el("p", "cm-comment-text", detail.text));
  const meta = el("div", "cm-comment-meta");
  meta.appendChild(el("span", `cm-chip cm-chip-${detail.sentiment}`, detail.sentiment));
  meta.appendChild(el("span", "cm-chip", detail.mechanism.replace("_", " ")));
  meta.appendChild(el("span", "cm-meta", fmtDate(detail.timestamp)));
  meta.appendChild(el("span", "cm-meta", `♥ ${detail.like_count}`));
  wrap.appendChild(meta);
  if (detail.keywords.length) {
    const kws = el("div", "cm-keywords");
    for (const kw of detail.keywords) {
      kws.appendChild(el("span", "cm-tag", kw.word));
    }
    wrap.appendChild(kws);
  }
  return wrap;
}

export function renderSongList(songs: SongSummary[], activeTag: string | null,
                               handlers: {
                                 onOpen(songId: string): void;
                                 onTag(word: string): void;
                               }): HTMLElement {
  const wrap = el("div", "cm-song-list");
  for (const song of songs) {
    const row = el("div", "cm-song-row");
    const head = el("div", "cm-song-head");
    head.appendChild(el("span", "cm-song-title", song.title));
    head.appendChild(el("span", "cm-song-artist", song.artist || "unknown artist"));
    head.appendChild(el("span", "cm-song-album", song.album));
    head.appendChild(el("span", "cm-song-count", `${song.comment_count} comments`));
    row.appendChild(head);
    const tags = el("div", "cm-song-tags");
    for (const tag of song.tags) {
      const chip = el("button", `cm-tag${tag.word === activeTag ? " cm-tag-active" : ""}`,
                      tag.word);
      chip.type = "button";
      chip.addEventListener("click", (ev) => {
        ev.stopPropagation();
        handlers.onTag(tag.word);
      });
      tags.appendChild(chip);
    }
    row.appendChild(tags);
    row.addEventListener("dblclick", () => handlers.onOpen(song.id));
    wrap.appendChild(row);
  }
  return wrap;
}

function fmtDate(timestamp: number): string {
  return new Date(timestamp * 1000).toISOString().slice(0, 10);
}
