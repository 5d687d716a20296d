// View-selection state. Invariant: when both a cell and a county are
// selected, the cell belongs to that county.

import { LayoutDoc } from "./types.js";

export interface ViewState {
  songId: string | null;
  county: number | null;
  cell: [number, number] | null;
  hoverCounty: number | null;
}

export function initialState(): ViewState {
  return { songId: null, county: null, cell: null, hoverCounty: null };
}

export function selectCell(state: ViewState, doc: LayoutDoc,
                           q: number, r: number): ViewState {
  const cell = doc.cells.find((c) => c.q === q && c.r === r);
  if (!cell) {
    return state;   // empty sea cell: no-op
  }
  return { ...state, cell: [q, r], county: cell.county };
}

export function selectCounty(state: ViewState, doc: LayoutDoc,
                             county: number): ViewState {
  const keepCell = state.cell !== null
    && doc.cells.some((c) => c.q === state.cell![0] && c.r === state.cell![1]
                      && c.county === county);
  return { ...state, county, cell: keepCell ? state.cell : null };
}

export function clearSelection(state: ViewState): ViewState {
  return { ...state, county: null, cell: null };
}

export function invariantHolds(state: ViewState, doc: LayoutDoc): boolean {
  if (state.cell === null || state.county === null) {
    return true;
  }
  const [q, r] = state.cell;
  const cell = doc.cells.find((c) => c.q === q && c.r === r);
  return cell !== undefined && cell.county === state.county;
}
