// Model for the four induced-mechanism bars beside the vertical timeline.
// One row per time period; the selected county's dominant mechanism bar is
// darkened as the selection cue.

import { County, LayoutDoc, MechanismHist } from "./types.js";

export const MECHANISMS: (keyof MechanismHist)[] = [
  "music_evaluation",
  "personal_memory",
  "contextual_info",
  "others",
];

export interface MechanismBar {
  mechanism: keyof MechanismHist;
  count: number;
  fraction: number;   // of the row's total, for bar length
  darkened: boolean;
}

export interface TimelineRow {
  country: number;
  start: number;
  end: number;
  total: number;
  bars: MechanismBar[];
}

/** The county's most frequent mechanism; ties break in MECHANISMS order. */
export function dominantMechanism(county: County): keyof MechanismHist {
  let best: keyof MechanismHist = MECHANISMS[0];
  let bestCount = -1;
  for (const mech of MECHANISMS) {
    const count = county.mechanism_hist[mech] ?? 0;
    if (count > bestCount) {
      best = mech;
      bestCount = count;
    }
  }
  return best;
}

export function timelineRows(doc: LayoutDoc, selectedCounty: number | null): TimelineRow[] {
  const selected = selectedCounty === null
    ? null
    : doc.counties.find((c) => c.id === selectedCounty) ?? null;
  const dominant = selected ? dominantMechanism(selected) : null;

  return doc.countries
    .slice()
    .sort((a, b) => a.index - b.index)
    .map((country) => {
      const counts: Record<string, number> = {};
      for (const mech of MECHANISMS) {
        counts[mech] = 0;
      }
      for (const county of doc.counties) {
        if (county.country !== country.index) {
          continue;
        }
        for (const mech of MECHANISMS) {
          counts[mech] += county.mechanism_hist[mech] ?? 0;
        }
      }
      const total = MECHANISMS.reduce((acc, mech) => acc + counts[mech], 0);
      const bars: MechanismBar[] = MECHANISMS.map((mech) => ({
        mechanism: mech,
        count: counts[mech],
        fraction: total > 0 ? counts[mech] / total : 0,
        darkened: selected !== null
          && selected.country === country.index
          && mech === dominant,
      }));
      return { country: country.index, start: country.start, end: country.end,
               total, bars };
    });
}
