"""Layout document assembly: railway, sentiment colors, canonical export.

The exported document is fully deterministic: arrays are sorted by fixed
keys, floats are rounded to four decimals, and JSON keys are serialized in
sorted order, so identical inputs yield identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..nlp.classify import MechanismLabel, SentimentLabel

LAYOUT_VERSION = 1

_SENTIMENT_COLORS = {
    SentimentLabel.HAPPY: "orange",
    SentimentLabel.ANGRY: "red",
    SentimentLabel.SAD: "blue",
    SentimentLabel.FEAR: "violet",
    SentimentLabel.SURPRISE: "yellow",
    SentimentLabel.NEUTRAL: "green",
}


def sentiment_to_color(label: SentimentLabel) -> str:
    return _SENTIMENT_COLORS[SentimentLabel(label)]


@dataclass(frozen=True)
class Station:
    x: float
    y: float
    style: str   # "solid" for the earliest period, "double" otherwise


@dataclass(frozen=True)
class Country:
    index: int
    start: int
    end: int
    station: Station


def build_railway(countries) -> tuple:
    """Stations in chronological order; the polyline traverses their centers.

    Input order does not matter; countries are sorted by period index and the
    earliest one gets the solid station style.
    """
    if not countries:
        raise ValueError("no countries")
    ordered = sorted(countries, key=lambda c: c["index"] if isinstance(c, dict) else c.index)
    out = []
    for pos, c in enumerate(ordered):
        if isinstance(c, dict):
            index, start, end, center = c["index"], c["start"], c["end"], c["center"]
        else:
            index, start, end, center = c.index, c.start, c.end, (c.station.x, c.station.y)
        style = "solid" if pos == 0 else "double"
        out.append(Country(index=index, start=start, end=end,
                           station=Station(x=center[0], y=center[1], style=style)))
    polyline = [(c.station.x, c.station.y) for c in out]
    return out, polyline


def _round4(x: float) -> float:
    v = round(float(x), 4)
    return 0.0 if v == 0 else v


@dataclass
class MapLayout:
    """Complete geometry of one song's comment map."""

    song_id: str
    canvas: dict          # {"w", "h", "cell_size"}
    countries: list       # Country
    counties: list        # dicts: id, country, cloud, mechanism_hist
    cells: list           # dicts: q, r, x, y, comment_id, color, county
    boundaries: list      # BoundaryEdge
    railway: list         # [(x, y), ...]
    fallback_count: int
    config: dict


def export_layout(layout: MapLayout) -> dict:
    """Canonical document: sorted arrays, 4-decimal floats, schema version 1."""
    doc = {
        "layout_version": LAYOUT_VERSION,
        "song_id": layout.song_id,
        "canvas": {
            "w": _round4(layout.canvas["w"]),
            "h": _round4(layout.canvas["h"]),
            "cell_size": _round4(layout.canvas["cell_size"]),
        },
        "countries": [
            {
                "index": c.index,
                "start": c.start,
                "end": c.end,
                "station": {"x": _round4(c.station.x), "y": _round4(c.station.y),
                            "style": c.station.style},
            }
            for c in sorted(layout.countries, key=lambda c: c.index)
        ],
        "counties": [
            {
                "id": county["id"],
                "country": county["country"],
                "cloud": [{"word": w, "weight": _round4(weight)}
                          for w, weight in county["cloud"]],
                "mechanism_hist": {label.value: county["mechanism_hist"].get(label, 0)
                                   for label in MechanismLabel},
            }
            for county in sorted(layout.counties, key=lambda c: c["id"])
        ],
        "cells": [
            {
                "q": cell["q"], "r": cell["r"],
                "x": _round4(cell["x"]), "y": _round4(cell["y"]),
                "comment_id": cell["comment_id"],
                "color": cell["color"],
                "county": cell["county"],
            }
            for cell in sorted(layout.cells, key=lambda c: (c["q"], c["r"]))
        ],
        "boundaries": [
            {"a": [e.a[0], e.a[1]], "b": [e.b[0], e.b[1]], "class": e.kind}
            for e in sorted(layout.boundaries, key=lambda e: (e.a, e.b))
        ],
        "railway": [[_round4(x), _round4(y)] for x, y in layout.railway],
        "fallback_count": layout.fallback_count,
        "config": layout.config,
    }
    return doc


def layout_to_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, sort_keys=True, ensure_ascii=False,
                       separators=(",", ":")) + "\n").encode("utf-8")
