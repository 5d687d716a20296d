"""Top-down segmentation of the comment-count time series into periods.

Segments are modeled as piecewise-constant means with sum-of-squared-error
cost; a segment is split at the position minimizing the combined error of the
two halves, recursing until the error drops below the threshold or the
segment is too short to split.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

import numpy as np

DAY = 86400


@dataclass(frozen=True)
class CountSeries:
    """Histogram of comment timestamps, first bin anchored at the earliest one."""

    origin: int
    bin_width: int
    counts: tuple

    def __len__(self):
        return len(self.counts)


@dataclass(frozen=True)
class TimePeriod:
    """Half-open [start, end) span with the ids of the comments inside it."""

    index: int
    start: int
    end: int
    comment_ids: tuple


def build_count_series(comments, bin_width: int = DAY) -> CountSeries:
    if not comments:
        raise ValueError("no comments")
    if bin_width <= 0:
        raise ValueError("bin_width must be > 0")
    stamps = [c.timestamp for c in comments]
    origin = min(stamps)
    n_bins = (max(stamps) - origin) // bin_width + 1
    counts = [0] * n_bins
    for t in stamps:
        counts[(t - origin) // bin_width] += 1
    return CountSeries(origin=origin, bin_width=bin_width, counts=tuple(counts))


class _SsePrefix:
    """O(1) sum-of-squared-error queries against the segment mean."""

    def __init__(self, values):
        v = np.asarray(values, dtype=float)
        self.s1 = np.concatenate([[0.0], np.cumsum(v)])
        self.s2 = np.concatenate([[0.0], np.cumsum(v * v)])

    def sse(self, i: int, j: int) -> float:
        n = j - i
        if n <= 0:
            return 0.0
        total = self.s1[j] - self.s1[i]
        return max(0.0, (self.s2[j] - self.s2[i]) - total * total / n)


def _best_split(prefix: _SsePrefix, i: int, j: int, min_len: int):
    best_k = None
    best_err = None
    for k in range(i + min_len, j - min_len + 1):
        err = prefix.sse(i, k) + prefix.sse(k, j)
        if best_err is None or err < best_err:
            best_err = err
            best_k = k
    return best_k, best_err


def segment_topdown(series: CountSeries, max_error: float | None = None,
                    min_len: int = 7, error_ratio: float = 0.05,
                    max_segments: int | None = None) -> list:
    """Return sorted cut indices (a cut at k starts a new segment at bin k).

    ``max_error`` defaults to ``error_ratio`` times the SSE of the whole
    series. When ``max_segments`` is given, only the cuts with the largest
    error reductions are kept.
    """
    if min_len < 1:
        raise ValueError("min_len must be >= 1")
    n = len(series)
    prefix = _SsePrefix(series.counts)
    if max_error is None:
        max_error = error_ratio * prefix.sse(0, n)
    if max_error < 0:
        raise ValueError("max_error must be >= 0")

    cuts = []  # (cut index, error reduction)

    def recurse(i: int, j: int):
        err = prefix.sse(i, j)
        if err <= max_error or (j - i) < 2 * min_len:
            return
        k, split_err = _best_split(prefix, i, j, min_len)
        if k is None:
            return
        cuts.append((k, err - split_err))
        recurse(i, k)
        recurse(k, j)

    recurse(0, n)
    if max_segments is not None and len(cuts) + 1 > max_segments:
        cuts.sort(key=lambda c: (-c[1], c[0]))
        cuts = cuts[:max_segments - 1]
    return sorted(k for k, _ in cuts)


def periods_from_cuts(series: CountSeries, cuts, comments) -> list:
    """Turn bin cuts into timestamp periods and attach comments.

    Empty periods are merged into their chronological successor (the last
    one into its predecessor), so every returned period is non-empty.
    """
    n = len(series)
    for c in cuts:
        if not 0 < c < n:
            raise ValueError(f"cut {c} out of range (0, {n})")
    bounds = [0] + sorted(cuts) + [n]
    spans = []
    for b0, b1 in zip(bounds[:-1], bounds[1:]):
        spans.append((series.origin + b0 * series.bin_width,
                      series.origin + b1 * series.bin_width))

    ordered = sorted(comments, key=lambda c: (c.timestamp, c.id))
    stamps = [c.timestamp for c in ordered]
    filled = []
    for start, end in spans:
        lo = bisect.bisect_left(stamps, start)
        hi = bisect.bisect_left(stamps, end)
        filled.append([start, end, [c.id for c in ordered[lo:hi]]])

    idx = 0
    while idx < len(filled):
        if filled[idx][2]:
            idx += 1
            continue
        if idx + 1 < len(filled):            # merge into successor
            filled[idx + 1][0] = filled[idx][0]
        elif idx > 0:                        # last period: merge into predecessor
            filled[idx - 1][1] = filled[idx][1]
        del filled[idx]
        if not filled:
            raise ValueError("no comments in range")

    return [TimePeriod(index=i, start=s, end=e, comment_ids=tuple(ids))
            for i, (s, e, ids) in enumerate(filled)]


def smooth_counts(series: CountSeries, window: int) -> CountSeries:
    """Centered moving-average smoothing (optional preprocessing for cut detection)."""
    if window <= 1:
        return series
    kernel = np.ones(window) / window
    padded = np.pad(np.asarray(series.counts, dtype=float),
                    (window // 2, window - 1 - window // 2), mode="edge")
    smoothed = np.convolve(padded, kernel, mode="valid")
    return CountSeries(origin=series.origin, bin_width=series.bin_width,
                       counts=tuple(float(x) for x in smoothed))
