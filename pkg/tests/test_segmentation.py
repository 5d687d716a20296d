import itertools

import numpy as np
import pytest

from commentmap.corpus import Comment
from commentmap.segmentation import (
    DAY,
    CountSeries,
    build_count_series,
    periods_from_cuts,
    segment_topdown,
)


def comments_at(timestamps, song="S1"):
    return [Comment(id=f"c{i:04d}", song_id=song, text="x", timestamp=t)
            for i, t in enumerate(timestamps)]


def series_of(counts, origin=1000, width=DAY):
    return CountSeries(origin=origin, bin_width=width, counts=tuple(counts))


def sse(values):
    v = np.asarray(values, dtype=float)
    return float(((v - v.mean()) ** 2).sum()) if len(v) else 0.0


def exhaustive_best_cuts(counts, n_cuts, min_len=1):
    """Oracle: the cut set of given size minimizing total SSE."""
    n = len(counts)
    best = None
    for cuts in itertools.combinations(range(min_len, n - min_len + 1), n_cuts):
        if any(b - a < min_len for a, b in zip(cuts, cuts[1:])):
            continue
        bounds = [0, *cuts, n]
        total = sum(sse(counts[a:b]) for a, b in zip(bounds, bounds[1:]))
        if best is None or total < best[0]:
            best = (total, cuts)
    return list(best[1])


class TestBuildCountSeries:
    def test_single_day(self):
        series = build_count_series(comments_at([100, 200, 50000]))
        assert series.counts == (3,)

    def test_two_daily_bins(self):
        series = build_count_series(comments_at([1, 1 + DAY]))
        assert series.counts == (1, 1)
        assert series.origin == 1

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            build_count_series([])

    def test_fixture_recount(self, planted_small):
        comments = list(planted_small.commentset)
        series = build_count_series(comments)
        assert sum(series.counts) == len(comments)
        # independent recount per bin
        for idx, count in enumerate(series.counts):
            lo = series.origin + idx * series.bin_width
            hi = lo + series.bin_width
            assert count == sum(1 for c in comments if lo <= c.timestamp < hi)


class TestSegmentTopdown:
    def test_constant_series_no_cuts(self):
        assert segment_topdown(series_of([5, 5, 5, 5]), max_error=0.0, min_len=1) == []

    def test_step_series_cut_at_three(self):
        counts = [1, 1, 1, 9, 9, 9]
        step_sse = sse(counts)
        cuts = segment_topdown(series_of(counts), max_error=step_sse / 100, min_len=1)
        assert cuts == [3]

    def test_length_one_series(self):
        assert segment_topdown(series_of([7]), max_error=0.0, min_len=1) == []

    def test_stopping_condition_invariant(self):
        rng = np.random.default_rng(0)
        for _ in range(25):
            counts = [int(x) for x in rng.integers(0, 30, size=int(rng.integers(5, 60)))]
            max_error = float(rng.uniform(0, sse(counts) + 1))
            min_len = int(rng.integers(1, 5))
            cuts = segment_topdown(series_of(counts), max_error=max_error, min_len=min_len)
            bounds = [0, *cuts, len(counts)]
            for a, b in zip(bounds, bounds[1:]):
                assert sse(counts[a:b]) <= max_error or (b - a) < 2 * min_len

    def test_cuts_idempotent(self):
        rng = np.random.default_rng(1)
        for _ in range(25):
            counts = [int(x) for x in rng.integers(0, 40, size=50)]
            max_error = float(rng.uniform(1, 200))
            cuts = segment_topdown(series_of(counts), max_error=max_error, min_len=2)
            bounds = [0, *cuts, len(counts)]
            for a, b in zip(bounds, bounds[1:]):
                again = segment_topdown(series_of(counts[a:b]),
                                        max_error=max_error, min_len=2)
                assert again == []

    def test_max_segments_keeps_best_reductions(self):
        # three clean steps, capped to two segments -> the single biggest cut
        counts = [0] * 8 + [50] * 8 + [10] * 8 + [60] * 8
        all_cuts = segment_topdown(series_of(counts), max_error=1.0, min_len=2)
        assert all_cuts == [8, 16, 24]
        capped = segment_topdown(series_of(counts), max_error=1.0, min_len=2,
                                 max_segments=2)
        assert len(capped) == 1
        assert capped[0] in all_cuts

    def test_matches_exhaustive_oracle_on_steps(self):
        rng = np.random.default_rng(2)
        hits = 0
        total = 0
        for trial in range(20):
            levels = rng.permutation([0, 10, 20, 30])
            counts = []
            for lv in levels:
                counts.extend(lv + rng.normal(0, 1.0, size=10))
            got = segment_topdown(series_of(counts), min_len=3)
            oracle = exhaustive_best_cuts(counts, 3, min_len=3)
            for cut in oracle:
                total += 1
                if any(abs(cut - g) <= 1 for g in got):
                    hits += 1
        assert hits / total >= 0.95


class TestPeriodsFromCuts:
    def test_no_cuts_single_period(self):
        comments = comments_at([100, 5000, 90000])
        series = build_count_series(comments)
        periods = periods_from_cuts(series, [], comments)
        assert len(periods) == 1
        assert periods[0].comment_ids == tuple(c.id for c in comments)

    def test_boundary_arithmetic(self):
        comments = comments_at([1, DAY * 5 + 1])
        series = build_count_series(comments)
        assert len(series) == 6
        periods = periods_from_cuts(series, [3], comments)
        assert len(periods) == 2
        assert periods[0].end == periods[1].start == 1 + 3 * DAY

    def test_empty_period_merged_forward(self):
        # bins: [2, 0, 0, 1]; cut at every bin -> empty periods collapse
        comments = comments_at([1, 2, 1 + 3 * DAY])
        series = build_count_series(comments)
        periods = periods_from_cuts(series, [1, 2, 3], comments)
        assert [len(p.comment_ids) for p in periods] == [2, 1]
        assert periods[0].index == 0 and periods[1].index == 1
        # spans still partition the whole range
        assert periods[0].start == series.origin
        assert periods[-1].end == series.origin + 4 * DAY
        assert periods[0].end == periods[1].start

    def test_partition_property_random_cuts(self, planted_small):
        comments = list(planted_small.commentset)
        series = build_count_series(comments)
        rng = np.random.default_rng(3)
        for _ in range(20):
            n_cuts = int(rng.integers(0, 6))
            cuts = sorted(set(rng.integers(1, len(series), size=n_cuts).tolist()))
            periods = periods_from_cuts(series, cuts, comments)
            merged = [cid for p in periods for cid in p.comment_ids]
            assert merged == [c.id for c in comments]
            assert all(p.comment_ids for p in periods)
            assert [p.index for p in periods] == list(range(len(periods)))
            for a, b in zip(periods, periods[1:]):
                assert a.end == b.start
