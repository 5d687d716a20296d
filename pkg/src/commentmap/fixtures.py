"""Synthetic planted-topic corpora for tests, calibration, and demos.

Each generated comment draws its tokens from one topic's vocabulary; the
vocabularies are pairwise disjoint, so generator labels act as ground truth
for topic recovery, assignment agreement, and purity checks. Timestamps come
in consecutive bursts of differing intensity, giving the segmenter clean
steps to find.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import Comment, CommentSet
from .nlp.classify import sentiment_lexicon, SentimentLabel

_THEME_VOCABS = (
    # music evaluation flavored
    ("melody", "lyrics", "rhythm", "vocal", "chorus", "arrangement", "composition",
     "instrumental", "production", "recording", "songwriting", "guitar", "piano",
     "drums", "bass", "harmony", "tempo", "acoustic", "intro", "outro", "falsetto",
     "verse", "tune", "soundstage", "timbre", "cadence", "riff", "bridge", "hook",
     "mixing", "mastering", "octave", "crescendo", "ballad", "groove", "synth",
     "strings", "ensemble", "phrasing", "resonance"),
    # personal memory flavored
    ("remember", "memory", "memories", "childhood", "graduation", "nostalgia",
     "youth", "hometown", "classmate", "diary", "summer", "campus", "dormitory",
     "reunion", "yearbook", "playground", "grandma", "grandpa", "letters",
     "photographs", "bicycle", "sunset", "riverbank", "firefly", "lullaby",
     "backpack", "classroom", "chalkboard", "semester", "homework", "vacation",
     "lantern", "moonlight", "courtyard", "staircase", "window", "umbrella",
     "bookmark", "postcard", "keepsake"),
    # contextual information flavored
    ("movie", "film", "series", "drama", "documentary", "news", "concert",
     "tour", "festival", "anniversary", "tiktok", "youtube", "trailer",
     "episode", "soundtrack", "interview", "award", "charts", "finale",
     "season", "premiere", "billboard", "headline", "broadcast", "streaming",
     "playlist", "ranking", "celebrity", "paparazzi", "studio", "label",
     "release", "remaster", "collab", "mashup", "viral", "hashtag", "fandom",
     "subtitle", "screening"),
)

# Sentiment classes attached per topic; pairs are disjoint so the corpus
# vocabulary stays disjoint across topics.
_TOPIC_SENTIMENTS = (
    (SentimentLabel.HAPPY, SentimentLabel.SURPRISE),
    (SentimentLabel.SAD, SentimentLabel.FEAR),
    (SentimentLabel.ANGRY, SentimentLabel.NEUTRAL),
)

DEFAULT_ORIGIN = 1_500_000_000   # arbitrary fixed epoch anchor
DAY = 86400


@dataclass
class PlantedFixture:
    commentset: CommentSet
    topic_of: dict          # comment id -> generator topic index
    song_ids: tuple
    topic_vocabs: tuple
    burst_bounds: tuple     # timestamps of burst starts plus final end
    params: dict

    def write(self, out_path) -> None:
        """Write corpus JSONL plus .songs.json / .meta.json sidecars."""
        out_path = Path(out_path)
        with out_path.open("w", encoding="utf-8") as fh:
            for c in self.commentset:
                fh.write(json.dumps(c.to_record(), ensure_ascii=False, sort_keys=True))
                fh.write("\n")
        songs = [{"id": s.id, "title": s.title, "artist": s.artist, "album": s.album}
                 for s in self.commentset.songs.values()]
        out_path.with_suffix(out_path.suffix + ".songs.json").write_text(
            json.dumps(songs, indent=2), encoding="utf-8")
        meta = {"params": self.params, "topic_of": self.topic_of,
                "burst_bounds": list(self.burst_bounds)}
        out_path.with_suffix(out_path.suffix + ".meta.json").write_text(
            json.dumps(meta, indent=2), encoding="utf-8")


def topic_vocabulary(topic: int, vocab_size: int = 40) -> tuple:
    """Vocabulary for one planted topic; themed for the first three."""
    if topic < len(_THEME_VOCABS):
        base = _THEME_VOCABS[topic][:vocab_size]
        extra = tuple(f"theme{topic}word{i}" for i in range(len(base), vocab_size))
        return base + extra
    return tuple(f"topic{topic}word{i}" for i in range(vocab_size))


def generate_planted_corpus(n_topics: int = 3, n_comments: int = 600,
                            n_songs: int = 1, seed: int = 0,
                            vocab_size: int = 40, n_bursts: int = 4,
                            burst_days: int = 15, zipf_exponent: float = 1.4,
                            origin: int = DEFAULT_ORIGIN) -> PlantedFixture:
    """Planted corpus with disjoint topic vocabularies and bursty timestamps.

    Words are drawn with Zipf weights over each topic's vocabulary so that,
    as in real text, a few head words anchor every topic; without that skew
    independently seeded topic models cannot align on the planted themes.
    """
    if n_topics < 1 or n_comments < 1 or n_songs < 1:
        raise ValueError("n_topics, n_comments, n_songs must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    vocabs = tuple(topic_vocabulary(t, vocab_size) for t in range(n_topics))
    word_weights = []
    for vocab in vocabs:
        w = 1.0 / np.arange(1, len(vocab) + 1) ** zipf_exponent
        word_weights.append(w / w.sum())
    lexicon = sentiment_lexicon()

    # Burst intensities cycle through distinct step levels.
    weights = np.array([(1.0, 4.0, 2.0, 3.0)[b % 4] for b in range(n_bursts)])
    per_burst = [int(x) for x in np.floor(weights / weights.sum() * n_comments)]
    per_burst[-1] += n_comments - sum(per_burst)

    records = []
    for b in range(n_bursts):
        start = origin + b * burst_days * DAY
        span = burst_days * DAY
        # Stratified timestamps keep per-day counts flat inside a burst, so
        # the only steps in the count series are the planted burst boundaries.
        for j in range(per_burst[b]):
            topic = int(rng.integers(0, n_topics))
            length = int(rng.integers(8, 16))
            words = list(rng.choice(vocabs[topic], size=length, p=word_weights[topic]))
            if n_topics <= len(_TOPIC_SENTIMENTS):
                primary, secondary = _TOPIC_SENTIMENTS[topic]
                label = primary if rng.random() < 0.7 else secondary
                choices = sorted(lexicon[label])
                if choices:
                    words.append(str(rng.choice(choices)))
            timestamp = start + (j * span) // max(per_burst[b], 1)
            song = f"S{int(rng.integers(0, n_songs)) + 1}"
            records.append((timestamp, song, " ".join(words), topic,
                            int(rng.integers(0, 500))))

    records.sort(key=lambda r: r[0])
    comments = []
    topic_of = {}
    for i, (timestamp, song, text, topic, likes) in enumerate(records):
        cid = f"c{i:05d}"
        comments.append(Comment(id=cid, song_id=song, text=text,
                                timestamp=timestamp, like_count=likes,
                                user_id=f"u{int(rng.integers(0, 200)):03d}"))
        topic_of[cid] = topic

    song_ids = tuple(f"S{i + 1}" for i in range(n_songs))
    song_meta = {sid: {"title": f"Fixture Song {i + 1}", "artist": "Synthetic Artist",
                       "album": "Planted Album"}
                 for i, sid in enumerate(song_ids)}
    commentset = CommentSet(comments, song_meta=song_meta)
    burst_bounds = tuple(origin + b * burst_days * DAY for b in range(n_bursts + 1))
    params = {"n_topics": n_topics, "n_comments": n_comments, "n_songs": n_songs,
              "seed": seed, "vocab_size": vocab_size, "n_bursts": n_bursts,
              "burst_days": burst_days, "zipf_exponent": zipf_exponent,
              "origin": origin}
    return PlantedFixture(commentset=commentset, topic_of=topic_of,
                          song_ids=song_ids, topic_vocabs=vocabs,
                          burst_bounds=burst_bounds, params=params)
