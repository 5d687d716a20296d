"""Preview tags: the eight highest-frequency comment keywords per song."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .nlp.tokenize import default_stopwords, tokenize

MAX_TAGS = 8


@dataclass(frozen=True)
class PreviewTagSet:
    song_id: str
    tags: tuple   # ((word, frequency), ...) frequency non-increasing


def generate_preview_tags(song, keywords_by_comment, stopwords=None) -> PreviewTagSet:
    """Count extracted keywords across a song's comments and keep the top 8.

    Stopwords and song-title tokens are excluded; ties break
    lexicographically. A song with no keyworded comments gets an empty set.
    """
    if stopwords is None:
        stopwords = default_stopwords()
    title_tokens = set(tokenize(song.title))
    counts: Counter = Counter()
    for comment_id in song.comment_ids:
        for kw in keywords_by_comment.get(comment_id, ()):
            word = kw.word if hasattr(kw, "word") else str(kw)
            if word in stopwords or word in title_tokens:
                continue
            counts[word] += 1
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return PreviewTagSet(song_id=song.id, tags=tuple(ranked[:MAX_TAGS]))
