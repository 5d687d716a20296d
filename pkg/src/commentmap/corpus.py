"""Comment corpus: data types, ingestion, export, and descriptive statistics."""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .errors import IngestError

SENTENCE_SPLIT_RE = re.compile(r"[。！？!?.\n]+")


@dataclass(frozen=True)
class Comment:
    """One user comment with its raw attributes."""

    id: str
    song_id: str
    text: str
    timestamp: int
    like_count: int = 0
    user_id: Optional[str] = None

    def validate(self):
        if not self.id:
            raise ValueError("comment id must be non-empty")
        if not self.song_id:
            raise ValueError("song_id must be non-empty")
        if not self.text.strip():
            raise ValueError("text must be non-empty after trimming")
        if self.timestamp <= 0:
            raise ValueError("timestamp must be > 0")
        if self.like_count < 0:
            raise ValueError("like_count must be >= 0")

    def to_record(self) -> dict:
        rec = {
            "id": self.id,
            "song_id": self.song_id,
            "text": self.text,
            "timestamp": self.timestamp,
            "like_count": self.like_count,
        }
        if self.user_id is not None:
            rec["user_id"] = self.user_id
        return rec


@dataclass(frozen=True)
class Song:
    """Song metadata plus its comment ids ordered by timestamp."""

    id: str
    title: str
    artist: str = ""
    album: str = ""
    comment_ids: tuple = ()


@dataclass(frozen=True)
class CorpusStats:
    """Descriptive statistics over a comment set."""

    max_length: int
    avg_length: float
    vocabulary_size: int
    token_count: int
    sentence_count: int
    emoticon_sentence_count: int


class CommentSet:
    """Immutable collection of comments, sorted by (timestamp, id).

    Built once at ingest time; safe to share read-only across threads.
    """

    def __init__(self, comments: Iterable[Comment], song_meta: Optional[dict] = None):
        ordered = sorted(comments, key=lambda c: (c.timestamp, c.id))
        seen = set()
        for c in ordered:
            c.validate()
            if c.id in seen:
                raise IngestError(f"duplicate comment id {c.id!r}")
            seen.add(c.id)
        self._comments = tuple(ordered)
        self._by_id = {c.id: c for c in ordered}
        by_song: dict[str, list[str]] = {}
        for c in ordered:
            by_song.setdefault(c.song_id, []).append(c.id)
        meta = song_meta or {}
        self._songs = {}
        for sid in sorted(by_song):
            m = meta.get(sid, {})
            self._songs[sid] = Song(
                id=sid,
                title=m.get("title", sid),
                artist=m.get("artist", ""),
                album=m.get("album", ""),
                comment_ids=tuple(by_song[sid]),
            )

    def __len__(self):
        return len(self._comments)

    def __iter__(self):
        return iter(self._comments)

    @property
    def comments(self) -> tuple:
        return self._comments

    @property
    def songs(self) -> dict:
        return self._songs

    def get(self, comment_id: str) -> Comment:
        return self._by_id[comment_id]

    def __contains__(self, comment_id: str) -> bool:
        return comment_id in self._by_id

    def song(self, song_id: str) -> Song:
        return self._songs[song_id]

    def for_song(self, song_id: str) -> list:
        return [self._by_id[cid] for cid in self._songs[song_id].comment_ids]

    def with_comment(self, comment: Comment) -> "CommentSet":
        """Return a new set with one comment appended (metadata preserved)."""
        meta = {
            sid: {"title": s.title, "artist": s.artist, "album": s.album}
            for sid, s in self._songs.items()
        }
        return CommentSet(list(self._comments) + [comment], song_meta=meta)


_CSV_HEADER = ["id", "song_id", "text", "timestamp", "like_count", "user_id"]


def _record_to_comment(rec: dict, line: int) -> Comment:
    for key in ("id", "song_id", "text", "timestamp"):
        if key not in rec or rec[key] in (None, ""):
            raise IngestError(f"missing field {key!r}", line=line)
    try:
        timestamp = int(rec["timestamp"])
        like_count = int(rec.get("like_count") or 0)
    except (TypeError, ValueError) as exc:
        raise IngestError(f"non-integer numeric field ({exc})", line=line) from exc
    user_id = rec.get("user_id") or None
    comment = Comment(
        id=str(rec["id"]),
        song_id=str(rec["song_id"]),
        text=str(rec["text"]),
        timestamp=timestamp,
        like_count=like_count,
        user_id=user_id,
    )
    try:
        comment.validate()
    except ValueError as exc:
        raise IngestError(str(exc), line=line) from exc
    return comment


def ingest(path, format: str = "jsonl", songs_path=None) -> CommentSet:
    """Load a comment corpus from a JSON-lines or CSV file.

    Records are validated one by one (errors report the line number),
    duplicate ids are rejected and the result is sorted by timestamp.
    ``songs_path`` may point to an optional JSON file with song metadata
    records ``{"id", "title", "artist", "album"}``.
    """
    path = Path(path)
    if not path.exists():
        raise IngestError(f"no such file: {path}")
    comments = []
    if format == "jsonl":
        with path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise IngestError(f"invalid JSON ({exc.msg})", line=lineno) from exc
                if not isinstance(rec, dict):
                    raise IngestError("record is not an object", line=lineno)
                comments.append(_record_to_comment(rec, lineno))
    elif format == "csv":
        with path.open(encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None:
                raise IngestError("empty file")
            missing = [c for c in _CSV_HEADER[:5] if c not in reader.fieldnames]
            if missing:
                raise IngestError(f"missing CSV columns: {missing}", line=1)
            for lineno, rec in enumerate(reader, start=2):
                comments.append(_record_to_comment(rec, lineno))
    else:
        raise ValueError(f"unknown format {format!r}")
    if not comments:
        raise IngestError("empty file")
    song_meta = None
    if songs_path is not None:
        with Path(songs_path).open(encoding="utf-8") as fh:
            entries = json.load(fh)
        song_meta = {e["id"]: e for e in entries}
    return CommentSet(comments, song_meta=song_meta)


def export(commentset: CommentSet, path) -> None:
    """Write a comment set back out as sorted JSON-lines (ingest round-trips)."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        for c in commentset:
            fh.write(json.dumps(c.to_record(), ensure_ascii=False, sort_keys=True))
            fh.write("\n")


def split_sentences(text: str) -> list:
    """Split on CJK and ASCII sentence terminators plus newlines."""
    return [s for s in SENTENCE_SPLIT_RE.split(text) if s.strip()]


def compute_stats(commentset: CommentSet, tokenizer=None, emoticon_detector=None) -> CorpusStats:
    """Compute corpus statistics (lengths in Unicode code points).

    The tokenizer defaults to the package tokenizer; the emoticon detector
    defaults to the shipped pattern list plus Unicode emoji blocks.
    """
    if len(commentset) == 0:
        raise ValueError("empty comment set")
    if tokenizer is None:
        from .nlp.tokenize import tokenize as tokenizer
    if emoticon_detector is None:
        from .nlp.tokenize import default_emoticon_detector

        emoticon_detector = default_emoticon_detector()
    lengths = [len(c.text) for c in commentset]
    vocab = set()
    token_count = 0
    sentence_count = 0
    emoticon_sentences = 0
    for c in commentset:
        tokens = tokenizer(c.text)
        token_count += len(tokens)
        vocab.update(tokens)
        for sentence in split_sentences(c.text):
            sentence_count += 1
            if emoticon_detector.contains_emoticon(sentence):
                emoticon_sentences += 1
    return CorpusStats(
        max_length=max(lengths),
        avg_length=sum(lengths) / len(lengths),
        vocabulary_size=len(vocab),
        token_count=token_count,
        sentence_count=sentence_count,
        emoticon_sentence_count=emoticon_sentences,
    )
