"""HTTP service: songs with preview tags, layouts, raw comments, posting.

Layouts are cached in content-addressed files under the data directory; an
entry is served only when its stored hash matches the hash of the current
comment ids and configuration, so stale documents are never returned.
Writes are serialized per song and cache files are replaced atomically.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
import uuid
from pathlib import Path

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from .corpus import Comment, CommentSet
from .errors import PipelineError
from .pipeline import PipelineConfig, build_layout, compute_labels
from .mapgen.layout import layout_to_bytes
from .tags import generate_preview_tags

MAX_COMMENT_CHARS = 280


class PostCommentBody(BaseModel):
    text: str
    user_id: str | None = None


def content_hash(song_id: str, comment_ids, config: PipelineConfig) -> str:
    payload = json.dumps({
        "song_id": song_id,
        "comment_ids": sorted(comment_ids),
        "config": config.to_dict(),
    }, sort_keys=True)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class LayoutStore:
    """File-backed layout cache; one JSON envelope per song."""

    def __init__(self, data_dir):
        self.dir = Path(data_dir) / "layouts"
        self.dir.mkdir(parents=True, exist_ok=True)

    def _path(self, song_id: str) -> Path:
        safe = hashlib.sha1(song_id.encode("utf-8")).hexdigest()[:16]
        return self.dir / f"{safe}.json"

    def load(self, song_id: str, expected_hash: str):
        path = self._path(song_id)
        if not path.exists():
            return None
        try:
            envelope = json.loads(path.read_text("utf-8"))
        except (OSError, json.JSONDecodeError):
            return None
        if envelope.get("content_hash") != expected_hash:
            return None
        return envelope["layout"]

    def store(self, song_id: str, hash_value: str, layout: dict) -> None:
        envelope = {"content_hash": hash_value, "created_at": time.time(),
                    "layout": layout}
        path = self._path(song_id)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(envelope, ensure_ascii=False), "utf-8")
        os.replace(tmp, path)


class ExplorerState:
    """Mutable service state: corpus overlay, labels, tags, cache, locks."""

    def __init__(self, commentset: CommentSet, config: PipelineConfig, data_dir):
        self.config = config
        self.store = LayoutStore(data_dir)
        self.write_lock = threading.Lock()
        self._song_locks: dict = {}
        self._song_locks_guard = threading.Lock()
        self.commentset = commentset
        self.labels = compute_labels(commentset.comments, config)
        self._refresh_tags()

    def _refresh_tags(self, song_id: str | None = None):
        keywords = {cid: lbl.keywords for cid, lbl in self.labels.items()}
        songs = self.commentset.songs
        targets = [song_id] if song_id else list(songs)
        if not hasattr(self, "tags"):
            self.tags = {}
        for sid in targets:
            self.tags[sid] = generate_preview_tags(songs[sid], keywords)

    def song_lock(self, song_id: str) -> threading.Lock:
        with self._song_locks_guard:
            return self._song_locks.setdefault(song_id, threading.Lock())

    def layout_bytes(self, song_id: str) -> bytes:
        song = self.commentset.song(song_id)
        expected = content_hash(song_id, song.comment_ids, self.config)
        cached = self.store.load(song_id, expected)
        if cached is not None:
            return layout_to_bytes(cached)
        with self.song_lock(song_id):
            song = self.commentset.song(song_id)
            expected = content_hash(song_id, song.comment_ids, self.config)
            cached = self.store.load(song_id, expected)
            if cached is not None:
                return layout_to_bytes(cached)
            doc = build_layout(self.commentset, song_id, self.config, labels=self.labels)
            self.store.store(song_id, expected, doc)
            return layout_to_bytes(doc)

    def add_comment(self, song_id: str, text: str, user_id: str | None) -> Comment:
        with self.write_lock:
            comment = Comment(
                id=f"posted-{uuid.uuid4().hex[:12]}",
                song_id=song_id,
                text=text,
                timestamp=int(time.time()),
                like_count=0,
                user_id=user_id,
            )
            self.commentset = self.commentset.with_comment(comment)
            self.labels.update(compute_labels([comment], self.config))
            self._refresh_tags(song_id)
            return comment


def _comment_payload(comment: Comment, labels) -> dict:
    lbl = labels[comment.id]
    return {
        "id": comment.id,
        "song_id": comment.song_id,
        "text": comment.text,
        "timestamp": comment.timestamp,
        "like_count": comment.like_count,
        "user_id": comment.user_id,
        "sentiment": lbl.sentiment.value,
        "sentiment_confidence": round(lbl.sentiment_confidence, 4),
        "mechanism": lbl.mechanism.value,
        "mechanism_confidence": round(lbl.mechanism_confidence, 4),
        "keywords": [{"word": k.word, "similarity": round(k.similarity, 4)}
                     for k in lbl.keywords],
    }


def create_app(commentset: CommentSet, config: PipelineConfig | None = None,
               data_dir="data", cors_origins=("*",)) -> FastAPI:
    state = ExplorerState(commentset, config or PipelineConfig(), data_dir)
    app = FastAPI(title="commentmap explorer")
    app.state.explorer = state
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    def error(status: int, message: str, stage: str | None = None) -> JSONResponse:
        body = {"error": message}
        if stage:
            body["stage"] = stage
        return JSONResponse(status_code=status, content=body)

    @app.exception_handler(RequestValidationError)
    async def malformed_body(_request, exc: RequestValidationError):
        return error(400, f"invalid request body: {exc.errors()[0].get('msg', '')}")

    @app.get("/songs")
    def get_songs():
        out = []
        for sid in sorted(state.commentset.songs):
            song = state.commentset.songs[sid]
            tags = state.tags[sid]
            out.append({
                "id": song.id,
                "title": song.title,
                "artist": song.artist,
                "album": song.album,
                "comment_count": len(song.comment_ids),
                "tags": [{"word": w, "count": c} for w, c in tags.tags],
            })
        return out

    @app.get("/songs/{song_id}/layout")
    def get_layout(song_id: str):
        if song_id not in state.commentset.songs:
            return error(404, f"unknown song {song_id!r}")
        try:
            payload = state.layout_bytes(song_id)
        except PipelineError as exc:
            return error(500, str(exc), stage=exc.stage)
        return Response(content=payload, media_type="application/json")

    @app.get("/comments/{comment_id}")
    def get_comment(comment_id: str):
        if comment_id not in state.commentset:
            return error(404, f"unknown comment {comment_id!r}")
        return _comment_payload(state.commentset.get(comment_id), state.labels)

    @app.post("/songs/{song_id}/comments", status_code=201)
    def post_comment(song_id: str, body: PostCommentBody):
        if song_id not in state.commentset.songs:
            return error(404, f"unknown song {song_id!r}")
        text = body.text.strip()
        if not text:
            return error(400, "comment text must be non-empty")
        if len(body.text) > MAX_COMMENT_CHARS:
            return error(400, f"comment text exceeds {MAX_COMMENT_CHARS} characters")
        comment = state.add_comment(song_id, body.text, body.user_id)
        return _comment_payload(comment, state.labels)

    return app
