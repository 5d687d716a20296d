"""Regenerate the golden fixtures consumed by the frontend tests.

Captures real HTTP responses from the explorer service for a small planted
corpus: the song list, one song's layout document, every comment payload in
that layout, and the layout after posting one comment (one extra cell).

Run from the repository root:

    python3 frontend/scripts/generate_fixtures.py
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from commentmap.fixtures import generate_planted_corpus
from commentmap.pipeline import PipelineConfig
from commentmap.service import create_app

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures"

CONFIG = PipelineConfig(ensemble_size=2, topics_per_model=4, lda_iters=40,
                        min_len=3, seed=7)


def dump(name, payload):
    path = OUT / name
    path.write_text(json.dumps(payload, ensure_ascii=False, indent=1,
                               sort_keys=True) + "\n", "utf-8")
    print(f"wrote {path}")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    fixture = generate_planted_corpus(n_topics=3, n_comments=120, n_songs=1, seed=7)
    with tempfile.TemporaryDirectory() as data_dir:
        app = create_app(fixture.commentset, CONFIG, data_dir=data_dir)
        with TestClient(app) as client:
            dump("golden_songs.json", client.get("/songs").json())
            layout = client.get("/songs/S1/layout").json()
            dump("golden_layout.json", layout)
            comments = {}
            for cell in layout["cells"]:
                cid = cell["comment_id"]
                comments[cid] = client.get(f"/comments/{cid}").json()
            dump("golden_comments.json", comments)
            posted = client.post("/songs/S1/comments",
                                 json={"text": "golden melody reprise",
                                       "user_id": "golden"}).json()
            plus1 = client.get("/songs/S1/layout").json()
            assert len(plus1["cells"]) == len(layout["cells"]) + 1
            dump("golden_layout_plus1.json", plus1)
            dump("golden_posted_comment.json", posted)


if __name__ == "__main__":
    main()
