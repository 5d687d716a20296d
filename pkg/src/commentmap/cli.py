"""Command-line driver: ingest, stats, analyze, layout, tags, serve, gen-fixture.

Every flag has a config-file equivalent (JSON, passed via --config);
precedence is flags > config file > defaults.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import corpus as corpus_mod
from .errors import CommentMapError
from .fixtures import generate_planted_corpus
from .mapgen.layout import layout_to_bytes
from .pipeline import PipelineConfig, build_layout, compute_labels
from .tags import generate_preview_tags

# CLI flag name -> PipelineConfig field
_CONFIG_FLAGS = {
    "seed": "seed",
    "bins": "bin_width",
    "max_error": "max_error",
    "min_len": "min_len",
    "eps": "dbscan_eps",
    "min_pts": "dbscan_min_pts",
    "k_topics": "topics_per_model",
    "ensemble": "ensemble_size",
    "iters": "lda_iters",
    "threshold": "keyword_threshold",
    "smooth": "smooth_window",
    "mode": "assignment_mode",
}


def _add_config_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--config", help="JSON config file (flags override it)")
    parser.add_argument("--seed", type=int, help="master random seed")
    parser.add_argument("--bins", type=int, help="time bin width in seconds")
    parser.add_argument("--max-error", dest="max_error", type=float,
                        help="absolute segmentation error threshold")
    parser.add_argument("--min-len", dest="min_len", type=int,
                        help="minimum segment length in bins")
    parser.add_argument("--eps", type=float, help="DBSCAN epsilon")
    parser.add_argument("--min-pts", dest="min_pts", type=int, help="DBSCAN min points")
    parser.add_argument("--k-topics", dest="k_topics", type=int,
                        help="topics per LDA model")
    parser.add_argument("--ensemble", type=int, help="number of LDA models")
    parser.add_argument("--iters", type=int, help="Gibbs iterations per model")
    parser.add_argument("--threshold", type=float, help="keyword similarity threshold")
    parser.add_argument("--smooth", type=int, help="count smoothing window (bins)")
    parser.add_argument("--mode", choices=["frontier", "global"],
                        help="comment assignment mode")


def _resolve_config(args) -> PipelineConfig:
    values = {}
    if getattr(args, "config", None):
        file_cfg = json.loads(Path(args.config).read_text("utf-8"))
        valid = {f.name for f in dataclasses.fields(PipelineConfig)}
        unknown = set(file_cfg) - valid
        if unknown:
            raise CommentMapError(f"unknown config keys: {sorted(unknown)}")
        values.update(file_cfg)
    for flag, field in _CONFIG_FLAGS.items():
        flag_value = getattr(args, flag, None)
        if flag_value is not None:
            values[field] = flag_value
    return PipelineConfig(**values)


def _load_corpus(args):
    songs_path = getattr(args, "songs_meta", None)
    if songs_path is None:
        candidate = Path(args.infile).with_suffix(Path(args.infile).suffix + ".songs.json")
        if candidate.exists():
            songs_path = candidate
    return corpus_mod.ingest(args.infile, format=args.format, songs_path=songs_path)


def _cmd_ingest(args) -> int:
    cset = _load_corpus(args)
    if args.out:
        corpus_mod.export(cset, args.out)
    print(f"ingested {len(cset)} comments across {len(cset.songs)} songs")
    return 0


def _cmd_stats(args) -> int:
    cset = _load_corpus(args)
    stats = corpus_mod.compute_stats(cset)
    print(json.dumps(dataclasses.asdict(stats), indent=2))
    return 0


def _cmd_analyze(args) -> int:
    cset = _load_corpus(args)
    config = _resolve_config(args)
    labels = compute_labels(cset.comments, config)
    out = {}
    for cid, lbl in labels.items():
        out[cid] = {
            "sentiment": lbl.sentiment.value,
            "sentiment_confidence": round(lbl.sentiment_confidence, 4),
            "mechanism": lbl.mechanism.value,
            "mechanism_confidence": round(lbl.mechanism_confidence, 4),
            "keywords": [{"word": k.word, "similarity": round(k.similarity, 4)}
                         for k in lbl.keywords],
        }
    payload = json.dumps(out, ensure_ascii=False, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(payload, "utf-8")
    else:
        print(payload)
    return 0


def _cmd_layout(args) -> int:
    cset = _load_corpus(args)
    config = _resolve_config(args)
    doc = build_layout(cset, args.song, config)
    data = layout_to_bytes(doc)
    if args.out:
        Path(args.out).write_bytes(data)
        print(f"wrote layout with {len(doc['cells'])} cells to {args.out}")
    else:
        sys.stdout.buffer.write(data)
    return 0


def _cmd_tags(args) -> int:
    cset = _load_corpus(args)
    config = _resolve_config(args)
    labels = compute_labels(cset.comments, config)
    keywords = {cid: lbl.keywords for cid, lbl in labels.items()}
    out = {}
    for sid in sorted(cset.songs):
        tag_set = generate_preview_tags(cset.songs[sid], keywords)
        out[sid] = [{"word": w, "count": c} for w, c in tag_set.tags]
    payload = json.dumps(out, ensure_ascii=False, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(payload, "utf-8")
    else:
        print(payload)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    cset = _load_corpus(args)
    config = _resolve_config(args)
    app = create_app(cset, config, data_dir=args.data_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _cmd_gen_fixture(args) -> int:
    fixture = generate_planted_corpus(
        n_topics=args.topics, n_comments=args.comments, n_songs=args.songs,
        seed=args.seed if args.seed is not None else 0)
    fixture.write(args.out)
    print(f"wrote {args.comments} comments ({args.topics} topics, "
          f"{args.songs} songs) to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="commentmap",
                                     description="comment map layout engine")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, out_required=False):
        p.add_argument("--in", dest="infile", required=True, help="corpus file")
        p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
        p.add_argument("--songs-meta", dest="songs_meta",
                       help="optional songs metadata JSON")
        p.add_argument("--out", required=out_required, help="output path")

    p = sub.add_parser("ingest", help="validate and normalize a corpus")
    add_io(p)
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("stats", help="print corpus statistics")
    add_io(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("analyze", help="write sentiment/mechanism/keyword labels")
    add_io(p)
    _add_config_flags(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("layout", help="build a song's map layout document")
    add_io(p)
    p.add_argument("--song", required=True, help="song id")
    _add_config_flags(p)
    p.set_defaults(func=_cmd_layout)

    p = sub.add_parser("tags", help="write preview tags for all songs")
    add_io(p)
    _add_config_flags(p)
    p.set_defaults(func=_cmd_tags)

    p = sub.add_parser("serve", help="start the explorer HTTP service")
    add_io(p)
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--data-dir", dest="data_dir", default="data")
    _add_config_flags(p)
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("gen-fixture", help="generate a planted-topic corpus")
    p.add_argument("--topics", type=int, default=3)
    p.add_argument("--comments", type=int, default=600)
    p.add_argument("--songs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen_fixture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CommentMapError as exc:
        stage = getattr(exc, "stage", None)
        where = f" at stage {stage}" if stage else ""
        print(f"error{where}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
