"""commentmap: map-metaphor layout engine for timestamped comment corpora.

Turns a corpus of timestamped comments into an explorable map document:
time periods become countries, topics become counties, and every comment
occupies one sentiment-colored hexagonal cell, with a railway tracing the
chronological order of the periods.
"""

from .corpus import Comment, CommentSet, CorpusStats, Song, compute_stats, export, ingest
from .pipeline import PipelineConfig, build_layout, compute_labels
from .tags import PreviewTagSet, generate_preview_tags

__version__ = "0.1.0"

__all__ = [
    "Comment",
    "CommentSet",
    "CorpusStats",
    "PipelineConfig",
    "PreviewTagSet",
    "Song",
    "build_layout",
    "compute_labels",
    "compute_stats",
    "export",
    "generate_preview_tags",
    "ingest",
    "__version__",
]
