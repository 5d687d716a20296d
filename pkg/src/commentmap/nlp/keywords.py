"""Embedding-based keyword extraction.

Candidate tokens are ranked by cosine similarity between their embedding and
the whole-comment embedding; the top-k at or above the threshold are kept.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import EmbeddingProvider, cosine_similarity
from .tokenize import default_stopwords, tokenize


@dataclass(frozen=True)
class Keyword:
    word: str
    similarity: float


def extract_keywords(comment, provider: EmbeddingProvider, k: int = 5,
                     threshold: float = 0.2, stopwords=None) -> list:
    """Top-k candidate tokens by similarity to the comment embedding.

    Candidates are the deduplicated non-stopword tokens of the comment.
    Results are sorted by similarity descending, ties broken lexicographically.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if stopwords is None:
        stopwords = default_stopwords()
    text = comment.text if hasattr(comment, "text") else str(comment)
    candidates = sorted({t for t in tokenize(text) if t not in stopwords})
    if not candidates:
        return []
    doc_vec = provider.embed(text)
    if np.linalg.norm(doc_vec) == 0.0:
        return []
    scored = []
    for word in candidates:
        vec = provider.embed(word)
        if np.linalg.norm(vec) == 0.0:
            continue
        sim = cosine_similarity(vec, doc_vec)
        if sim >= threshold:
            scored.append(Keyword(word, sim))
    scored.sort(key=lambda kw: (-kw.similarity, kw.word))
    return scored[:k]
