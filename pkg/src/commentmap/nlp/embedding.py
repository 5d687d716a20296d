"""Embedding providers and cosine similarity.

The hash-based provider maps each token to a pseudo-random unit vector seeded
from the token bytes, so similarities are deterministic and reproducible
without any model dependency. A real sentence-encoder can be dropped in by
implementing the same two-member interface.
"""

from __future__ import annotations

import hashlib
from typing import Protocol

import numpy as np

from .tokenize import tokenize


class EmbeddingProvider(Protocol):
    dim: int

    def embed(self, text: str) -> np.ndarray:
        ...


def cosine_similarity(u, v) -> float:
    """u.v / (|u||v|), clamped to [-1, 1]. Raises on zero vectors or dim mismatch."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise ValueError("cosine similarity undefined for zero vectors")
    return float(np.clip(np.dot(u, v) / (nu * nv), -1.0, 1.0))


def _token_seed(token: str) -> int:
    digest = hashlib.blake2b(token.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


class HashEmbeddingProvider:
    """Deterministic token-hash embeddings; comment vector = normalized token mean."""

    def __init__(self, dim: int = 64):
        if dim < 1:
            raise ValueError("dim must be >= 1")
        self.dim = dim
        self._cache: dict[str, np.ndarray] = {}

    def _token_vector(self, token: str) -> np.ndarray:
        vec = self._cache.get(token)
        if vec is None:
            rng = np.random.Generator(np.random.PCG64(_token_seed(token)))
            vec = rng.standard_normal(self.dim)
            vec /= np.linalg.norm(vec)
            self._cache[token] = vec
        return vec

    def embed(self, text: str) -> np.ndarray:
        tokens = tokenize(text)
        if not tokens:
            return np.zeros(self.dim)
        mean = np.mean([self._token_vector(t) for t in tokens], axis=0)
        norm = np.linalg.norm(mean)
        if norm == 0.0:
            return np.zeros(self.dim)
        return mean / norm
