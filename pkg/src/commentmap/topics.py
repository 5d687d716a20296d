"""Ensemble LDA topic detection with DBSCAN grouping into stable topics.

Each of M independently seeded collapsed-Gibbs LDA runs contributes K
topic-word rows; rows are clustered under Jensen-Shannon distance and each
cluster is merged into one stable topic by averaging its distributions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit
from scipy.spatial.distance import jensenshannon
from scipy.special import gammaln

from .nlp.tokenize import tokenize


@dataclass
class TopicModel:
    """One LDA fit: row-normalized topic-word and doc-topic matrices."""

    K: int
    vocab: tuple
    topic_word: np.ndarray   # K x V, rows sum to 1
    doc_topic: np.ndarray    # D x K, rows sum to 1
    seed: int
    log_likelihood: float


@dataclass
class TopicCandidate:
    """A single topic-word row from one ensemble member."""

    model_index: int
    topic_index: int
    seed: int
    dist: np.ndarray


@dataclass
class Topic:
    """A stable topic: merged word distribution plus assigned members."""

    id: int
    word_weights: dict
    top_words: tuple
    member_comment_ids: list = field(default_factory=list)
    merged_from: tuple = ()

    @property
    def prior_mass(self) -> int:
        return max(len(self.merged_from), 1)


@njit(cache=True)
def _gibbs_kernel(doc_ids, word_ids, D, V, K, alpha, beta, iters, seed):
    np.random.seed(seed)
    N = doc_ids.shape[0]
    z = np.empty(N, np.int32)
    ndk = np.zeros((D, K), np.int32)
    nkw = np.zeros((K, V), np.int32)
    nk = np.zeros(K, np.int64)
    for i in range(N):
        k = np.random.randint(0, K)
        z[i] = k
        ndk[doc_ids[i], k] += 1
        nkw[k, word_ids[i]] += 1
        nk[k] += 1
    probs = np.empty(K, np.float64)
    vbeta = V * beta
    for _ in range(iters):
        for i in range(N):
            d = doc_ids[i]
            w = word_ids[i]
            k = z[i]
            ndk[d, k] -= 1
            nkw[k, w] -= 1
            nk[k] -= 1
            total = 0.0
            for kk in range(K):
                p = (nkw[kk, w] + beta) / (nk[kk] + vbeta) * (ndk[d, kk] + alpha)
                probs[kk] = p
                total += p
            u = np.random.random() * total
            acc = 0.0
            knew = K - 1
            for kk in range(K):
                acc += probs[kk]
                if u < acc:
                    knew = kk
                    break
            z[i] = knew
            ndk[d, knew] += 1
            nkw[knew, w] += 1
            nk[knew] += 1
    return z, ndk, nkw


def _corpus_arrays(docs, vocab_index):
    doc_ids = []
    word_ids = []
    for d, doc in enumerate(docs):
        for tok in doc:
            w = vocab_index.get(tok)
            if w is not None:
                doc_ids.append(d)
                word_ids.append(w)
    return (np.asarray(doc_ids, dtype=np.int32),
            np.asarray(word_ids, dtype=np.int32))


def _joint_log_likelihood(nkw, beta):
    K, V = nkw.shape
    nk = nkw.sum(axis=1)
    ll = K * (gammaln(V * beta) - V * gammaln(beta))
    ll += gammaln(nkw + beta).sum() - gammaln(nk + V * beta).sum()
    return float(ll)


def train_lda(docs, K: int = 20, alpha: float | None = None, beta: float = 0.01,
              iters: int = 100, seed: int = 0) -> TopicModel:
    """Collapsed-Gibbs LDA over tokenized documents; deterministic per seed."""
    if not docs:
        raise ValueError("no documents")
    if K < 1:
        raise ValueError("K must be >= 1")
    if alpha is None:
        alpha = 50.0 / K
    vocab = tuple(sorted({tok for doc in docs for tok in doc}))
    if not vocab:
        raise ValueError("empty vocabulary")
    vocab_index = {w: i for i, w in enumerate(vocab)}
    doc_ids, word_ids = _corpus_arrays(docs, vocab_index)
    D, V = len(docs), len(vocab)
    _, ndk, nkw = _gibbs_kernel(doc_ids, word_ids, D, V, K,
                                float(alpha), float(beta), int(iters),
                                int(seed) % (2 ** 32))
    topic_word = (nkw + beta) / (nkw.sum(axis=1, keepdims=True) + V * beta)
    doc_topic = (ndk + alpha) / (ndk.sum(axis=1, keepdims=True) + K * alpha)
    return TopicModel(K=K, vocab=vocab, topic_word=topic_word, doc_topic=doc_topic,
                      seed=seed, log_likelihood=_joint_log_likelihood(nkw, beta))


def ensemble_topics(docs, M: int = 8, K: int = 20, seeds=None,
                    alpha: float | None = None, beta: float = 0.01,
                    iters: int = 100):
    """Concatenated topic rows from M independent runs, tagged by source model.

    Returns ``(candidates, models)``; the models are kept for the all-noise
    fallback of the grouping stage.
    """
    if seeds is None:
        seeds = list(range(M))
    if len(seeds) != M:
        raise ValueError(f"need {M} seeds, got {len(seeds)}")
    candidates = []
    models = []
    for m, seed in enumerate(seeds):
        model = train_lda(docs, K=K, alpha=alpha, beta=beta, iters=iters, seed=seed)
        models.append(model)
        for k in range(K):
            candidates.append(TopicCandidate(model_index=m, topic_index=k,
                                             seed=seed, dist=model.topic_word[k]))
    return candidates, models


def js_distance_matrix(rows) -> np.ndarray:
    n = len(rows)
    dist = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            d = float(jensenshannon(rows[i], rows[j], base=2))
            if np.isnan(d):
                d = 0.0
            dist[i, j] = dist[j, i] = d
    return dist


def dbscan_labels(dist: np.ndarray, eps: float, min_pts: int) -> np.ndarray:
    """Deterministic DBSCAN over a distance matrix; -1 marks noise.

    Neighborhoods include the point itself. Clusters are the connected
    components of the core-point graph, numbered by their smallest core
    index; border points join the cluster of their smallest-index core
    neighbor.
    """
    n = dist.shape[0]
    neighbors = [np.flatnonzero(dist[i] <= eps) for i in range(n)]
    core = np.array([len(nb) >= min_pts for nb in neighbors])
    labels = np.full(n, -1, dtype=int)
    cluster = 0
    for i in range(n):
        if not core[i] or labels[i] != -1:
            continue
        stack = [i]
        labels[i] = cluster
        while stack:
            p = stack.pop()
            for q in neighbors[p]:
                if core[q] and labels[q] == -1:
                    labels[q] = cluster
                    stack.append(q)
        cluster += 1
    for i in range(n):
        if core[i] or labels[i] != -1:
            continue
        core_nb = [q for q in neighbors[i] if core[q]]
        if core_nb:
            labels[i] = labels[min(core_nb)]
    return labels


def _topic_from_dist(topic_id, vocab, dist, merged_from=(), top_n: int = 20) -> Topic:
    dist = np.asarray(dist, dtype=float)
    dist = dist / dist.sum()
    order = sorted(range(len(vocab)), key=lambda i: (-dist[i], vocab[i]))
    top = tuple((vocab[i], float(dist[i])) for i in order[:top_n] if dist[i] > 0)
    weights = {vocab[i]: float(dist[i]) for i in range(len(vocab))}
    return Topic(id=topic_id, word_weights=weights, top_words=top,
                 merged_from=tuple(merged_from))


def group_topics_dbscan(candidates, vocab, eps: float = 0.35, min_pts: int = 2) -> list:
    """DBSCAN over candidate rows; each cluster merges into one stable topic.

    Noise rows are dropped; an empty result signals the caller to fall back
    to a single model's topics.
    """
    if eps <= 0:
        raise ValueError("eps must be > 0")
    if min_pts < 1:
        raise ValueError("min_pts must be >= 1")
    if not candidates:
        return []
    rows = [c.dist for c in candidates]
    labels = dbscan_labels(js_distance_matrix(rows), eps, min_pts)
    topics = []
    for cluster_id in range(labels.max() + 1 if labels.size else 0):
        members = np.flatnonzero(labels == cluster_id)
        merged = np.mean([rows[i] for i in members], axis=0)
        topics.append(_topic_from_dist(cluster_id, vocab, merged, merged_from=members))
    return topics


def topics_from_model(model: TopicModel) -> list:
    """All K rows of one model as stable topics (all-noise fallback)."""
    return [_topic_from_dist(k, model.vocab, model.topic_word[k], merged_from=(k,))
            for k in range(model.K)]


def median_likelihood_model(models) -> TopicModel:
    order = sorted(range(len(models)), key=lambda i: (models[i].log_likelihood, i))
    return models[order[(len(models) - 1) // 2]]


def assign_topic(comment, stable_topics) -> int:
    """Argmax over topics of summed word weights across the comment's tokens.

    Ties break to the lowest topic id; a comment sharing no vocabulary with
    any topic goes to the topic with the highest prior mass.
    """
    if not stable_topics:
        raise ValueError("no stable topics")
    text = comment.text if hasattr(comment, "text") else str(comment)
    tokens = tokenize(text)
    best_id = None
    best_score = 0.0
    any_overlap = False
    for topic in sorted(stable_topics, key=lambda t: t.id):
        score = sum(topic.word_weights.get(tok, 0.0) for tok in tokens)
        if score > 0:
            any_overlap = True
        if best_id is None or score > best_score:
            best_id = topic.id
            best_score = score
    if not any_overlap:
        return max(stable_topics, key=lambda t: (t.prior_mass, -t.id)).id
    return best_id
