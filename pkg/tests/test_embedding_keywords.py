import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commentmap.corpus import Comment
from commentmap.nlp.embedding import HashEmbeddingProvider, cosine_similarity
from commentmap.nlp.keywords import extract_keywords
from commentmap.nlp.tokenize import default_stopwords, tokenize


def make_comment(text):
    return Comment(id="c1", song_id="S1", text=text, timestamp=1)


class TestCosine:
    def test_identity(self):
        assert cosine_similarity([1, 0], [1, 0]) == pytest.approx(1.0)

    def test_orthogonal(self):
        assert cosine_similarity([1, 0], [0, 1]) == pytest.approx(0.0)

    def test_analytic_sqrt2(self):
        assert cosine_similarity([1, 1], [1, 0]) == pytest.approx(math.sqrt(2) / 2, abs=1e-9)

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError, match="zero"):
            cosine_similarity([0, 0], [1, 0])

    def test_dim_mismatch_rejected(self):
        with pytest.raises(ValueError, match="mismatch"):
            cosine_similarity([1, 0], [1, 0, 0])

    @given(st.lists(st.floats(-100, 100), min_size=2, max_size=8),
           st.floats(0.1, 50))
    def test_self_and_scale_invariance(self, values, scale):
        v = np.asarray(values)
        if np.linalg.norm(v) < 1e-6:
            return
        assert cosine_similarity(v, v) == pytest.approx(1.0, abs=1e-9)
        assert cosine_similarity(v, v * scale) == pytest.approx(1.0, abs=1e-9)


class TestHashProvider:
    def test_deterministic_across_instances(self):
        a = HashEmbeddingProvider(dim=32)
        b = HashEmbeddingProvider(dim=32)
        assert np.array_equal(a.embed("melody rain"), b.embed("melody rain"))

    def test_unit_norm_tokens(self):
        p = HashEmbeddingProvider(dim=16)
        assert np.linalg.norm(p.embed("melody")) == pytest.approx(1.0)

    def test_empty_text_is_zero_vector(self):
        p = HashEmbeddingProvider(dim=16)
        assert np.linalg.norm(p.embed("")) == 0.0


class EchoProvider:
    """Comment embedding equals the 'rain' token embedding exactly."""

    def __init__(self, dim=16):
        self.dim = dim
        self._hash = HashEmbeddingProvider(dim=dim)

    def embed(self, text):
        tokens = tokenize(text)
        if tokens == ["rain"] or len(tokens) > 1:
            return self._hash.embed("rain")
        return self._hash.embed(text)


def brute_force_keywords(comment, provider, k, threshold, stopwords):
    """Independent oracle: raw cosine ranking over all candidates."""
    candidates = {t for t in tokenize(comment.text) if t not in stopwords}
    doc = provider.embed(comment.text)
    if np.linalg.norm(doc) == 0:
        return []
    scored = []
    for w in sorted(candidates):
        v = provider.embed(w)
        nv, nd = np.linalg.norm(v), np.linalg.norm(doc)
        if nv == 0:
            continue
        sim = float(np.clip(np.dot(v, doc) / (nv * nd), -1.0, 1.0))
        if sim >= threshold:
            scored.append((w, sim))
    scored.sort(key=lambda ws: (-ws[1], ws[0]))
    return scored[:k]


class TestExtractKeywords:
    def test_identical_embedding_ranks_first(self):
        provider = EchoProvider()
        kws = extract_keywords(make_comment("rain falling tonight"), provider, k=3,
                               threshold=0.0)
        assert kws[0].word == "rain"
        assert kws[0].similarity == pytest.approx(1.0)

    def test_threshold_filters_and_orders(self):
        class FixedProvider:
            dim = 4
            vectors = {
                "alpha": np.array([1.0, 0, 0, 0]),
                "beta": np.array([0.5, math.sqrt(0.75), 0, 0]),
                "gamma": np.array([0.2, 0, math.sqrt(0.96), 0]),
            }

            def embed(self, text):
                toks = tokenize(text)
                if len(toks) == 1 and toks[0] in self.vectors:
                    return self.vectors[toks[0]]
                return np.array([1.0, 0, 0, 0])

        # similarities: alpha 1.0, beta 0.5, gamma 0.2 against the doc vector
        kws = extract_keywords(make_comment("alpha beta gamma"), FixedProvider(),
                               k=5, threshold=0.3)
        assert [(k.word, round(k.similarity, 2)) for k in kws] == [("alpha", 1.0), ("beta", 0.5)]

    def test_stopword_only_comment_empty(self):
        provider = HashEmbeddingProvider(dim=16)
        assert extract_keywords(make_comment("the and of"), provider) == []

    def test_word_is_token_of_comment(self):
        provider = HashEmbeddingProvider(dim=32)
        comment = make_comment("melody of the rainy graduation night")
        tokens = set(tokenize(comment.text))
        for kw in extract_keywords(comment, provider, k=5, threshold=-1.0):
            assert kw.word in tokens

    def test_matches_brute_force_oracle_random(self):
        rng = np.random.default_rng(5)
        provider = HashEmbeddingProvider(dim=24)
        stopwords = default_stopwords()
        words = ["melody", "rain", "memory", "drama", "night", "the", "of",
                 "graduation", "summer", "chorus", "violin", "lyrics"]
        for trial in range(200):
            n = int(rng.integers(1, 9))
            text = " ".join(rng.choice(words, size=n))
            k = int(rng.integers(1, 6))
            threshold = float(rng.uniform(-0.2, 0.6))
            comment = make_comment(text)
            got = extract_keywords(comment, provider, k=k, threshold=threshold)
            expected = brute_force_keywords(comment, provider, k, threshold, stopwords)
            assert [(kw.word, kw.similarity) for kw in got] == expected

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.sampled_from(["rain", "melody", "night", "the", "song",
                                     "memory", "tv", "drama"]),
                    min_size=1, max_size=10),
           st.integers(1, 6))
    def test_topk_property(self, words, k):
        provider = HashEmbeddingProvider(dim=16)
        comment = make_comment(" ".join(words))
        got = extract_keywords(comment, provider, k=k, threshold=-1.0)
        expected = brute_force_keywords(comment, provider, k, -1.0, default_stopwords())
        assert [(kw.word, kw.similarity) for kw in got] == expected
