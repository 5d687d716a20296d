"""Sentiment and induced-mechanism classification.

Ships two deterministic baselines (a lexicon vote for sentiment, a keyword
rule table for mechanisms) plus an HTTP client for plugging in a remote
model behind the same interface.
"""

from __future__ import annotations

import json
from enum import Enum
from functools import lru_cache
from importlib import resources
from typing import Protocol, Tuple

import requests

from ..errors import ClassifierTransportError
from .tokenize import tokenize


class SentimentLabel(str, Enum):
    ANGRY = "angry"
    NEUTRAL = "neutral"
    SAD = "sad"
    FEAR = "fear"
    SURPRISE = "surprise"
    HAPPY = "happy"


class MechanismLabel(str, Enum):
    MUSIC_EVALUATION = "music_evaluation"
    PERSONAL_MEMORY = "personal_memory"
    CONTEXTUAL_INFO = "contextual_info"
    OTHERS = "others"


class Classifier(Protocol):
    def classify(self, text: str) -> Tuple[object, float]:
        ...


def _load_json_data(name: str) -> dict:
    raw = resources.files("commentmap.nlp").joinpath(f"data/{name}").read_text("utf-8")
    return json.loads(raw)


@lru_cache(maxsize=1)
def sentiment_lexicon() -> dict:
    return {SentimentLabel(k): frozenset(v) for k, v in _load_json_data("sentiment_lexicon.json").items()}


@lru_cache(maxsize=1)
def mechanism_rules() -> dict:
    return {MechanismLabel(k): tuple(v) for k, v in _load_json_data("mechanism_rules.json").items()}


class LexiconSentimentClassifier:
    """Majority vote over per-class word lists; ties and no-hits fall to neutral."""

    def __init__(self, lexicon=None):
        self.lexicon = lexicon if lexicon is not None else sentiment_lexicon()

    def classify(self, text: str) -> Tuple[SentimentLabel, float]:
        tokens = tokenize(text)
        counts = {}
        total = 0
        for label, words in self.lexicon.items():
            hits = sum(1 for t in tokens if t in words)
            if hits:
                counts[label] = hits
                total += hits
        if not counts:
            return SentimentLabel.NEUTRAL, 0.0
        best = max(counts.values())
        winners = [label for label, c in counts.items() if c == best]
        if len(winners) > 1:
            return SentimentLabel.NEUTRAL, 0.0
        return winners[0], best / total


def _pattern_hits(text_lower: str, tokens: set, patterns) -> int:
    hits = 0
    for pat in patterns:
        if " " in pat or not pat.isascii():
            if pat in text_lower:
                hits += 1
        elif pat in tokens:
            hits += 1
    return hits


# Priority used to break ties between rule categories.
_MECHANISM_PRIORITY = (
    MechanismLabel.MUSIC_EVALUATION,
    MechanismLabel.PERSONAL_MEMORY,
    MechanismLabel.CONTEXTUAL_INFO,
)


class RuleMechanismClassifier:
    """Keyword-rule table; unmatched text falls to the `others` category."""

    def __init__(self, rules=None):
        self.rules = rules if rules is not None else mechanism_rules()

    def classify(self, text: str) -> Tuple[MechanismLabel, float]:
        text_lower = text.lower()
        tokens = set(tokenize(text))
        counts = {}
        total = 0
        for label in _MECHANISM_PRIORITY:
            hits = _pattern_hits(text_lower, tokens, self.rules.get(label, ()))
            if hits:
                counts[label] = hits
                total += hits
        if not counts:
            return MechanismLabel.OTHERS, 0.0
        best = max(counts.values())
        for label in _MECHANISM_PRIORITY:
            if counts.get(label) == best:
                return label, best / total
        raise AssertionError("unreachable")


class RemoteClassifier:
    """Client for an external model speaking the /classify HTTP contract.

    Transport failures are raised after the configured retries, never
    silently defaulted.
    """

    def __init__(self, base_url: str, task: str, label_type, timeout: float = 10.0,
                 retries: int = 2, session=None):
        if task not in ("sentiment", "mechanism"):
            raise ValueError("task must be 'sentiment' or 'mechanism'")
        self.base_url = base_url.rstrip("/")
        self.task = task
        self.label_type = label_type
        self.timeout = timeout
        self.retries = retries
        self.session = session or requests.Session()

    def classify_many(self, texts) -> list:
        payload = {"task": self.task, "texts": list(texts)}
        last_error = None
        for _ in range(self.retries + 1):
            try:
                resp = self.session.post(f"{self.base_url}/classify", json=payload,
                                         timeout=self.timeout)
                resp.raise_for_status()
                body = resp.json()
                labels = body["labels"]
                confs = body["confidences"]
                if len(labels) != len(texts) or len(confs) != len(texts):
                    raise ClassifierTransportError("response length mismatch")
                return [(self.label_type(lbl), float(c)) for lbl, c in zip(labels, confs)]
            except ClassifierTransportError:
                raise
            except (requests.RequestException, KeyError, ValueError) as exc:
                last_error = exc
        raise ClassifierTransportError(f"remote classifier failed: {last_error}")

    def classify(self, text: str):
        return self.classify_many([text])[0]


def classify_sentiment(comment, classifier: Classifier | None = None) -> Tuple[SentimentLabel, float]:
    classifier = classifier or LexiconSentimentClassifier()
    label, conf = classifier.classify(comment.text)
    return SentimentLabel(label), conf


def classify_mechanism(comment, classifier: Classifier | None = None) -> Tuple[MechanismLabel, float]:
    classifier = classifier or RuleMechanismClassifier()
    label, conf = classifier.classify(comment.text)
    return MechanismLabel(label), conf
