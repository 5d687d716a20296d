"""Text processing: tokenization, embeddings, keywords, and classifiers."""

from .classify import (
    Classifier,
    LexiconSentimentClassifier,
    MechanismLabel,
    RemoteClassifier,
    RuleMechanismClassifier,
    SentimentLabel,
    classify_mechanism,
    classify_sentiment,
)
from .embedding import EmbeddingProvider, HashEmbeddingProvider, cosine_similarity
from .keywords import Keyword, extract_keywords
from .tokenize import (
    CjkSegmenter,
    EmoticonDetector,
    content_tokens,
    default_emoticon_detector,
    default_stopwords,
    tokenize,
)

__all__ = [
    "Classifier",
    "CjkSegmenter",
    "EmbeddingProvider",
    "EmoticonDetector",
    "HashEmbeddingProvider",
    "Keyword",
    "LexiconSentimentClassifier",
    "MechanismLabel",
    "RemoteClassifier",
    "RuleMechanismClassifier",
    "SentimentLabel",
    "classify_mechanism",
    "classify_sentiment",
    "content_tokens",
    "cosine_similarity",
    "default_emoticon_detector",
    "default_stopwords",
    "extract_keywords",
    "tokenize",
]
