"""Tokenization, stopwords, and emoticon detection.

Latin-script text is split on word boundaries; CJK runs are segmented with a
shipped dictionary using greedy longest-match, falling back to single
characters for out-of-dictionary spans.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)

_CJK_RANGES = (
    (0x3400, 0x4DBF),   # CJK extension A
    (0x4E00, 0x9FFF),   # CJK unified ideographs
    (0xF900, 0xFAFF),   # CJK compatibility ideographs
)

# Unicode blocks treated as emoji for emoticon detection.
_EMOJI_RANGES = (
    (0x1F300, 0x1FAFF),
    (0x2600, 0x27BF),
    (0x1F000, 0x1F0FF),
    (0xFE00, 0xFE0F),
    (0x2B00, 0x2BFF),
)


def _read_data_lines(name: str) -> list:
    text = resources.files("commentmap.nlp").joinpath(f"data/{name}").read_text("utf-8")
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def is_cjk(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _CJK_RANGES)


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset:
    return frozenset(_read_data_lines("stopwords.txt"))


class CjkSegmenter:
    """Greedy longest-match segmenter over a fixed word list."""

    def __init__(self, words):
        self.words = set(words)
        self.max_len = max((len(w) for w in self.words), default=1)

    def segment(self, run: str) -> list:
        tokens = []
        i = 0
        n = len(run)
        while i < n:
            match = run[i]
            for length in range(min(self.max_len, n - i), 1, -1):
                cand = run[i:i + length]
                if cand in self.words:
                    match = cand
                    break
            tokens.append(match)
            i += len(match)
        return tokens


@lru_cache(maxsize=1)
def default_segmenter() -> CjkSegmenter:
    return CjkSegmenter(_read_data_lines("cjk_words.txt"))


def tokenize(text: str, segmenter: CjkSegmenter | None = None) -> list:
    """Lowercased tokens; stopwords retained (filtering is the caller's choice)."""
    if not text:
        return []
    if segmenter is None:
        segmenter = default_segmenter()
    text = text.lower()
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        if is_cjk(text[i]):
            j = i
            while j < n and is_cjk(text[j]):
                j += 1
            tokens.extend(segmenter.segment(text[i:j]))
            i = j
        else:
            j = i
            while j < n and not is_cjk(text[j]):
                j += 1
            tokens.extend(_WORD_RE.findall(text[i:j]))
            i = j
    return tokens


def content_tokens(text: str, stopwords=None) -> list:
    """Tokens with stopwords removed (order and duplicates preserved)."""
    if stopwords is None:
        stopwords = default_stopwords()
    return [t for t in tokenize(text) if t not in stopwords]


class EmoticonDetector:
    """Detects emoticons via literal patterns and Unicode emoji blocks."""

    def __init__(self, patterns):
        self.patterns = tuple(patterns)

    def contains_emoticon(self, text: str) -> bool:
        for ch in text:
            cp = ord(ch)
            if any(lo <= cp <= hi for lo, hi in _EMOJI_RANGES):
                return True
        return any(p in text for p in self.patterns)


@lru_cache(maxsize=1)
def default_emoticon_detector() -> EmoticonDetector:
    return EmoticonDetector(_read_data_lines("emoticons.txt"))
