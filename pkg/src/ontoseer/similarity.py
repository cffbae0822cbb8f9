"""String and token-set similarity measures.

All measures are case-insensitive: inputs are lowercased before comparison.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

_WINKLER_SCALING = 0.1
_WINKLER_MAX_PREFIX = 4

_WORD_RE = re.compile(r"[A-Za-z0-9]+")


def jaro(a: str, b: str) -> float:
    """Jaro similarity in [0, 1].

    Matches are counted within a window of floor(max(len)/2) - 1, and the
    transposition count is half the number of matched characters that
    disagree in order.
    """
    a = a.lower()
    b = b.lower()
    if a == b:
        return 1.0 if a else 0.0
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return 0.0
    window = max(la, lb) // 2 - 1
    a_flags = [False] * la
    b_flags = [False] * lb
    matches = 0
    for i, ca in enumerate(a):
        lo = max(0, i - window)
        hi = min(lb, i + window + 1)
        for j in range(lo, hi):
            if not b_flags[j] and b[j] == ca:
                a_flags[i] = b_flags[j] = True
                matches += 1
                break
    if matches == 0:
        return 0.0
    transposed = 0
    j = 0
    for i in range(la):
        if a_flags[i]:
            while not b_flags[j]:
                j += 1
            if a[i] != b[j]:
                transposed += 1
            j += 1
    t = transposed // 2
    m = matches
    return (m / la + m / lb + (m - t) / m) / 3.0


def jaro_winkler(a: str, b: str) -> float:
    """Jaro-Winkler similarity: Jaro boosted by a shared prefix of up to
    four characters with scaling factor 0.1.  Two empty strings score 1.
    """
    a = a.lower()
    b = b.lower()
    if not a and not b:
        return 1.0
    j = jaro(a, b)
    prefix = 0
    for ca, cb in zip(a, b):
        if ca != cb or prefix == _WINKLER_MAX_PREFIX:
            break
        prefix += 1
    return j + prefix * _WINKLER_SCALING * (1.0 - j)


def set_similarity(a, b) -> float:
    """Symmetric best-match average of Jaro-Winkler scores between two
    token sets.  Both empty scores 1; exactly one empty scores 0.
    """
    a = {t.lower() for t in a}
    b = {t.lower() for t in b}
    if not a and not b:
        return 1.0
    if not a or not b:
        return 0.0
    forward = sum(max(jaro_winkler(x, y) for y in b) for x in a) / len(a)
    backward = sum(max(jaro_winkler(y, x) for x in a) for y in b) / len(b)
    return (forward + backward) / 2.0


@lru_cache(maxsize=1)
def stopwords() -> frozenset[str]:
    text = resources.files("ontoseer.data").joinpath("stopwords.txt").read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


def tokenize(text: str) -> list[str]:
    """Lowercased alphanumeric word tokens, in order."""
    return [m.group(0).lower() for m in _WORD_RE.finditer(text)]


def content_words(text: str) -> list[str]:
    stop = stopwords()
    return [w for w in tokenize(text) if w not in stop]


def text_similarity(a: str, b: str) -> float:
    """set_similarity over the content words of two texts."""
    return set_similarity(content_words(a), content_words(b))
