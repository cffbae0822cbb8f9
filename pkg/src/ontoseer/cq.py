"""Candidate class and property extraction from competency questions.

Tagging is deliberately lexicon-based: a content word is a verb when the
bundled verb list knows it (directly or after stripping a common suffix),
and a noun otherwise.  This keeps extraction deterministic and offline.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ontoseer.errors import OntoSeerError
from ontoseer.naming import recommend_name
from ontoseer.similarity import content_words


class EmptyQuestionError(OntoSeerError, ValueError):
    pass


@lru_cache(maxsize=1)
def verb_lexicon() -> frozenset[str]:
    text = resources.files("ontoseer.data").joinpath("verbs.txt").read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


_SUFFIXES = ("ing", "es", "ed", "s")


def _stems(word: str, suffix: str):
    base = word[: -len(suffix)]
    yield base
    yield base + "e"
    if len(base) >= 2 and base[-1] == base[-2]:
        yield base[:-1]


def is_verb(word: str) -> bool:
    lexicon = verb_lexicon()
    if word in lexicon:
        return True
    for suffix in _SUFFIXES:
        if word.endswith(suffix) and len(word) > len(suffix) + 1:
            if any(stem in lexicon for stem in _stems(word, suffix)):
                return True
    return False


@dataclass
class CqExtraction:
    question: str
    nouns: list[str]
    verbs: list[str]


def extract_terms(question: str) -> CqExtraction:
    """Nouns and verbs of one question, lowercased, stopwords dropped,
    question order preserved, first occurrence only."""
    if not question or not question.strip():
        raise EmptyQuestionError("question is empty")
    nouns: list[str] = []
    verbs: list[str] = []
    for word in content_words(question):
        bucket = verbs if is_verb(word) else nouns
        if word not in bucket:
            bucket.append(word)
    return CqExtraction(question=question, nouns=nouns, verbs=verbs)


def seed_suggestions(cqs: list[str]) -> dict[str, list[str]]:
    """Class and property name candidates for a list of questions, in
    first-occurrence order, camel-cased by the naming rules."""
    class_candidates: list[str] = []
    property_candidates: list[str] = []
    for question in cqs:
        extraction = extract_terms(question)
        for noun in extraction.nouns:
            name = recommend_name(noun, "class")[0]
            if name not in class_candidates:
                class_candidates.append(name)
        for verb in extraction.verbs:
            name = recommend_name(verb, "property")[0]
            if name not in property_candidates:
                property_candidates.append(name)
    return {"class_candidates": class_candidates,
            "property_candidates": property_candidates}
