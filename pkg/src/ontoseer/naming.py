"""Naming convention checks and fix suggestions for term local names.

Classes are expected in UpperCamelCase and properties in lowerCamelCase,
with no digits and no characters outside ``[A-Za-z0-9_]``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from ontoseer.errors import OntoSeerError
from ontoseer.model import OntologyDocument, local_name


class NamingIssue(enum.Enum):
    CONTAINS_DIGIT = "ContainsDigit"
    ILLEGAL_CHARACTER = "IllegalCharacter"
    NOT_CAMEL_CASE = "NotCamelCase"


class EmptyNameError(OntoSeerError, ValueError):
    pass


class UnfixableNameError(OntoSeerError, ValueError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no letters left to build a name from {name!r}")


_DIGIT_RE = re.compile(r"[0-9]")
_ILLEGAL_RE = re.compile(r"[^A-Za-z0-9_]")
_CLASS_CASE_RE = re.compile(r"[A-Z][A-Za-z]*")
_PROPERTY_CASE_RE = re.compile(r"[a-z][A-Za-z]*")
# split points inside a camel token: aB, and the last capital of a run ABc
_CAMEL_BOUNDARY_RE = re.compile(r"(?<=[a-z0-9])(?=[A-Z])|(?<=[A-Z])(?=[A-Z][a-z])")


def check_name(name: str, kind: str) -> list[NamingIssue]:
    """Issues with a local name, in a fixed report order.

    ``kind`` is "class" or "property".  The case test runs on the name with
    digits removed, so Human1234 is flagged only for the digits.
    """
    if kind not in ("class", "property"):
        raise ValueError(f"kind must be 'class' or 'property', not {kind!r}")
    if not name.strip():
        raise EmptyNameError("name is empty")
    issues = []
    if _DIGIT_RE.search(name):
        issues.append(NamingIssue.CONTAINS_DIGIT)
    if _ILLEGAL_RE.search(name):
        issues.append(NamingIssue.ILLEGAL_CHARACTER)
    stripped = _DIGIT_RE.sub("", name)
    case_re = _CLASS_CASE_RE if kind == "class" else _PROPERTY_CASE_RE
    if not case_re.fullmatch(stripped):
        issues.append(NamingIssue.NOT_CAMEL_CASE)
    return issues


@lru_cache(maxsize=1)
def _wordlist() -> frozenset[str]:
    text = resources.files("ontoseer.data").joinpath("wordlist.txt").read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


def segment_word(word: str, lexicon=None) -> list[str]:
    """Split a lowercase run-together word into dictionary words.

    Tries the longest prefix first and backtracks; if no full segmentation
    exists the word comes back whole.
    """
    lexicon = _wordlist() if lexicon is None else lexicon
    n = len(word)

    @lru_cache(maxsize=None)
    def rest(i):
        if i == n:
            return ()
        for j in range(n, i, -1):
            if word[i:j] in lexicon:
                tail = rest(j)
                if tail is not None:
                    return (word[i:j],) + tail
        return None

    parts = rest(0)
    return list(parts) if parts else [word]


def split_words(name: str) -> list[str]:
    """Case-preserving word split on underscores, punctuation, digits and
    camel boundaries."""
    return [w
            for chunk in re.split(r"[^A-Za-z]+", name) if chunk
            for w in _CAMEL_BOUNDARY_RE.split(chunk) if w]


def recommend_name(name: str, kind: str) -> list[str]:
    """Fix candidates for a name, best first.

    Digits are dropped, separators and camel humps mark word breaks, a
    single all-lowercase word is run through the segmenter, and the words
    are recapitalized for the kind.  The result is already conventional, so
    recommending a fix for it returns it unchanged.
    """
    if kind not in ("class", "property"):
        raise ValueError(f"kind must be 'class' or 'property', not {kind!r}")
    if not name.strip():
        raise EmptyNameError("name is empty")
    stripped = _DIGIT_RE.sub("", name)
    tokens = split_words(stripped)
    if not tokens:
        raise UnfixableNameError(name)
    if len(tokens) == 1 and tokens[0].islower():
        tokens = segment_word(tokens[0])
    if kind == "class":
        fixed = "".join(t[0].upper() + t[1:] for t in tokens)
    else:
        fixed = tokens[0].lower() + "".join(t[0].upper() + t[1:] for t in tokens[1:])
    return [fixed]


@dataclass
class NameFinding:
    term: str
    kind: str
    name: str
    issues: list[NamingIssue]
    suggestions: list[str] = field(default_factory=list)


def check_term_names(doc: OntologyDocument) -> list[NameFinding]:
    """Findings for every class and property whose local name has issues."""
    findings = []
    pairs = [(iri, "class") for iri in doc.classes]
    pairs += [(iri, "property") for iri in doc.properties]
    for iri, kind in pairs:
        name = local_name(iri)
        if not name:
            continue
        issues = check_name(name, kind)
        if issues:
            try:
                suggestions = recommend_name(name, kind)
            except UnfixableNameError:
                suggestions = []
            findings.append(NameFinding(term=str(iri), kind=kind, name=name,
                                        issues=issues, suggestions=suggestions))
    return findings
