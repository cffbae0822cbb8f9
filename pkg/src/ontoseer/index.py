"""Inverted index over an ontology corpus and ranked term recommendation.

The index maps lowercase identifier tokens to postings for every class and
property in the corpus.  It is immutable once built; rebuilding produces a
new value.  Persistence is a small versioned JSON file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ontoseer.errors import OntoSeerError
from ontoseer.model import OntologyDocument, local_name
from ontoseer.naming import split_words
from ontoseer.similarity import jaro_winkler

INDEX_VERSION = 1

TERM_KINDS = ("class", "object_property", "data_property")

DEFAULT_SCORE_FLOOR = 0.5


class DuplicateOntologyIdError(OntoSeerError):
    def __init__(self, ontology_id: str):
        self.ontology_id = ontology_id
        super().__init__(f"two corpus documents share the id {ontology_id!r}")


class EmptyQueryError(OntoSeerError, ValueError):
    pass


class VersionMismatchError(OntoSeerError):
    def __init__(self, found, expected=INDEX_VERSION):
        self.found = found
        self.expected = expected
        super().__init__(f"index file version {found!r}, this build reads {expected!r}")


class CorruptIndexError(OntoSeerError):
    pass


def tokenize_identifier(name: str) -> list[str]:
    """Lowercase tokens of a term's local name (camel humps, underscores
    and digits all act as separators)."""
    return [w.lower() for w in split_words(name)]


@dataclass(frozen=True)
class Posting:
    term: str
    term_kind: str
    ontology_id: str
    ontology_label: str


@dataclass(frozen=True)
class Recommendation:
    item: str
    source: str
    score: float
    rationale: str = ""


@dataclass
class CorpusIndex:
    token_map: dict[str, list[Posting]] = field(default_factory=dict)
    registry: dict[str, dict] = field(default_factory=dict)
    version: int = INDEX_VERSION

    def postings(self):
        for plist in self.token_map.values():
            yield from plist


def _doc_terms(doc: OntologyDocument):
    yield from (("class", iri) for iri in doc.classes)
    yield from (("object_property", iri) for iri in doc.object_properties)
    yield from (("data_property", iri) for iri in doc.data_properties)


def build_index(docs: list[OntologyDocument]) -> CorpusIndex:
    """Index every class and property of every document under each of its
    identifier tokens.  Output does not depend on the order of ``docs``.
    """
    index = CorpusIndex()
    for doc in sorted(docs, key=lambda d: d.ontology_id):
        if doc.ontology_id in index.registry:
            raise DuplicateOntologyIdError(doc.ontology_id)
        label = doc.label()
        index.registry[doc.ontology_id] = {
            "label": label,
            "source_path": doc.source_path,
            "class_count": len(doc.classes),
            "property_count": len(doc.properties),
        }
        for kind, iri in _doc_terms(doc):
            posting = Posting(term=str(iri), term_kind=kind,
                              ontology_id=doc.ontology_id, ontology_label=label)
            for token in set(tokenize_identifier(local_name(iri))):
                index.token_map.setdefault(token, []).append(posting)
    for token in index.token_map:
        index.token_map[token].sort(key=lambda p: (p.term, p.term_kind, p.ontology_id))
    index.token_map = dict(sorted(index.token_map.items()))
    return index


def recommend_terms(index: CorpusIndex, query: str, kind_filter: str | None = None,
                    k: int = 10, floor: float = DEFAULT_SCORE_FLOOR) -> list[Recommendation]:
    """Top-k indexed terms for a query, scored by Jaro-Winkler between the
    query and each candidate's local name.

    Candidates are the postings filed under any token of the query, so a
    query sharing no token with the corpus returns nothing.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    tokens = tokenize_identifier(query)
    if not tokens:
        raise EmptyQueryError(f"query {query!r} contains no indexable token")
    seen: set[Posting] = set()
    scored = []
    for token in tokens:
        for posting in index.token_map.get(token, ()):
            if posting in seen:
                continue
            seen.add(posting)
            if kind_filter is not None and posting.term_kind != kind_filter:
                continue
            score = jaro_winkler(query, local_name(posting.term))
            if score < floor:
                continue
            scored.append((score, posting))
    scored.sort(key=lambda pair: (-pair[0], pair[1].term, pair[1].ontology_id))
    return [Recommendation(item=p.term, source=p.ontology_id, score=s,
                           rationale=f"{p.term_kind} in {p.ontology_label or p.ontology_id}")
            for s, p in scored[:k]]


def save_index(index: CorpusIndex, path: str | Path) -> None:
    payload = {
        "version": index.version,
        "registry": index.registry,
        "postings": {
            token: [[p.term, p.term_kind, p.ontology_id, p.ontology_label]
                    for p in plist]
            for token, plist in index.token_map.items()
        },
    }
    Path(path).write_text(json.dumps(payload, indent=1, sort_keys=True), encoding="utf-8")


def load_index(path: str | Path) -> CorpusIndex:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CorruptIndexError(f"unreadable index file {path}: {exc}")
    if not isinstance(payload, dict) or "version" not in payload:
        raise CorruptIndexError(f"{path} is not an index file")
    if payload["version"] != INDEX_VERSION:
        raise VersionMismatchError(payload["version"])
    try:
        token_map = {
            token: [Posting(term, kind, oid, label)
                    for term, kind, oid, label in plist]
            for token, plist in payload["postings"].items()
        }
        registry = {oid: dict(entry) for oid, entry in payload["registry"].items()}
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise CorruptIndexError(f"malformed index file {path}: {exc}")
    return CorpusIndex(token_map=token_map, registry=registry,
                       version=payload["version"])


def corpus_files(corpus_dir: str | Path) -> list[Path]:
    return sorted(Path(corpus_dir).rglob("*.ttl"))


def load_corpus(corpus_dir: str | Path) -> list[OntologyDocument]:
    from ontoseer.turtle import load_ontology
    return [load_ontology(p) for p in corpus_files(corpus_dir)]


def build_index_from_dir(corpus_dir: str | Path) -> CorpusIndex:
    return build_index(load_corpus(corpus_dir))
