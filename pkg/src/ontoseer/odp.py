"""Ontology design pattern catalogue: file parsing and weighted ranking.

Each ODP lives in one text file with labeled sections.  Ranking combines
four similarity components: elements vs working terms (s1), description
and intent vs the session description (s2), domain vs domain (s3), and
competency questions vs competency questions (s4), with weights 5/3/2/3
normalized over whichever components are present.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ontoseer.errors import OntoSeerError
from ontoseer.index import Recommendation, tokenize_identifier
from ontoseer.model import OntologyDocument, local_name
from ontoseer.similarity import content_words, set_similarity, text_similarity

DEFAULT_ODP_THRESHOLD = 0.65

WEIGHTS = {"s1": 5, "s2": 3, "s3": 2, "s4": 3}


class MissingNameError(OntoSeerError):
    def __init__(self, source: str):
        self.source = source
        super().__init__(f"ODP file {source or '<text>'} has no NAME section")


class MalformedSectionError(OntoSeerError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class NoComponentsError(OntoSeerError, ValueError):
    pass


@dataclass
class OdpRecord:
    name: str
    description: str = ""
    intent: str = ""
    domain: str = ""
    cqs: list[str] = field(default_factory=list)
    classes: set[str] = field(default_factory=set)
    properties: set[str] = field(default_factory=set)
    source_path: str = ""

    @property
    def elements(self) -> set[str]:
        return self.classes | self.properties


_LIST_SECTIONS = {"CQS"}
_SET_SECTIONS = {"CLASSES", "PROPERTIES"}
_TEXT_SECTIONS = {"NAME", "DESCRIPTION", "INTENT", "DOMAIN"}
_ALL_SECTIONS = _LIST_SECTIONS | _SET_SECTIONS | _TEXT_SECTIONS


def parse_odp_file(text: str, source_path: str = "") -> OdpRecord:
    """Parse the labeled-section ODP format.

    Section headers are ``NAME:`` style lines; CQS collects one question
    per following line; CLASSES and PROPERTIES are comma-separated; the
    other sections are free text.  Text before any header is an error.
    """
    sections: dict[str, list[str]] = {}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line.strip():
            continue
        head, colon, rest = line.partition(":")
        if colon and head.strip().upper() in _ALL_SECTIONS and not line[0].isspace():
            current = head.strip().upper()
            sections.setdefault(current, [])
            if rest.strip():
                sections[current].append(rest.strip())
        elif current is None:
            raise MalformedSectionError(lineno, f"text before any section header: {line.strip()!r}")
        else:
            sections[current].append(line.strip())

    def text_of(key):
        return " ".join(sections.get(key, [])).strip()

    def set_of(key):
        items = {part.strip() for chunk in sections.get(key, [])
                 for part in chunk.split(",")}
        return {i for i in items if i}

    name = text_of("NAME")
    if not name:
        raise MissingNameError(source_path)
    return OdpRecord(
        name=name,
        description=text_of("DESCRIPTION"),
        intent=text_of("INTENT"),
        domain=text_of("DOMAIN"),
        cqs=list(sections.get("CQS", [])),
        classes=set_of("CLASSES"),
        properties=set_of("PROPERTIES"),
        source_path=source_path,
    )


def load_odp_dir(odp_dir: str | Path) -> list[OdpRecord]:
    return [parse_odp_file(p.read_text(encoding="utf-8"), source_path=str(p))
            for p in sorted(Path(odp_dir).glob("*.txt"))]


@dataclass(frozen=True)
class OdpScore:
    s1: float | None
    s2: float | None
    s3: float | None
    s4: float | None
    normalized: float

    def components(self) -> dict[str, float]:
        return {k: v for k, v in
                (("s1", self.s1), ("s2", self.s2), ("s3", self.s3), ("s4", self.s4))
                if v is not None}


def _identifier_tokens(names) -> set[str]:
    return {tok for name in names for tok in tokenize_identifier(name)}


def _cq_tokens(cqs) -> set[str]:
    return {tok for cq in cqs for tok in content_words(cq)}


def combine_components(parts: dict[str, float]) -> float:
    """Weighted average over the present components."""
    if not parts:
        raise NoComponentsError("no similarity component could be computed")
    total_weight = sum(WEIGHTS[key] for key in parts)
    return sum(WEIGHTS[key] * value for key, value in parts.items()) / total_weight


def score_odp(working_terms, description, domain, cqs, odp: OdpRecord) -> OdpScore:
    """Score one ODP against the working ontology and session metadata.

    A component is absent when either side has nothing to compare, and
    absent components drop out of the weighted average entirely.
    """
    parts: dict[str, float] = {}
    s1 = s2 = s3 = s4 = None
    odp_element_tokens = _identifier_tokens(odp.elements | {odp.name})
    working_tokens = _identifier_tokens(working_terms or ())
    if working_tokens and odp_element_tokens:
        s1 = parts["s1"] = set_similarity(working_tokens, odp_element_tokens)
    odp_text = (odp.description + " " + odp.intent).strip()
    if description and odp_text:
        s2 = parts["s2"] = text_similarity(description, odp_text)
    if domain and odp.domain:
        s3 = parts["s3"] = text_similarity(domain, odp.domain)
    if cqs and odp.cqs:
        s4 = parts["s4"] = set_similarity(_cq_tokens(cqs), _cq_tokens(odp.cqs))
    return OdpScore(s1=s1, s2=s2, s3=s3, s4=s4,
                    normalized=combine_components(parts))


def recommend_odps(working: OntologyDocument, meta: dict, odps: list[OdpRecord],
                   k: int = 5, threshold: float = DEFAULT_ODP_THRESHOLD) -> list[Recommendation]:
    """Rank the ODP catalogue against a working ontology plus optional
    session metadata ({description, domain, cqs}).  ODPs scoring below the
    threshold are dropped; ties break on the ODP name.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 0.0 <= threshold <= 1.0:
        raise ValueError("threshold must be within [0, 1]")
    working_terms = {local_name(t) for t in working.terms}
    description = (meta or {}).get("description") or ""
    domain = (meta or {}).get("domain") or ""
    cqs = (meta or {}).get("cqs") or []
    scored = []
    for odp in odps:
        try:
            score = score_odp(working_terms, description, domain, cqs, odp)
        except NoComponentsError:
            continue
        if score.normalized < threshold:
            continue
        breakdown = " ".join(f"{k_}={v:.3f}" for k_, v in score.components().items())
        scored.append(Recommendation(item=odp.name,
                                     source=odp.source_path or odp.name,
                                     score=score.normalized,
                                     rationale=breakdown))
    scored.sort(key=lambda r: (-r.score, r.item))
    return scored[:k]
