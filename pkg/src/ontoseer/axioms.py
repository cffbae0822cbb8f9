"""Axiom recommendation: surface corpus axioms whose entities closely
match entities of the working ontology, rewritten onto the local terms.
"""

from __future__ import annotations

from dataclasses import dataclass

from ontoseer.model import (
    Axiom,
    Iri,
    OntologyDocument,
    local_name,
    render_axiom,
)
from ontoseer.similarity import jaro_winkler

DEFAULT_AXIOM_THRESHOLD = 0.85
DEFAULT_AXIOM_K = 3


@dataclass(frozen=True)
class AxiomRecommendation:
    axiom: Axiom
    source_axiom: Axiom
    source_ontology: str
    matched_entity: Iri
    working_entity: Iri
    similarity: float

    def render(self) -> str:
        return render_axiom(self.axiom)


def _axiom_entities(axiom: Axiom):
    yield axiom.subject
    if axiom.object is not None:
        yield axiom.object


def recommend_axioms(working: OntologyDocument,
                     corpus: list[OntologyDocument],
                     index=None,
                     k: int = DEFAULT_AXIOM_K,
                     threshold: float = DEFAULT_AXIOM_THRESHOLD) -> list[AxiomRecommendation]:
    """For each working term, rank corpus axioms whose entities match it
    with Jaro-Winkler similarity at or above the threshold, rewritten so
    the matched entity becomes the working term.

    Axioms the working ontology already asserts are dropped, as are
    duplicate rewrites (the highest-similarity source wins).  At most ``k``
    recommendations per working entity; ``index`` only supplies ontology
    labels when given.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 0.0 <= threshold <= 1.0:
        raise ValueError("threshold must be within [0, 1]")
    asserted = set(working.axioms)
    out: list[AxiomRecommendation] = []
    for entity in sorted(working.terms):
        entity_name = local_name(entity)
        candidates = []
        for doc in corpus:
            for corpus_entity in doc.terms:
                similarity = jaro_winkler(entity_name, local_name(corpus_entity))
                if similarity < threshold:
                    continue
                for axiom in doc.axioms:
                    if corpus_entity not in _axiom_entities(axiom):
                        continue
                    rewritten = axiom.substitute(corpus_entity, entity)
                    if rewritten in asserted:
                        continue
                    candidates.append(AxiomRecommendation(
                        axiom=rewritten,
                        source_axiom=axiom,
                        source_ontology=doc.ontology_id,
                        matched_entity=corpus_entity,
                        working_entity=entity,
                        similarity=similarity,
                    ))
        candidates.sort(key=lambda r: (-r.similarity, render_axiom(r.axiom),
                                       r.source_ontology))
        kept: list[AxiomRecommendation] = []
        seen_axioms = set()
        for rec in candidates:
            if rec.axiom in seen_axioms:
                continue
            seen_axioms.add(rec.axiom)
            kept.append(rec)
            if len(kept) == k:
                break
        out.extend(kept)
    return out
