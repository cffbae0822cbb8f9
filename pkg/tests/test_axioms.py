import pytest

from ontoseer.axioms import (
    DEFAULT_AXIOM_K,
    DEFAULT_AXIOM_THRESHOLD,
    recommend_axioms,
)
from ontoseer.model import AxiomKind, Iri, local_name
from ontoseer.similarity import jaro_winkler
from ontoseer.turtle import parse_turtle

COLLEGE_PERSON = Iri("http://example.org/working/college#Person")
PEOPLE_ORG = Iri("http://example.org/ontologies/people#Organization")


def test_disjointness_carried_over(college_doc, corpus_docs):
    recs = recommend_axioms(college_doc, corpus_docs)
    disjoint = [
        r
        for r in recs
        if r.axiom.kind is AxiomKind.DISJOINT_WITH and r.axiom.subject == COLLEGE_PERSON
    ]
    assert disjoint, "Person should inherit the Person/Organization disjointness"
    top = disjoint[0]
    assert top.axiom.object == PEOPLE_ORG
    assert top.similarity == 1.0
    assert top.working_entity == COLLEGE_PERSON
    assert local_name(top.matched_entity) == "Person"


def test_all_scores_meet_threshold(college_doc, corpus_docs):
    recs = recommend_axioms(college_doc, corpus_docs)
    assert recs
    for rec in recs:
        assert rec.similarity >= DEFAULT_AXIOM_THRESHOLD
        assert (
            jaro_winkler(
                local_name(rec.working_entity), local_name(rec.matched_entity)
            )
            == rec.similarity
        )


def test_per_entity_cap(college_doc, corpus_docs):
    recs = recommend_axioms(college_doc, corpus_docs, k=1)
    by_entity = {}
    for rec in recs:
        by_entity.setdefault(rec.working_entity, []).append(rec)
    assert all(len(v) == 1 for v in by_entity.values())
    assert DEFAULT_AXIOM_K == 3


def test_lowering_threshold_only_adds(college_doc, corpus_docs):
    strict = recommend_axioms(college_doc, corpus_docs, k=50, threshold=0.9)
    loose = recommend_axioms(college_doc, corpus_docs, k=50, threshold=0.6)
    strict_keys = {(r.axiom, r.source_ontology) for r in strict}
    loose_keys = {(r.axiom, r.source_ontology) for r in loose}
    assert strict_keys <= loose_keys
    assert len(loose) >= len(strict)


def test_already_asserted_axioms_are_skipped(corpus_docs):
    working = parse_turtle(
        """
        @prefix ex: <http://example.org/working/x#> .
        @prefix owl: <http://www.w3.org/2002/07/owl#> .
        @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
        ex:Person a owl:Class ;
            owl:disjointWith <http://example.org/ontologies/people#Organization> .
        """,
        source_path="x.ttl",
    )
    recs = recommend_axioms(working, corpus_docs)
    for rec in recs:
        assert rec.axiom not in working.axioms


def test_rewrite_targets_working_entity(college_doc, corpus_docs):
    for rec in recommend_axioms(college_doc, corpus_docs):
        assert rec.working_entity in (rec.axiom.subject, rec.axiom.object)
        assert rec.matched_entity in (rec.source_axiom.subject, rec.source_axiom.object)
        assert rec.render().startswith(rec.axiom.kind.value) or rec.axiom.characteristic


def test_no_duplicate_rewrites_per_entity(college_doc, corpus_docs):
    recs = recommend_axioms(college_doc, corpus_docs, k=50, threshold=0.6)
    seen = set()
    for rec in recs:
        key = (rec.working_entity, rec.axiom)
        assert key not in seen
        seen.add(key)


def test_results_sorted_within_entity(college_doc, corpus_docs):
    recs = recommend_axioms(college_doc, corpus_docs, k=50, threshold=0.6)
    by_entity = {}
    for rec in recs:
        by_entity.setdefault(rec.working_entity, []).append(rec)
    for group in by_entity.values():
        scores = [r.similarity for r in group]
        assert scores == sorted(scores, reverse=True)


def test_empty_corpus_gives_nothing(college_doc):
    assert recommend_axioms(college_doc, []) == []


def test_bad_arguments(college_doc, corpus_docs):
    with pytest.raises(ValueError):
        recommend_axioms(college_doc, corpus_docs, k=0)
    with pytest.raises(ValueError):
        recommend_axioms(college_doc, corpus_docs, threshold=1.5)
