import json
import random

import pytest

from ontoseer.index import (
    DEFAULT_SCORE_FLOOR,
    INDEX_VERSION,
    CorpusIndex,
    CorruptIndexError,
    DuplicateOntologyIdError,
    EmptyQueryError,
    VersionMismatchError,
    build_index,
    build_index_from_dir,
    load_index,
    recommend_terms,
    save_index,
    tokenize_identifier,
)
from ontoseer.model import local_name
from ontoseer.turtle import parse_turtle


def test_tokenize_identifier():
    assert tokenize_identifier("ComicBook") == ["comic", "book"]
    assert tokenize_identifier("hasAuthor") == ["has", "author"]
    assert tokenize_identifier("page_2_count") == ["page", "count"]
    assert tokenize_identifier("XMLHttpRequest") == ["xml", "http", "request"]


def _doc(ttl: str, source: str):
    return parse_turtle(ttl, source_path=source)


def test_build_index_registry_and_postings(corpus_docs, corpus_index):
    assert len(corpus_index.registry) == len(corpus_docs) == 20
    for doc in corpus_docs:
        entry = corpus_index.registry[doc.ontology_id]
        assert entry["label"] == doc.label()
        assert entry["class_count"] == len(doc.classes)
        assert entry["property_count"] == len(doc.properties)
    kinds = {p.term_kind for p in corpus_index.postings()}
    assert kinds == {"class", "object_property", "data_property"}


def test_build_index_is_order_insensitive(corpus_docs):
    shuffled = list(corpus_docs)
    random.Random(3).shuffle(shuffled)
    a = build_index(corpus_docs)
    b = build_index(shuffled)
    assert a.token_map == b.token_map
    assert a.registry == b.registry


def test_build_index_rejects_duplicate_ids():
    ttl = "@prefix ex: <http://e/> . @prefix owl: <http://www.w3.org/2002/07/owl#> . ex:A a owl:Class ."
    with pytest.raises(DuplicateOntologyIdError):
        build_index([_doc(ttl, "same.ttl"), _doc(ttl, "same.ttl")])


def test_recommend_exact_name_is_top_hit(corpus_index):
    recs = recommend_terms(corpus_index, "Person")
    assert recs
    assert local_name(recs[0].item) == "Person"
    assert recs[0].score == 1.0


def test_recommend_scores_sorted_and_floored(corpus_index):
    recs = recommend_terms(corpus_index, "Professor", k=10)
    scores = [r.score for r in recs]
    assert scores == sorted(scores, reverse=True)
    assert all(s >= DEFAULT_SCORE_FLOOR for s in scores)


def test_recommend_ties_break_deterministically(corpus_index):
    first = recommend_terms(corpus_index, "course", k=10)
    second = recommend_terms(corpus_index, "course", k=10)
    assert first == second


def test_recommend_respects_k(corpus_index):
    assert len(recommend_terms(corpus_index, "Person", k=2)) == 2


def test_recommend_kind_filter(corpus_index):
    classes = recommend_terms(corpus_index, "teaches", kind_filter="class")
    props = recommend_terms(corpus_index, "teaches", kind_filter="object_property")
    assert all(p.score >= DEFAULT_SCORE_FLOOR for p in props)
    assert props, "an exact property name should match itself"
    class_names = {local_name(r.item) for r in classes}
    assert "teaches" not in class_names


def test_recommend_empty_query(corpus_index):
    with pytest.raises(EmptyQueryError):
        recommend_terms(corpus_index, "   ")


def test_recommend_unrelated_query_on_small_corpus(comic_book_doc):
    index = build_index([comic_book_doc])
    assert recommend_terms(index, "Zebra") == []


def test_recommendation_carries_source_and_rationale(corpus_index):
    recs = recommend_terms(corpus_index, "Student")
    top = recs[0]
    assert top.source in corpus_index.registry
    assert top.rationale == "class in " + corpus_index.registry[top.source]["label"]


def test_save_and_load_round_trip(tmp_path, corpus_index):
    path = tmp_path / "corpus.index.json"
    save_index(corpus_index, path)
    loaded = load_index(path)
    assert loaded.version == INDEX_VERSION
    assert loaded.registry == corpus_index.registry
    assert loaded.token_map == corpus_index.token_map
    for query in ("Person", "course", "publishes", "member"):
        assert recommend_terms(loaded, query) == recommend_terms(corpus_index, query)


def test_load_index_version_mismatch(tmp_path, corpus_index):
    path = tmp_path / "stale.json"
    save_index(corpus_index, path)
    payload = json.loads(path.read_text())
    payload["version"] = INDEX_VERSION + 99
    path.write_text(json.dumps(payload))
    with pytest.raises(VersionMismatchError):
        load_index(path)


def test_load_index_corrupt_payloads(tmp_path):
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json")
    with pytest.raises(CorruptIndexError):
        load_index(garbled)
    wrong_shape = tmp_path / "wrong.json"
    wrong_shape.write_text(json.dumps({"version": INDEX_VERSION}))
    with pytest.raises(CorruptIndexError):
        load_index(wrong_shape)
    with pytest.raises(CorruptIndexError):
        load_index(tmp_path / "missing.json")


def test_build_index_from_dir(fixtures_dir, corpus_index):
    rebuilt = build_index_from_dir(fixtures_dir / "corpus")
    assert rebuilt.registry == corpus_index.registry
    assert rebuilt.token_map == corpus_index.token_map


def test_corpus_index_postings_iterates_everything(corpus_index):
    assert isinstance(corpus_index, CorpusIndex)
    postings = list(corpus_index.postings())
    by_map = {p for plist in corpus_index.token_map.values() for p in plist}
    assert set(postings) == by_map
