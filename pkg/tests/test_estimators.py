import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from ontoseer.estimators import AxiomRecommender, OdpRecommender, TermRecommender
from ontoseer.index import recommend_terms
from ontoseer.validation import (
    check_documents,
    check_non_empty_text,
    check_positive_int,
    check_unit_interval,
)


def test_term_recommender_fit_returns_self(corpus_docs):
    est = TermRecommender()
    assert est.fit(corpus_docs) is est
    assert est.index_ is not None


def test_term_recommender_matches_functional_api(corpus_docs, corpus_index):
    est = TermRecommender(floor=0.6).fit(corpus_docs)
    assert est.recommend("Person") == recommend_terms(
        corpus_index, "Person", floor=0.6
    )


def test_term_recommender_from_index(corpus_index):
    est = TermRecommender.from_index(corpus_index)
    assert est.recommend("Person")[0].score == 1.0


def test_term_recommender_requires_fit():
    with pytest.raises(NotFittedError):
        TermRecommender().recommend("Person")


def test_estimator_params_round_trip():
    est = TermRecommender(floor=0.7)
    assert est.get_params() == {"floor": 0.7}
    est.set_params(floor=0.4)
    assert est.floor == 0.4
    copy = clone(est)
    assert copy.get_params() == {"floor": 0.4}
    assert not hasattr(copy, "index_")


def test_term_recommender_validates_inputs(corpus_docs):
    with pytest.raises(ValueError):
        TermRecommender(floor=1.2).fit(corpus_docs)
    est = TermRecommender().fit(corpus_docs)
    with pytest.raises(ValueError):
        est.recommend("   ")
    with pytest.raises(ValueError):
        est.recommend("Person", k=0)
    with pytest.raises(TypeError):
        TermRecommender().fit(["not a document"])


def test_axiom_recommender(college_doc, corpus_docs):
    est = AxiomRecommender().fit(corpus_docs)
    recs = est.recommend(college_doc)
    assert recs
    assert est.get_params() == {"threshold": 0.85, "k": 3}
    with pytest.raises(NotFittedError):
        AxiomRecommender().recommend(college_doc)


def test_odp_recommender(college_doc, odp_catalogue):
    est = OdpRecommender().fit(odp_catalogue)
    recs = est.recommend(college_doc, {"description": "College"})
    assert [r.item for r in recs][:2] == ["Professor", "Persons"]
    assert est.get_params() == {"threshold": 0.65, "k": 5}
    with pytest.raises(NotFittedError):
        OdpRecommender().recommend(college_doc)


def test_check_unit_interval():
    assert check_unit_interval(0.5, "x") == 0.5
    with pytest.raises(ValueError):
        check_unit_interval(-0.1, "x")


def test_check_positive_int():
    assert check_positive_int(3, "k") == 3
    assert check_positive_int(3.0, "k") == 3
    with pytest.raises(ValueError):
        check_positive_int(0, "k")
    with pytest.raises(ValueError):
        check_positive_int(2.5, "k")


def test_check_documents(corpus_docs):
    assert check_documents(corpus_docs) == list(corpus_docs)
    with pytest.raises(TypeError):
        check_documents([object()])


def test_check_non_empty_text():
    assert check_non_empty_text("hi", "q") == "hi"
    with pytest.raises(ValueError):
        check_non_empty_text("", "q")
    with pytest.raises(ValueError):
        check_non_empty_text(None, "q")
