"""Estimator-style wrappers around the recommenders.

These follow the scikit-learn protocol: constructor arguments are stored
under the same names (so get_params/set_params work), fit returns self,
and fitted state lives in trailing-underscore attributes.  The functional
modules stay the single source of behaviour; these classes only manage
corpus state and defaults.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator

from ontoseer import axioms as _axioms
from ontoseer import index as _index
from ontoseer import odp as _odp
from ontoseer.validation import (
    check_documents,
    check_is_fitted,
    check_non_empty_text,
    check_positive_int,
    check_unit_interval,
)


class TermRecommender(BaseEstimator):
    """Recommends corpus terms for a query string.

    fit builds the inverted index over the given documents; recommend
    scores candidates by Jaro-Winkler against their local names.
    """

    def __init__(self, floor=_index.DEFAULT_SCORE_FLOOR):
        self.floor = floor

    def fit(self, documents, y=None):
        check_unit_interval(self.floor, "floor")
        self.index_ = _index.build_index(check_documents(documents))
        return self

    @classmethod
    def from_index(cls, index: _index.CorpusIndex, floor=_index.DEFAULT_SCORE_FLOOR):
        est = cls(floor=floor)
        est.index_ = index
        return est

    def recommend(self, query, kind=None, k=10):
        check_is_fitted(self, "index_")
        check_non_empty_text(query, "query")
        return _index.recommend_terms(self.index_, query, kind_filter=kind,
                                      k=check_positive_int(k, "k"),
                                      floor=check_unit_interval(self.floor, "floor"))


class AxiomRecommender(BaseEstimator):
    """Recommends corpus axioms rewritten onto the working ontology's
    entities, keeping matches at or above the similarity threshold."""

    def __init__(self, threshold=_axioms.DEFAULT_AXIOM_THRESHOLD,
                 k=_axioms.DEFAULT_AXIOM_K):
        self.threshold = threshold
        self.k = k

    def fit(self, documents, y=None):
        check_unit_interval(self.threshold, "threshold")
        check_positive_int(self.k, "k")
        self.corpus_ = check_documents(documents)
        return self

    def recommend(self, working):
        check_is_fitted(self, "corpus_")
        return _axioms.recommend_axioms(
            working, self.corpus_,
            k=check_positive_int(self.k, "k"),
            threshold=check_unit_interval(self.threshold, "threshold"))


class OdpRecommender(BaseEstimator):
    """Ranks a design pattern catalogue against a working ontology."""

    def __init__(self, threshold=_odp.DEFAULT_ODP_THRESHOLD, k=5):
        self.threshold = threshold
        self.k = k

    def fit(self, odps, y=None):
        check_unit_interval(self.threshold, "threshold")
        check_positive_int(self.k, "k")
        self.odps_ = list(odps)
        return self

    def recommend(self, working, meta=None):
        check_is_fitted(self, "odps_")
        return _odp.recommend_odps(
            working, meta or {}, self.odps_,
            k=check_positive_int(self.k, "k"),
            threshold=check_unit_interval(self.threshold, "threshold"))
