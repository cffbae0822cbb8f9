"""Ontology quality recommendations while you model.

Term, axiom, and design pattern reuse suggestions over an indexed
ontology corpus, naming convention fixes, competency question seeding,
and rigidity/identity/unity class hierarchy validation, exposed as a
library, a CLI, and an HTTP service.
"""

from ontoseer.axioms import AxiomRecommendation, recommend_axioms
from ontoseer.cq import extract_terms, seed_suggestions
from ontoseer.errors import OntoSeerError
from ontoseer.estimators import AxiomRecommender, OdpRecommender, TermRecommender
from ontoseer.evalkit import evaluate, precision_at_k, recall_at_k
from ontoseer.index import (
    CorpusIndex,
    Posting,
    Recommendation,
    build_index,
    load_index,
    recommend_terms,
    save_index,
)
from ontoseer.model import (
    Axiom,
    AxiomKind,
    BlankNode,
    Iri,
    Literal,
    OntologyDocument,
    Triple,
    local_name,
)
from ontoseer.naming import check_name, recommend_name, segment_word
from ontoseer.odp import OdpRecord, parse_odp_file, recommend_odps, score_odp
from ontoseer.ontoclean import (
    MetaProfile,
    Verdict,
    profile_from_answers,
    questions_for,
    validate_edge,
    validate_hierarchy,
)
from ontoseer.similarity import jaro, jaro_winkler, set_similarity, text_similarity
from ontoseer.turtle import TurtleSyntaxError, load_ontology, parse_turtle, serialize_triples

__version__ = "0.1.0"

__all__ = [
    "Axiom",
    "AxiomKind",
    "AxiomRecommendation",
    "AxiomRecommender",
    "BlankNode",
    "CorpusIndex",
    "Iri",
    "Literal",
    "MetaProfile",
    "OdpRecommender",
    "OdpRecord",
    "OntoSeerError",
    "OntologyDocument",
    "Posting",
    "Recommendation",
    "TermRecommender",
    "Triple",
    "TurtleSyntaxError",
    "Verdict",
    "build_index",
    "check_name",
    "evaluate",
    "extract_terms",
    "jaro",
    "jaro_winkler",
    "load_index",
    "load_ontology",
    "local_name",
    "parse_odp_file",
    "parse_turtle",
    "precision_at_k",
    "profile_from_answers",
    "questions_for",
    "recall_at_k",
    "recommend_axioms",
    "recommend_name",
    "recommend_odps",
    "recommend_terms",
    "save_index",
    "score_odp",
    "seed_suggestions",
    "segment_word",
    "serialize_triples",
    "set_similarity",
    "text_similarity",
    "validate_edge",
    "validate_hierarchy",
]
