from pathlib import Path

import pytest

from ontoseer.model import (
    OWL_NS,
    RDFS_NS,
    RDF_NS,
    BlankNode,
    Iri,
    Literal,
    Triple,
    canonical_triples,
    local_name,
)
from ontoseer.turtle import (
    TurtleSyntaxError,
    UnknownPrefixError,
    load_ontology,
    parse_turtle,
    serialize_triples,
)

FIXTURES = Path(__file__).parent / "fixtures"

# file name -> (error line, error column, message fragment)
NEGATIVE_CASES = {
    "missing-dot.ttl": (3, 1, "expected '.'"),
    "unknown-prefix.ttl": (2, 10, "undeclared prefix 'ex:'"),
    "unterminated-string.ttl": (2, 35, "unterminated string"),
    "base-directive.ttl": (1, 1, "@base is not supported"),
    "bad-escape.ttl": (2, 41, "unsupported escape"),
    "number-literal.ttl": (2, 11, "unexpected input"),
    "datatyped-literal.ttl": (3, 13, "unexpected input"),
    "unterminated-iri.ttl": (2, 10, "unterminated IRI"),
    "stray-text.ttl": (2, 1, "unexpected input"),
    "unclosed-bracket.ttl": (3, 25, "expected ']'"),
}


def test_parse_simple_document():
    doc = parse_turtle(
        """
        @prefix ex: <http://example.org/> .
        @prefix owl: <http://www.w3.org/2002/07/owl#> .
        ex:Book a owl:Class .
        """
    )
    assert Triple(Iri("http://example.org/Book"), Iri(RDF_NS + "type"), Iri(OWL_NS + "Class")) in doc.triples


def test_prefixed_and_full_iris_agree():
    doc = parse_turtle(
        """
        @prefix ex: <http://example.org/> .
        ex:a ex:b ex:c .
        <http://example.org/a> ex:b <http://example.org/c> .
        """
    )
    assert len(doc.triples) == 2
    assert doc.triples[0] == doc.triples[1]


def test_semicolon_and_comma_lists():
    doc = parse_turtle(
        """
        @prefix ex: <http://example.org/> .
        ex:s ex:p ex:a , ex:b ;
             ex:q ex:c .
        """
    )
    assert len(doc.triples) == 3
    predicates = {str(t.predicate) for t in doc.triples}
    assert predicates == {"http://example.org/p", "http://example.org/q"}


def test_a_keyword_expands_to_rdf_type():
    doc = parse_turtle("@prefix ex: <http://e/> . ex:x a ex:T .")
    assert doc.triples[0].predicate == Iri(RDF_NS + "type")


def test_string_escapes():
    doc = parse_turtle(
        '@prefix ex: <http://e/> . ex:x ex:label "line\\nbreak \\"quoted\\" \\u00e9" .'
    )
    literal = doc.triples[0].object
    assert isinstance(literal, Literal)
    assert literal.text == 'line\nbreak "quoted" é'


def test_language_tagged_literal():
    doc = parse_turtle('@prefix ex: <http://e/> . ex:x ex:label "hola"@es .')
    literal = doc.triples[0].object
    assert literal == Literal("hola", "es")


def test_comments_and_blank_lines_ignored():
    doc = parse_turtle(
        """
        # leading comment
        @prefix ex: <http://e/> .  # trailing comment

        ex:x ex:p ex:y .  # another
        """
    )
    assert len(doc.triples) == 1


def test_statement_may_span_lines():
    doc = parse_turtle("@prefix ex: <http://e/> .\nex:x\n  ex:p\n  ex:y\n  .")
    assert len(doc.triples) == 1


def test_bracketed_blank_node():
    doc = parse_turtle(
        """
        @prefix ex: <http://e/> .
        ex:C ex:restriction [ ex:onProperty ex:p ; ex:min ex:one ] .
        """
    )
    blank_objects = [t.object for t in doc.triples if isinstance(t.object, BlankNode)]
    assert len(blank_objects) == 1
    blank = blank_objects[0]
    nested = [t for t in doc.triples if t.subject == blank]
    assert len(nested) == 2


def test_collection_builds_rdf_list():
    doc = parse_turtle(
        """
        @prefix ex: <http://e/> .
        ex:C ex:oneOf ( ex:a ex:b ) .
        """
    )
    firsts = [t for t in doc.triples if t.predicate == Iri(RDF_NS + "first")]
    rests = [t for t in doc.triples if t.predicate == Iri(RDF_NS + "rest")]
    assert len(firsts) == 2
    assert len(rests) == 2
    assert Iri(RDF_NS + "nil") in {t.object for t in rests}


def test_empty_collection_is_nil():
    doc = parse_turtle("@prefix ex: <http://e/> . ex:C ex:oneOf ( ) .")
    assert doc.triples[0].object == Iri(RDF_NS + "nil")


def test_labelled_blank_nodes_share_identity():
    doc = parse_turtle(
        """
        @prefix ex: <http://e/> .
        _:x ex:p ex:a .
        _:x ex:p ex:b .
        _:y ex:p ex:c .
        """
    )
    subjects = [t.subject for t in doc.triples]
    assert subjects[0] == subjects[1]
    assert subjects[0] != subjects[2]


def test_ontology_id_from_owl_ontology_subject():
    doc = parse_turtle(
        """
        @prefix ex: <http://example.org/onto#> .
        @prefix owl: <http://www.w3.org/2002/07/owl#> .
        <http://example.org/onto> a owl:Ontology .
        ex:C a owl:Class .
        """
    )
    assert doc.ontology_id == "http://example.org/onto"


def test_ontology_id_falls_back_to_source_path():
    doc = parse_turtle("@prefix ex: <http://e/> . ex:x ex:p ex:y .", source_path="x.ttl")
    assert doc.ontology_id == "x.ttl"


def test_profile_collects_classes_and_properties():
    doc = parse_turtle(
        """
        @prefix ex: <http://e/> .
        @prefix owl: <http://www.w3.org/2002/07/owl#> .
        ex:Book a owl:Class .
        ex:hasAuthor a owl:ObjectProperty .
        ex:pageCount a owl:DatatypeProperty .
        """
    )
    assert Iri("http://e/Book") in doc.classes
    assert Iri("http://e/hasAuthor") in doc.object_properties
    assert Iri("http://e/pageCount") in doc.data_properties


@pytest.mark.parametrize("name", sorted(NEGATIVE_CASES))
def test_negative_fixture_positions(name):
    line, column, fragment = NEGATIVE_CASES[name]
    text = (FIXTURES / "negative" / name).read_text()
    with pytest.raises(TurtleSyntaxError) as excinfo:
        parse_turtle(text)
    err = excinfo.value
    assert err.line == line
    assert err.column == column
    assert fragment in err.message


def test_unknown_prefix_error_is_syntax_error_subclass():
    with pytest.raises(UnknownPrefixError):
        parse_turtle("ex:a ex:b ex:c .")
    assert issubclass(UnknownPrefixError, TurtleSyntaxError)


def test_error_carries_position_attributes():
    try:
        parse_turtle("@prefix : <http://e/> .\n:a :b 42 .")
    except TurtleSyntaxError as err:
        assert (err.line, err.column) == (2, 7)
        assert str(err).startswith("line 2, column 7")
    else:
        pytest.fail("expected a syntax error")


@pytest.mark.parametrize(
    "path",
    sorted((FIXTURES / "corpus").glob("*.ttl")) + sorted((FIXTURES / "working").glob("*.ttl")),
    ids=lambda p: p.name,
)
def test_round_trip_preserves_triples(path):
    doc = load_ontology(path)
    text = serialize_triples(doc)
    again = parse_turtle(text, source_path=str(path))
    assert canonical_triples(again) == canonical_triples(doc)


def test_serializer_groups_subjects():
    doc = parse_turtle(
        """
        @prefix ex: <http://e/> .
        ex:s ex:p ex:a .
        ex:s ex:q ex:b .
        """
    )
    text = serialize_triples(doc)
    assert text.count("ex:s") == 1
    assert ";" in text


def test_serializer_uses_a_for_rdf_type():
    doc = parse_turtle(
        """
        @prefix ex: <http://e/> .
        @prefix owl: <http://www.w3.org/2002/07/owl#> .
        ex:C a owl:Class .
        """
    )
    text = serialize_triples(doc)
    assert " a owl:Class" in text


def test_local_name_helper():
    assert local_name(Iri("http://e/ns#Book")) == "Book"
    assert local_name(Iri("http://e/ns/Book")) == "Book"
    assert local_name("Book") == "Book"


def test_rdfs_namespace_constant():
    assert RDFS_NS.endswith("rdf-schema#")
