import pytest

from ontoseer.cq import (
    EmptyQuestionError,
    extract_terms,
    is_verb,
    seed_suggestions,
    verb_lexicon,
)


def test_is_verb_base_forms():
    assert is_verb("teach")
    assert is_verb("lend")
    assert is_verb("offer")
    assert not is_verb("course")
    assert not is_verb("stadium")


def test_is_verb_inflections():
    assert is_verb("teaches")
    assert is_verb("teaching")
    assert is_verb("offered")
    assert is_verb("lends")
    assert is_verb("running")  # doubled consonant drops back to "run"
    assert is_verb("making")  # "mak" + "e" restores "make"


def test_verb_lexicon_loaded_once():
    assert verb_lexicon() is verb_lexicon()
    assert "teach" in verb_lexicon()


def test_extract_terms_splits_nouns_and_verbs():
    extraction = extract_terms("Who teaches a course at the stadium?")
    assert extraction.verbs == ["teaches"]
    assert extraction.nouns == ["course", "stadium"]
    assert extraction.question == "Who teaches a course at the stadium?"


def test_extract_terms_drops_stopwords_and_dedupes():
    extraction = extract_terms("Which course is the course of the course?")
    assert extraction.nouns == ["course"]
    assert extraction.verbs == []


def test_extract_terms_preserves_first_occurrence_order():
    extraction = extract_terms("Does the library lend books to a person?")
    assert extraction.nouns == ["library", "books", "person"]
    assert extraction.verbs == ["lend"]


def test_extract_terms_rejects_empty():
    with pytest.raises(EmptyQuestionError):
        extract_terms("  ")


def test_seed_suggestions_camel_cases_candidates():
    seeds = seed_suggestions(
        [
            "Who teaches a course?",
            "What is the capacity of the stadium?",
            "Does the library lend books?",
        ]
    )
    assert seeds["class_candidates"] == [
        "Course",
        "Capacity",
        "Stadium",
        "Library",
        "Books",
    ]
    assert seeds["property_candidates"] == ["teaches", "lend"]


def test_seed_suggestions_dedupes_across_questions():
    seeds = seed_suggestions(["Who teaches a course?", "Which course is taught?"])
    assert seeds["class_candidates"].count("Course") == 1


def test_seed_suggestions_empty_list():
    assert seed_suggestions([]) == {
        "class_candidates": [],
        "property_candidates": [],
    }
