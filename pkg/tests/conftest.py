from pathlib import Path

import pytest

from ontoseer.index import build_index, load_corpus
from ontoseer.odp import load_odp_dir
from ontoseer.turtle import load_ontology

FIXTURES = Path(__file__).parent / "fixtures"

_ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE_RESULTS.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    # one pass/fail line per acceptance criterion
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for name, outcome in _ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"  {outcome.upper():<7} {name}")


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def corpus_docs():
    return load_corpus(FIXTURES / "corpus")


@pytest.fixture(scope="session")
def corpus_index(corpus_docs):
    return build_index(corpus_docs)


@pytest.fixture(scope="session")
def comic_book_doc():
    return load_ontology(FIXTURES / "corpus" / "comic-book.ttl")


@pytest.fixture(scope="session")
def college_doc():
    return load_ontology(FIXTURES / "working" / "college.ttl")


@pytest.fixture(scope="session")
def demo_doc():
    return load_ontology(FIXTURES / "working" / "demo.ttl")


@pytest.fixture(scope="session")
def odp_catalogue():
    return load_odp_dir(FIXTURES / "odps")
