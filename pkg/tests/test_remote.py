import pytest
import requests

from ontoseer.remote import (
    BIOPORTAL_KEY_ENV,
    BIOPORTAL_RECOMMENDER_URL,
    LOV_SUGGEST_URL,
    MissingApiKeyError,
    NetworkUnavailableError,
    ProviderError,
    query_remote,
)


class StubResponse:
    def __init__(self, payload, status_code=200):
        self._payload = payload
        self.status_code = status_code

    def json(self):
        return self._payload


class StubHttp:
    def __init__(self, payload, status_code=200, error=None):
        self.payload = payload
        self.status_code = status_code
        self.error = error
        self.calls = []

    def get(self, url, params=None, timeout=None):
        self.calls.append({"url": url, "params": params, "timeout": timeout})
        if self.error:
            raise self.error
        return StubResponse(self.payload, self.status_code)


LOV_PAYLOAD = {
    "results": [
        {"uri": ["http://xmlns.com/foaf/0.1/Person"], "vocabulary.prefix": ["foaf"],
         "score": 0.92},
        {"uri": ["http://schema.org/Person"], "prefixedName": ["schema:Person"]},
        {"uri": [], "vocabulary.prefix": ["skip-me"]},
    ]
}


def test_lov_query_and_mapping():
    http = StubHttp(LOV_PAYLOAD)
    recs = query_remote("lov", "person", http=http)
    assert http.calls[0]["url"] == LOV_SUGGEST_URL
    assert http.calls[0]["params"] == {"q": "person"}
    assert [r.item for r in recs] == [
        "http://xmlns.com/foaf/0.1/Person",
        "http://schema.org/Person",
    ]
    assert recs[0].source == "foaf"
    assert recs[0].score == pytest.approx(0.92)
    # entry without a score falls back to 1/rank
    assert recs[1].score == pytest.approx(0.5)


BIOPORTAL_PAYLOAD = [
    {
        "ontologies": [{"@id": "https://data.bioontology.org/ontologies/DOID",
                        "acronym": "DOID"}],
        "evaluationScore": {"normalizedScore": 87.5},
    },
    {
        "ontologies": [{"acronym": "MESH"}],
        "finalScore": 0.4,
    },
    {"ontologies": []},
]


def test_bioportal_query_and_mapping(monkeypatch):
    monkeypatch.delenv(BIOPORTAL_KEY_ENV, raising=False)
    http = StubHttp(BIOPORTAL_PAYLOAD)
    recs = query_remote("bioportal", "disease", api_key="k123", http=http)
    call = http.calls[0]
    assert call["url"] == BIOPORTAL_RECOMMENDER_URL
    assert call["params"] == {"input": "disease", "apikey": "k123"}
    assert [r.item for r in recs] == [
        "https://data.bioontology.org/ontologies/DOID",
        "MESH",
    ]
    # percentage-style scores are normalized into [0, 1]
    assert recs[0].score == pytest.approx(0.875)
    assert recs[1].score == pytest.approx(0.4)
    assert recs[0].source == "DOID"


def test_bioportal_key_from_environment(monkeypatch):
    monkeypatch.setenv(BIOPORTAL_KEY_ENV, "env-key")
    http = StubHttp([])
    query_remote("bioportal", "x", http=http)
    assert http.calls[0]["params"]["apikey"] == "env-key"


def test_bioportal_missing_key(monkeypatch):
    monkeypatch.delenv(BIOPORTAL_KEY_ENV, raising=False)
    with pytest.raises(MissingApiKeyError):
        query_remote("bioportal", "x", http=StubHttp([]))


def test_unknown_provider():
    with pytest.raises(ValueError):
        query_remote("wikidata", "x", http=StubHttp({}))


def test_network_error_wrapped():
    http = StubHttp({}, error=requests.ConnectionError("no route"))
    with pytest.raises(NetworkUnavailableError):
        query_remote("lov", "x", http=http)


def test_http_error_status():
    http = StubHttp({}, status_code=503)
    with pytest.raises(ProviderError) as excinfo:
        query_remote("lov", "x", http=http)
    assert excinfo.value.provider == "lov"
    assert excinfo.value.status == 503


def test_defensive_mapping_of_garbage_payloads():
    assert query_remote("lov", "x", http=StubHttp({"results": "nope"})) == []
    assert query_remote("lov", "x", http=StubHttp(["not", "a", "dict"])) == []
    assert query_remote("bioportal", "x", api_key="k",
                        http=StubHttp({"unexpected": True})) == []
