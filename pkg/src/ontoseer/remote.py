"""Optional remote term/vocabulary recommenders (LOV and BioPortal).

Both clients return plain Recommendation lists so callers can merge them
with local index results.  All core functionality works without them; the
tests exercise these through stubbed transports.
"""

from __future__ import annotations

import os

import requests

from ontoseer.errors import OntoSeerError
from ontoseer.index import Recommendation

LOV_SUGGEST_URL = "https://lov.linkeddata.es/dataset/lov/api/v2/term/suggest"
BIOPORTAL_RECOMMENDER_URL = "https://data.bioontology.org/recommender"

BIOPORTAL_KEY_ENV = "ONTOSEER_BIOPORTAL_KEY"


class NetworkUnavailableError(OntoSeerError):
    pass


class ProviderError(OntoSeerError):
    def __init__(self, provider: str, status: int):
        self.provider = provider
        self.status = status
        super().__init__(f"{provider} answered HTTP {status}")


class MissingApiKeyError(OntoSeerError):
    pass


def _clamp_score(value, fallback: float) -> float:
    try:
        score = float(value)
    except (TypeError, ValueError):
        return fallback
    if score > 1.0:
        # some providers report percentages
        score = score / 100.0
    return min(max(score, 0.0), 1.0)


def _first(value):
    if isinstance(value, list):
        return value[0] if value else ""
    return value or ""


def _map_lov(payload) -> list[Recommendation]:
    results = payload.get("results", []) if isinstance(payload, dict) else []
    out = []
    for rank, item in enumerate(results, start=1):
        if not isinstance(item, dict):
            continue
        uri = str(_first(item.get("uri")))
        if not uri:
            continue
        vocab = str(_first(item.get("vocabulary.prefix")) or _first(item.get("prefixedName")))
        score = _clamp_score(item.get("score"), fallback=1.0 / rank)
        out.append(Recommendation(item=uri, source=vocab or "lov", score=score,
                                  rationale="suggested by LOV"))
    return out


def _map_bioportal(payload) -> list[Recommendation]:
    entries = payload if isinstance(payload, list) else []
    out = []
    for rank, entry in enumerate(entries, start=1):
        if not isinstance(entry, dict):
            continue
        ontologies = entry.get("ontologies") or []
        first = ontologies[0] if ontologies and isinstance(ontologies[0], dict) else {}
        item = str(first.get("@id") or first.get("acronym") or "")
        if not item:
            continue
        evaluation = entry.get("evaluationScore")
        if isinstance(evaluation, dict):
            evaluation = evaluation.get("normalizedScore")
        if evaluation is None:
            evaluation = entry.get("finalScore")
        score = _clamp_score(evaluation, fallback=1.0 / rank)
        out.append(Recommendation(item=item, source=str(first.get("acronym") or "bioportal"),
                                  score=score, rationale="suggested by BioPortal"))
    return out


def query_remote(provider: str, query: str, api_key: str | None = None,
                 http=None, timeout: float = 10.0) -> list[Recommendation]:
    """Query LOV term suggest or the BioPortal recommender.

    ``http`` is a requests-compatible object with a ``get`` method; tests
    inject a stub here.  BioPortal needs an API key, taken from the
    argument or the ONTOSEER_BIOPORTAL_KEY environment variable.
    """
    if provider not in ("lov", "bioportal"):
        raise ValueError(f"provider must be 'lov' or 'bioportal', not {provider!r}")
    http = http or requests
    if provider == "lov":
        url, params = LOV_SUGGEST_URL, {"q": query}
    else:
        key = api_key or os.environ.get(BIOPORTAL_KEY_ENV)
        if not key:
            raise MissingApiKeyError(
                f"BioPortal needs an API key ({BIOPORTAL_KEY_ENV} or api_key=)")
        url, params = BIOPORTAL_RECOMMENDER_URL, {"input": query, "apikey": key}
    try:
        response = http.get(url, params=params, timeout=timeout)
    except requests.RequestException as exc:
        raise NetworkUnavailableError(f"{provider} unreachable: {exc}")
    if response.status_code != 200:
        raise ProviderError(provider, response.status_code)
    payload = response.json()
    return _map_lov(payload) if provider == "lov" else _map_bioportal(payload)
