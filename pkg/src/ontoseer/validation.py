"""Input validation helpers shared by the estimator classes."""

from __future__ import annotations

from sklearn.exceptions import NotFittedError

from ontoseer.model import OntologyDocument


def check_is_fitted(estimator, attributes) -> None:
    """Raise NotFittedError unless every named attribute is set."""
    if isinstance(attributes, str):
        attributes = [attributes]
    missing = [a for a in attributes if getattr(estimator, a, None) is None]
    if missing:
        raise NotFittedError(
            f"{type(estimator).__name__} is not fitted yet; call fit first "
            f"(missing {', '.join(missing)})")


def check_unit_interval(value, name: str) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must be within [0, 1], got {value}")
    return value


def check_positive_int(value, name: str) -> int:
    if int(value) != value or int(value) < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def check_documents(docs) -> list[OntologyDocument]:
    docs = list(docs)
    bad = [d for d in docs if not isinstance(d, OntologyDocument)]
    if bad:
        raise TypeError(f"expected OntologyDocument instances, got {type(bad[0]).__name__}")
    return docs


def check_non_empty_text(value, name: str) -> str:
    if not isinstance(value, str) or not value.strip():
        raise ValueError(f"{name} must be non-empty text")
    return value
