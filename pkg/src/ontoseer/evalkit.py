"""Precision@k / recall@k over ranked recommendation lists.

Items are canonicalized (trimmed, lowercased) before comparison because
gold files commonly mix IRIs and labels with arbitrary casing.  Precision
always divides by k, so a recommender that returns fewer than k items
pays for the empty slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ontoseer.errors import OntoSeerError


class EmptyGoldError(OntoSeerError, ValueError):
    pass


class MissingGoldError(OntoSeerError, KeyError):
    def __init__(self, feature: str):
        self.feature = feature
        super().__init__(f"no gold set for feature {feature!r}")


def canonicalize(item: str) -> str:
    return item.strip().lower()


@dataclass(frozen=True)
class GoldSet:
    feature: str
    items: frozenset[str]

    @staticmethod
    def of(feature: str, items) -> "GoldSet":
        return GoldSet(feature, frozenset(canonicalize(i) for i in items))


def hits_at_k(recs, gold: GoldSet, k: int) -> int:
    if not gold.items:
        raise EmptyGoldError(f"gold set for {gold.feature!r} is empty")
    if k < 1:
        raise ValueError("k must be at least 1")
    top = {canonicalize(r) for r in list(recs)[:k]}
    return len(top & gold.items)


def precision_at_k(recs, gold: GoldSet, k: int) -> float:
    return hits_at_k(recs, gold, k) / k


def recall_at_k(recs, gold: GoldSet, k: int) -> float:
    return hits_at_k(recs, gold, k) / len(gold.items)


@dataclass(frozen=True)
class EvalRow:
    k: int
    precision: float
    recall: float
    hits: int


@dataclass(frozen=True)
class EvalReport:
    feature: str
    rows: tuple[EvalRow, ...]


def evaluate(recs: dict, gold: dict, ks) -> list[EvalReport]:
    """One report per feature with one row per k, features sorted, k
    ascending."""
    reports = []
    for feature in sorted(recs):
        if feature not in gold:
            raise MissingGoldError(feature)
        ranked = recs[feature]
        rows = tuple(
            EvalRow(k=k,
                    precision=precision_at_k(ranked, gold[feature], k),
                    recall=recall_at_k(ranked, gold[feature], k),
                    hits=hits_at_k(ranked, gold[feature], k))
            for k in sorted(ks))
        reports.append(EvalReport(feature=feature, rows=rows))
    return reports


def load_gold(path: str | Path) -> dict[str, GoldSet]:
    """Gold file: one `feature<TAB>item` pair per line."""
    grouped: dict[str, list[str]] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        feature, sep, item = line.partition("\t")
        if not sep or not item.strip():
            raise OntoSeerError(f"{path}:{lineno}: expected feature<TAB>item")
        grouped.setdefault(feature.strip(), []).append(item)
    return {f: GoldSet.of(f, items) for f, items in grouped.items()}


def load_recs(path: str | Path) -> dict[str, list[str]]:
    """Recommendation dump: `feature<TAB>rank<TAB>item` lines, returned as
    rank-ordered lists."""
    grouped: dict[str, list[tuple[int, str]]] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise OntoSeerError(f"{path}:{lineno}: expected feature<TAB>rank<TAB>item")
        feature, rank, item = parts
        try:
            rank_num = int(rank)
        except ValueError:
            raise OntoSeerError(f"{path}:{lineno}: rank {rank!r} is not an integer")
        grouped.setdefault(feature.strip(), []).append((rank_num, item))
    return {f: [item for _, item in sorted(pairs, key=lambda p: p[0])]
            for f, pairs in grouped.items()}


def format_reports(reports: list[EvalReport]) -> str:
    """Plain-text table, one feature per row, a P@k and R@k column pair
    per k, rounded to two decimals for display."""
    if not reports:
        return ""
    ks = [row.k for row in reports[0].rows]
    width = max(12, *(len(r.feature) for r in reports))
    header = "feature".ljust(width) + "".join(f"  P@{k:<4} R@{k:<4}" for k in ks)
    lines = [header]
    for report in reports:
        cells = "".join(f"  {row.precision:<6.2f} {row.recall:<6.2f}"
                        for row in report.rows)
        lines.append(report.feature.ljust(width) + cells)
    return "\n".join(lines)
