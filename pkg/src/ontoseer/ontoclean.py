"""Class hierarchy validation from rigidity, identity and unity profiles.

Profiles are elicited per class through three yes/no questions; every
asserted subclass edge is then checked against the value table: identity
and unity must agree across the edge, and a non-rigid superclass cannot
have a rigid subclass.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ontoseer.model import AxiomKind, Iri, OntologyDocument, local_name


class Value(enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    UNKNOWN = "Unknown"


class Rule(enum.Enum):
    RIGIDITY = "Rigidity"
    IDENTITY = "Identity"
    UNITY = "Unity"


class Status(enum.Enum):
    SATISFIED = "Satisfied"
    VIOLATED = "Violated"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class MetaProfile:
    cls: str
    rigidity: Value = Value.UNKNOWN
    identity: Value = Value.UNKNOWN
    unity: Value = Value.UNKNOWN

    def value_for(self, rule: Rule) -> Value:
        return {Rule.RIGIDITY: self.rigidity,
                Rule.IDENTITY: self.identity,
                Rule.UNITY: self.unity}[rule]

    def complete(self) -> bool:
        return Value.UNKNOWN not in (self.rigidity, self.identity, self.unity)


@dataclass(frozen=True)
class Verdict:
    subclass: str
    superclass: str
    rule: Rule
    status: Status
    explanation: str


QUESTION_TEMPLATES = (
    "Do the properties of the class {name} cease to exist in the future?",
    "Are the properties of the superclass and the subclass {name} identical?",
    "Is the property of the subclass {name} part of the properties of the super class?",
)


def questions_for(cls: Iri | str) -> list[str]:
    name = local_name(cls)
    return [template.format(name=name) for template in QUESTION_TEMPLATES]


def _as_bool(answer) -> bool | None:
    if answer is None or answer == "":
        return None
    if isinstance(answer, bool):
        return answer
    text = str(answer).strip().lower()
    if text in ("yes", "y", "true"):
        return True
    if text in ("no", "n", "false"):
        return False
    raise ValueError(f"answer must be yes or no, not {answer!r}")


def profile_from_answers(cls: Iri | str, answers: dict) -> MetaProfile:
    """Build a profile from the three answers.

    Question 1 asks whether membership can cease, so yes means the class
    is not rigid.  Questions 2 and 3 affirm identity and unity directly.
    Missing answers leave the value Unknown.
    """
    q1 = _as_bool(answers.get("q1"))
    q2 = _as_bool(answers.get("q2"))
    q3 = _as_bool(answers.get("q3"))
    return MetaProfile(
        cls=str(cls),
        rigidity=Value.UNKNOWN if q1 is None else (Value.NEGATIVE if q1 else Value.POSITIVE),
        identity=Value.UNKNOWN if q2 is None else (Value.POSITIVE if q2 else Value.NEGATIVE),
        unity=Value.UNKNOWN if q3 is None else (Value.POSITIVE if q3 else Value.NEGATIVE),
    )


def _edge_status(rule: Rule, sup: Value, sub: Value) -> Status:
    if Value.UNKNOWN in (sup, sub):
        return Status.INDETERMINATE
    if rule is Rule.RIGIDITY:
        # a rigid superclass accepts both; a non-rigid one only non-rigid
        if sup is Value.POSITIVE:
            return Status.SATISFIED
        return Status.SATISFIED if sub is Value.NEGATIVE else Status.VIOLATED
    return Status.SATISFIED if sup is sub else Status.VIOLATED


def validate_edge(sup: MetaProfile, sub: MetaProfile) -> list[Verdict]:
    """Three verdicts, one per rule, for the edge sub SubClassOf sup."""
    verdicts = []
    for rule in Rule:
        sup_value = sup.value_for(rule)
        sub_value = sub.value_for(rule)
        status = _edge_status(rule, sup_value, sub_value)
        explanation = (f"superclass {local_name(sup.cls)} {rule.value.lower()} "
                       f"{sup_value.value}, subclass {local_name(sub.cls)} "
                       f"{rule.value.lower()} {sub_value.value}")
        verdicts.append(Verdict(subclass=sub.cls, superclass=sup.cls,
                                rule=rule, status=status, explanation=explanation))
    return verdicts


def subclass_edges(doc: OntologyDocument) -> list[tuple[str, str]]:
    return [(str(a.subject), str(a.object))
            for a in doc.axioms if a.kind is AxiomKind.SUBCLASS_OF]


def validate_hierarchy(doc: OntologyDocument,
                       profiles: dict[str, MetaProfile]) -> list[Verdict]:
    """Verdicts for every asserted subclass edge, sorted by subclass,
    superclass, then rule.  Classes missing from the profile map get an
    all-Unknown profile, so their verdicts come out Indeterminate.
    """
    verdicts = []
    for sub_iri, sup_iri in sorted(set(subclass_edges(doc))):
        sub = profiles.get(sub_iri, MetaProfile(cls=sub_iri))
        sup = profiles.get(sup_iri, MetaProfile(cls=sup_iri))
        for verdict in validate_edge(sup, sub):
            if verdict.status is Status.INDETERMINATE:
                missing = [local_name(c) for c, p in ((sub_iri, sub), (sup_iri, sup))
                           if p.value_for(verdict.rule) is Value.UNKNOWN]
                verdict = Verdict(
                    subclass=verdict.subclass, superclass=verdict.superclass,
                    rule=verdict.rule, status=verdict.status,
                    explanation=verdict.explanation
                    + "; awaiting answers for " + ", ".join(missing))
            verdicts.append(verdict)
    return verdicts


def pending_classes(doc: OntologyDocument,
                    profiles: dict[str, MetaProfile]) -> list[str]:
    """Classes on subclass edges whose profile is absent or incomplete."""
    on_edges = sorted({c for edge in subclass_edges(doc) for c in edge})
    return [c for c in on_edges
            if c not in profiles or not profiles[c].complete()]
