"""RDF data model: IRIs, blank nodes, literals, triples, axioms and the
per-ontology profile (classes, properties, axioms) extracted from them.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Union

from ontoseer.errors import OntoSeerError


class InvalidIriError(OntoSeerError, ValueError):
    pass


class Iri(str):
    """An absolute IRI.  Subclasses ``str`` so instances drop straight into
    sets, dict keys and sort orders."""

    __slots__ = ()

    def __new__(cls, value: str) -> "Iri":
        if not value:
            raise InvalidIriError("IRI must be non-empty")
        if any(c.isspace() for c in value):
            raise InvalidIriError(f"IRI contains whitespace: {value!r}")
        if ":" not in value:
            raise InvalidIriError(f"IRI is not absolute (no scheme): {value!r}")
        return super().__new__(cls, value)


class BlankNode(str):
    """An anonymous node id of the form ``_:bN``."""

    __slots__ = ()

    def __new__(cls, value: str) -> "BlankNode":
        if not value.startswith("_:") or len(value) < 3:
            raise ValueError(f"blank node id must look like _:name, got {value!r}")
        return super().__new__(cls, value)


@dataclass(frozen=True)
class Literal:
    """A plain or language-tagged string literal, kept verbatim and untyped."""

    text: str
    lang: str | None = None


Subject = Union[Iri, BlankNode]
Object = Union[Iri, BlankNode, Literal]


@dataclass(frozen=True)
class Triple:
    subject: Subject
    predicate: Iri
    object: Object


def local_name(iri: str) -> str:
    """Identifier fragment of an IRI: after the last '#', else after the
    last '/', else the whole value."""
    if "#" in iri:
        return iri.rsplit("#", 1)[1]
    if "/" in iri:
        return iri.rsplit("/", 1)[1]
    return iri


# Namespaces used for extraction (and by the parser for the `a` keyword).
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

RDF_TYPE = Iri(RDF_NS + "type")
RDF_FIRST = Iri(RDF_NS + "first")
RDF_REST = Iri(RDF_NS + "rest")
RDF_NIL = Iri(RDF_NS + "nil")

RDFS_SUBCLASSOF = Iri(RDFS_NS + "subClassOf")
RDFS_SUBPROPERTYOF = Iri(RDFS_NS + "subPropertyOf")
RDFS_DOMAIN = Iri(RDFS_NS + "domain")
RDFS_RANGE = Iri(RDFS_NS + "range")
RDFS_LABEL = Iri(RDFS_NS + "label")
RDFS_COMMENT = Iri(RDFS_NS + "comment")

OWL_CLASS = Iri(OWL_NS + "Class")
OWL_ONTOLOGY = Iri(OWL_NS + "Ontology")
OWL_OBJECT_PROPERTY = Iri(OWL_NS + "ObjectProperty")
OWL_DATATYPE_PROPERTY = Iri(OWL_NS + "DatatypeProperty")
OWL_DISJOINTWITH = Iri(OWL_NS + "disjointWith")
OWL_EQUIVALENTCLASS = Iri(OWL_NS + "equivalentClass")
OWL_INVERSEOF = Iri(OWL_NS + "inverseOf")


class AxiomKind(Enum):
    SUBCLASS_OF = "SubClassOf"
    DISJOINT_WITH = "DisjointWith"
    EQUIVALENT_CLASS = "EquivalentClass"
    DOMAIN = "Domain"
    RANGE = "Range"
    SUBPROPERTY_OF = "SubPropertyOf"
    INVERSE_OF = "InverseOf"
    CHARACTERISTIC = "Characteristic"


class Characteristic(Enum):
    TRANSITIVE = "Transitive"
    SYMMETRIC = "Symmetric"
    ASYMMETRIC = "Asymmetric"
    FUNCTIONAL = "Functional"
    INVERSE_FUNCTIONAL = "InverseFunctional"
    REFLEXIVE = "Reflexive"
    IRREFLEXIVE = "Irreflexive"


# Property-characteristic classes recognised during extraction.
CHARACTERISTIC_CLASSES = {
    Iri(OWL_NS + "TransitiveProperty"): Characteristic.TRANSITIVE,
    Iri(OWL_NS + "SymmetricProperty"): Characteristic.SYMMETRIC,
    Iri(OWL_NS + "AsymmetricProperty"): Characteristic.ASYMMETRIC,
    Iri(OWL_NS + "FunctionalProperty"): Characteristic.FUNCTIONAL,
    Iri(OWL_NS + "InverseFunctionalProperty"): Characteristic.INVERSE_FUNCTIONAL,
    Iri(OWL_NS + "ReflexiveProperty"): Characteristic.REFLEXIVE,
    Iri(OWL_NS + "IrreflexiveProperty"): Characteristic.IRREFLEXIVE,
}

# Predicate -> axiom kind for the two-place axioms.
BINARY_AXIOM_PREDICATES = {
    RDFS_SUBCLASSOF: AxiomKind.SUBCLASS_OF,
    OWL_DISJOINTWITH: AxiomKind.DISJOINT_WITH,
    OWL_EQUIVALENTCLASS: AxiomKind.EQUIVALENT_CLASS,
    RDFS_DOMAIN: AxiomKind.DOMAIN,
    RDFS_RANGE: AxiomKind.RANGE,
    RDFS_SUBPROPERTYOF: AxiomKind.SUBPROPERTY_OF,
    OWL_INVERSEOF: AxiomKind.INVERSE_OF,
}


@dataclass(frozen=True)
class Axiom:
    """A named-operand axiom.  ``object`` is absent exactly when the axiom is
    a property characteristic, in which case ``characteristic`` is set."""

    kind: AxiomKind
    subject: Iri
    object: Iri | None = None
    characteristic: Characteristic | None = None

    def __post_init__(self) -> None:
        if self.kind is AxiomKind.CHARACTERISTIC:
            if self.characteristic is None or self.object is not None:
                raise ValueError("characteristic axioms carry a characteristic and no object")
        else:
            if self.object is None or self.characteristic is not None:
                raise ValueError(f"{self.kind.value} axioms need a named object")

    def substitute(self, old: Iri, new: Iri) -> "Axiom":
        """Return a copy with every occurrence of ``old`` replaced by ``new``."""
        return Axiom(
            kind=self.kind,
            subject=new if self.subject == old else self.subject,
            object=None if self.object is None else (new if self.object == old else self.object),
            characteristic=self.characteristic,
        )


def render_axiom(axiom: Axiom) -> str:
    """Canonical one-line rendering, used for display and tie-breaking."""
    if axiom.kind is AxiomKind.CHARACTERISTIC:
        return f"{axiom.characteristic.value}(<{axiom.subject}>)"
    return f"{axiom.kind.value}(<{axiom.subject}>, <{axiom.object}>)"


@dataclass
class OntologyDocument:
    """A parsed ontology: its triples plus the extracted profile."""

    ontology_id: str
    prefixes: dict[str, str] = field(default_factory=dict)
    triples: list[Triple] = field(default_factory=list)
    classes: set[Iri] = field(default_factory=set)
    object_properties: set[Iri] = field(default_factory=set)
    data_properties: set[Iri] = field(default_factory=set)
    axioms: list[Axiom] = field(default_factory=list)
    skipped_constructs: int = 0
    source_path: str = ""

    @property
    def properties(self) -> set[Iri]:
        return self.object_properties | self.data_properties

    @property
    def terms(self) -> set[Iri]:
        """All named entities of the profile: classes plus properties."""
        return self.classes | self.object_properties | self.data_properties

    def label(self) -> str:
        """rdfs:label of the ontology node, falling back to the file stem or id."""
        onto_nodes = {
            t.subject for t in self.triples
            if t.predicate == RDF_TYPE and t.object == OWL_ONTOLOGY
        }
        for t in self.triples:
            if t.predicate == RDFS_LABEL and t.subject in onto_nodes:
                if isinstance(t.object, Literal):
                    return t.object.text
        if self.source_path:
            stem = self.source_path.replace("\\", "/").rsplit("/", 1)[-1]
            return stem.rsplit(".", 1)[0] if "." in stem else stem
        return local_name(self.ontology_id) or self.ontology_id


def _named(node: object) -> bool:
    return isinstance(node, Iri)


def extract_profile(doc: OntologyDocument) -> OntologyDocument:
    """Populate classes, properties and axioms from the document's triples.

    Only named (non-anonymous) operands contribute; an axiom-shaped triple
    with an anonymous or literal operand is skipped and counted in
    ``skipped_constructs``.
    """
    classes: set[Iri] = set()
    object_properties: set[Iri] = set()
    data_properties: set[Iri] = set()
    axioms: list[Axiom] = []
    seen: set[Axiom] = set()
    skipped = 0

    for t in doc.triples:
        if t.predicate == RDF_TYPE:
            if t.object == OWL_CLASS and _named(t.subject):
                classes.add(t.subject)
            elif t.object == OWL_OBJECT_PROPERTY and _named(t.subject):
                object_properties.add(t.subject)
            elif t.object == OWL_DATATYPE_PROPERTY and _named(t.subject):
                data_properties.add(t.subject)
            elif isinstance(t.object, Iri) and t.object in CHARACTERISTIC_CLASSES:
                if _named(t.subject):
                    ax = Axiom(
                        AxiomKind.CHARACTERISTIC,
                        t.subject,
                        characteristic=CHARACTERISTIC_CLASSES[t.object],
                    )
                    if ax not in seen:
                        seen.add(ax)
                        axioms.append(ax)
                else:
                    skipped += 1
        elif t.predicate in BINARY_AXIOM_PREDICATES:
            if _named(t.subject) and _named(t.object):
                kind = BINARY_AXIOM_PREDICATES[t.predicate]
                ax = Axiom(kind, t.subject, t.object)
                if ax not in seen:
                    seen.add(ax)
                    axioms.append(ax)
                if kind is AxiomKind.SUBCLASS_OF:
                    classes.add(t.subject)
                    classes.add(t.object)
            else:
                skipped += 1

    return replace(
        doc,
        classes=classes,
        object_properties=object_properties,
        data_properties=data_properties,
        axioms=axioms,
        skipped_constructs=skipped,
    )


def canonical_triples(doc: OntologyDocument) -> frozenset[Triple]:
    """Triple set with blank node ids renamed by first occurrence, so two
    documents can be compared up to consistent anonymous-node renaming."""
    mapping: dict[BlankNode, BlankNode] = {}

    def rename(node):
        if isinstance(node, BlankNode):
            if node not in mapping:
                mapping[node] = BlankNode(f"_:c{len(mapping) + 1}")
            return mapping[node]
        return node

    out = []
    for t in doc.triples:
        out.append(Triple(rename(t.subject), t.predicate, rename(t.object)))
    return frozenset(out)
