"""Turtle subset reader and writer.

Accepted syntax: ``@prefix`` directives, subject/predicate/object statements
with ``;`` and ``,`` lists, ``a`` for rdf:type, ``<...>`` IRIs, prefixed
names, plain and language-tagged string literals, ``[ ... ]`` blank node
property lists, ``( ... )`` collections, ``_:name`` blank node labels and
``#`` line comments.  Everything else is a syntax error with a position.
"""

from __future__ import annotations

import re
from pathlib import Path

from ontoseer.errors import OntoSeerError
from ontoseer.model import (
    RDF_FIRST,
    RDF_NIL,
    RDF_REST,
    RDF_TYPE,
    BlankNode,
    InvalidIriError,
    Iri,
    Literal,
    OntologyDocument,
    OWL_ONTOLOGY,
    Triple,
    extract_profile,
)


class TurtleSyntaxError(OntoSeerError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class UnknownPrefixError(TurtleSyntaxError):
    def __init__(self, prefix: str, line: int, column: int):
        self.prefix = prefix
        super().__init__(line, column, f"undeclared prefix {prefix + ':'!r}")


# ---------------------------------------------------------------------------
# Tokenizer

_IRIREF = "iriref"
_PNAME = "pname"
_BLANK = "blank"
_STRING = "string"
_LANGTAG = "langtag"
_PREFIX_KW = "@prefix"
_A = "a"
_PUNCT = {".", ";", ",", "[", "]", "(", ")"}
_EOF = "eof"

_PN_PREFIX_RE = re.compile(r"[A-Za-z][A-Za-z0-9_-]*")
_PN_LOCAL_CHARS = re.compile(r"[A-Za-z0-9_.\-]")
_BLANK_LABEL_RE = re.compile(r"[A-Za-z0-9_]+")
_LANG_RE = re.compile(r"[a-zA-Z]+(?:-[a-zA-Z0-9]+)*")

_ESCAPES = {
    "t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
    '"': '"', "'": "'", "\\": "\\",
}


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message, line=None, col=None):
        raise TurtleSyntaxError(line or self.line, col or self.col, message)

    def _advance(self, n=1):
        for _ in range(n):
            if self.pos < len(self.text):
                if self.text[self.pos] == "\n":
                    self.line += 1
                    self.col = 1
                else:
                    self.col += 1
                self.pos += 1

    def _skip_ws_and_comments(self):
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c in " \t\r\n":
                self._advance()
            elif c == "#":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self._advance()
            else:
                return

    def tokens(self):
        while True:
            self._skip_ws_and_comments()
            line, col = self.line, self.col
            if self.pos >= len(self.text):
                yield _Token(_EOF, "", line, col)
                return
            c = self.text[self.pos]
            if c in _PUNCT:
                self._advance()
                yield _Token(c, c, line, col)
            elif c == "<":
                yield self._iriref(line, col)
            elif c == '"':
                yield self._string(line, col)
            elif c == "@":
                yield self._at_word(line, col)
            elif c == "_" and self.text[self.pos + 1:self.pos + 2] == ":":
                yield self._blank(line, col)
            else:
                yield self._name(line, col)

    def _iriref(self, line, col):
        end = self.text.find(">", self.pos + 1)
        if end == -1:
            self.error("unterminated IRI", line, col)
        raw = self.text[self.pos + 1:end]
        if "\n" in raw:
            self.error("unterminated IRI", line, col)
        self._advance(end + 1 - self.pos)
        try:
            iri = Iri(raw)
        except InvalidIriError as exc:
            self.error(str(exc), line, col)
        return _Token(_IRIREF, iri, line, col)

    def _string(self, line, col):
        self._advance()  # opening quote
        out = []
        while True:
            if self.pos >= len(self.text) or self.text[self.pos] == "\n":
                self.error("unterminated string literal", line, col)
            c = self.text[self.pos]
            if c == '"':
                self._advance()
                return _Token(_STRING, "".join(out), line, col)
            if c == "\\":
                self._advance()
                if self.pos >= len(self.text):
                    self.error("unterminated string literal", line, col)
                e = self.text[self.pos]
                if e in _ESCAPES:
                    out.append(_ESCAPES[e])
                    self._advance()
                elif e in "uU":
                    width = 4 if e == "u" else 8
                    hexdigits = self.text[self.pos + 1:self.pos + 1 + width]
                    if len(hexdigits) < width or not all(h in "0123456789abcdefABCDEF" for h in hexdigits):
                        self.error(f"bad \\{e} escape", self.line, self.col)
                    out.append(chr(int(hexdigits, 16)))
                    self._advance(1 + width)
                else:
                    self.error(f"unsupported escape \\{e}", self.line, self.col)
            else:
                out.append(c)
                self._advance()

    def _at_word(self, line, col):
        m = _LANG_RE.match(self.text, self.pos + 1)
        if not m:
            self.error("expected a language tag or directive after '@'")
        word = m.group(0)
        self._advance(1 + len(word))
        if word == "prefix":
            return _Token(_PREFIX_KW, word, line, col)
        if word == "base":
            self.error("@base is not supported", line, col)
        return _Token(_LANGTAG, word, line, col)

    def _blank(self, line, col):
        m = _BLANK_LABEL_RE.match(self.text, self.pos + 2)
        if not m:
            self.error("expected a label after '_:'")
        self._advance(2 + len(m.group(0)))
        return _Token(_BLANK, m.group(0), line, col)

    def _name(self, line, col):
        # bare `a`, or a prefixed name `p:Local` / `:Local` / `p:`
        m = _PN_PREFIX_RE.match(self.text, self.pos)
        prefix = m.group(0) if m else ""
        after = self.pos + len(prefix)
        if self.text[after:after + 1] != ":":
            if prefix == "a":
                self._advance(1)
                return _Token(_A, "a", line, col)
            self.error(f"unexpected input {self.text[self.pos:self.pos + 10]!r}")
        # scan the local part, giving trailing dots back to the stream
        end = after + 1
        while end < len(self.text) and _PN_LOCAL_CHARS.match(self.text[end]):
            end += 1
        local = self.text[after + 1:end]
        while local.endswith("."):
            local = local[:-1]
            end -= 1
        self._advance(end - self.pos)
        return _Token(_PNAME, (prefix, local), line, col)


# ---------------------------------------------------------------------------
# Parser

class _Parser:
    def __init__(self, text: str):
        self._tokens = _Lexer(text).tokens()
        self.token = next(self._tokens)
        self.prefixes: dict[str, str] = {}
        self.triples: list[Triple] = []
        self._blank_seq = 0
        self._blank_labels: dict[str, BlankNode] = {}

    def _next(self):
        self.token = next(self._tokens)

    def _show(self) -> str:
        if self.token.kind == _EOF:
            return "end of input"
        value = self.token.value
        if self.token.kind == _PNAME:
            prefix, local = value
            return f"'{prefix}:{local}'"
        return repr(value)

    def _expect(self, kind, what):
        if self.token.kind != kind:
            self.error(f"expected {what}, found {self._show()}")
        tok = self.token
        self._next()
        return tok

    def error(self, message):
        raise TurtleSyntaxError(self.token.line, self.token.col, message)

    def _new_blank(self) -> BlankNode:
        self._blank_seq += 1
        return BlankNode(f"_:b{self._blank_seq}")

    def _labelled_blank(self, label: str) -> BlankNode:
        # explicit labels share the document-order numbering with [] nodes
        if label not in self._blank_labels:
            self._blank_labels[label] = self._new_blank()
        return self._blank_labels[label]

    def parse(self):
        while self.token.kind != _EOF:
            if self.token.kind == _PREFIX_KW:
                self._directive()
            else:
                self._statement()
        return self.prefixes, self.triples

    def _directive(self):
        self._next()
        tok = self._expect(_PNAME, "a prefix name")
        prefix, local = tok.value
        if local:
            raise TurtleSyntaxError(tok.line, tok.col, "prefix declaration must end with ':'")
        iri_tok = self._expect(_IRIREF, "an IRI")
        self._expect(".", "'.'")
        self.prefixes[prefix] = str(iri_tok.value)

    def _statement(self):
        subject = self._subject()
        if self.token.kind == "." and isinstance(subject, BlankNode):
            # `[ ... ] .`: the property list already produced the triples
            self._next()
            return
        self._predicate_object_list(subject)
        self._expect(".", "'.'")

    def _subject(self):
        kind = self.token.kind
        if kind in (_IRIREF, _PNAME):
            return self._iri()
        if kind == _BLANK:
            label = self.token.value
            self._next()
            return self._labelled_blank(label)
        if kind == "[":
            return self._blank_property_list()
        if kind == "(":
            return self._collection()
        self.error(f"expected a subject, found {self._show()}")

    def _iri(self) -> Iri:
        tok = self.token
        if tok.kind == _IRIREF:
            self._next()
            return tok.value
        prefix, local = tok.value
        if prefix not in self.prefixes:
            raise UnknownPrefixError(prefix, tok.line, tok.col)
        self._next()
        try:
            return Iri(self.prefixes[prefix] + local)
        except InvalidIriError as exc:
            raise TurtleSyntaxError(tok.line, tok.col, str(exc))

    def _predicate_object_list(self, subject):
        while True:
            predicate = self._verb()
            self._object_list(subject, predicate)
            if self.token.kind == ";":
                self._next()
                # tolerate a trailing ';' before '.' or ']'
                if self.token.kind in (".", "]"):
                    return
                continue
            return

    def _verb(self) -> Iri:
        if self.token.kind == _A:
            self._next()
            return RDF_TYPE
        if self.token.kind in (_IRIREF, _PNAME):
            return self._iri()
        self.error(f"expected a predicate, found {self._show()}")

    def _object_list(self, subject, predicate):
        while True:
            obj = self._object()
            self.triples.append(Triple(subject, predicate, obj))
            if self.token.kind == ",":
                self._next()
                continue
            return

    def _object(self):
        kind = self.token.kind
        if kind in (_IRIREF, _PNAME):
            return self._iri()
        if kind == _BLANK:
            label = self.token.value
            self._next()
            return self._labelled_blank(label)
        if kind == _STRING:
            text = self.token.value
            self._next()
            lang = None
            if self.token.kind == _LANGTAG:
                lang = self.token.value
                self._next()
            return Literal(text, lang)
        if kind == "[":
            return self._blank_property_list()
        if kind == "(":
            return self._collection()
        self.error(f"expected an object, found {self._show()}")

    def _blank_property_list(self) -> BlankNode:
        self._next()  # '['
        node = self._new_blank()
        if self.token.kind != "]":
            self._predicate_object_list(node)
        self._expect("]", "']'")
        return node

    def _collection(self):
        self._next()  # '('
        items = []
        while self.token.kind != ")":
            if self.token.kind == _EOF:
                self.error("unterminated collection")
            items.append(self._object())
        self._next()  # ')'
        if not items:
            return RDF_NIL
        cells = [self._new_blank() for _ in items]
        for i, (cell, item) in enumerate(zip(cells, items)):
            self.triples.append(Triple(cell, RDF_FIRST, item))
            rest = cells[i + 1] if i + 1 < len(cells) else RDF_NIL
            self.triples.append(Triple(cell, RDF_REST, rest))
        return cells[0]


def parse_turtle(text: str, ontology_id: str | None = None,
                 source_path: str = "") -> OntologyDocument:
    """Parse a Turtle document and extract its profile.

    ``ontology_id`` defaults to the IRI of the first subject typed
    owl:Ontology, then to the source path, then to the empty string.
    """
    prefixes, triples = _Parser(text).parse()
    doc_id = ontology_id
    if doc_id is None:
        for t in triples:
            if t.predicate == RDF_TYPE and t.object == OWL_ONTOLOGY and isinstance(t.subject, Iri):
                doc_id = str(t.subject)
                break
    if doc_id is None:
        doc_id = source_path or ""
    doc = OntologyDocument(ontology_id=doc_id, prefixes=prefixes,
                           triples=triples, source_path=source_path)
    return extract_profile(doc)


def load_ontology(path: str | Path, ontology_id: str | None = None) -> OntologyDocument:
    p = Path(path)
    return parse_turtle(p.read_text(encoding="utf-8"), ontology_id=ontology_id,
                        source_path=str(p))


# ---------------------------------------------------------------------------
# Serializer

_UNESCAPES = {"\t": "\\t", "\b": "\\b", "\n": "\\n", "\r": "\\r",
              "\f": "\\f", '"': '\\"', "\\": "\\\\"}

_SAFE_LOCAL_RE = re.compile(r"(?:[A-Za-z0-9_][A-Za-z0-9_-]*)?$")


def _escape(text: str) -> str:
    return "".join(_UNESCAPES.get(c, c) for c in text)


def _compact(iri: str, prefixes: dict[str, str]) -> str:
    best = None
    for prefix, ns in prefixes.items():
        if iri.startswith(ns) and _SAFE_LOCAL_RE.fullmatch(iri[len(ns):]):
            if best is None or len(ns) > len(prefixes[best]):
                best = prefix
    if best is None:
        return f"<{iri}>"
    return f"{best}:{iri[len(prefixes[best]):]}"


def serialize_triples(doc: OntologyDocument) -> str:
    """Write the document back out in the same Turtle subset.

    Statements are grouped by subject in first-appearance order with ``;``
    and ``,`` lists; anonymous nodes keep their ``_:bN`` labels, so the
    output reparses to an equal triple set.
    """
    lines = [f"@prefix {p}: <{iri}> ." for p, iri in sorted(doc.prefixes.items())]

    def term(node) -> str:
        if isinstance(node, BlankNode):
            return str(node)
        if isinstance(node, Literal):
            s = f'"{_escape(node.text)}"'
            return s + (f"@{node.lang}" if node.lang else "")
        return _compact(str(node), doc.prefixes)

    # subject -> predicate -> objects, all in first-appearance order
    by_subject: dict[object, dict[Iri, list[object]]] = {}
    for t in doc.triples:
        by_subject.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t.object)

    if lines and by_subject:
        lines.append("")
    for subject, po in by_subject.items():
        parts = []
        for predicate, objects in po.items():
            pred = "a" if predicate == RDF_TYPE else term(predicate)
            objs = ", ".join(term(o) for o in objects)
            parts.append(f"{pred} {objs}")
        lines.append(f"{term(subject)} " + " ;\n    ".join(parts) + " .")
    return "\n".join(lines) + ("\n" if lines else "")
