"""String-diagram DSL over weighted relations.

Grammar (';' composes left to right and binds loosest, '*' tensors and
binds tighter, both left-associative):

    term   := tensor (';' tensor)*
    tensor := atom ('*' atom)*
    atom   := 'id' '[' word ']' | 'copy' '[' word ']' | 'del' '[' word ']'
            | 'swap' '[' word ';' word ']'
            | 'dom' '(' term ')' | 'mass' '(' term ')'
            | '(' term ')' | NAME
    word   := (NAME (',' NAME)*)?

Bare names are generators; id/copy/del/swap/dom/mass are reserved.  'dom'
and 'mass' are primitives of the term language and are expanded by the
evaluator into their defining composites, so every equation is decided
along a single semantic path.  '#' starts a line comment.

A term file is either a single term or a sequence of 'let name = term'
bindings.  An interpretation file carries a semiring reference, sort
sizes, and one serialized arrow per generator.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .report import COUNTEREXAMPLE, EXHAUSTIVE_PASS, LawReport
from .semiring import Semiring, load_semiring
from .weightmap import FinSet, WeightMapError
from .wrel import (
    BoundaryError,
    WRel,
    WRelFormatError,
    wrel_compose,
    wrel_copy,
    wrel_del,
    wrel_dom,
    wrel_from_doc,
    wrel_id,
    wrel_mass,
    wrel_swap,
    wrel_tensor,
    word_labels,
)


class DiagramError(ValueError):
    """Base for term-language failures; subclasses carry locations."""


class ParseError(DiagramError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class TypecheckError(DiagramError):
    pass


class UnknownGeneratorError(TypecheckError):
    pass


class InterpFormatError(DiagramError):
    pass


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Id:
    word: tuple


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Seq:
    left: object
    right: object


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object


@dataclass(frozen=True)
class Swap:
    left: tuple
    right: tuple


@dataclass(frozen=True)
class Copy:
    word: tuple


@dataclass(frozen=True)
class Del:
    word: tuple


@dataclass(frozen=True)
class Dom:
    term: object


@dataclass(frozen=True)
class Mass:
    term: object


KEYWORDS = {"id", "copy", "del", "swap", "dom", "mass", "let"}

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>#[^\n]*)|(?P<name>[A-Za-z_][A-Za-z_0-9']*)"
    r"|(?P<punct>[;*()\[\],=])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        col = pos - line_start + 1
        if m.lastgroup == "name":
            tokens.append(Token("name", m.group(), line, col))
        elif m.lastgroup == "punct":
            tokens.append(Token(m.group(), m.group(), line, col))
        elif m.lastgroup == "ws":
            for c in m.group():
                pos += 1
                if c == "\n":
                    line += 1
                    line_start = pos
            continue
        pos = m.end()
    tokens.append(Token("eof", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}", tok.line, tok.col)
        return self.next()

    def parse_term(self):
        node = self.parse_tensor()
        while self.peek().kind == ";":
            self.next()
            node = Seq(node, self.parse_tensor())
        return node

    def parse_tensor(self):
        node = self.parse_atom()
        while self.peek().kind == "*":
            self.next()
            node = Tensor(node, self.parse_atom())
        return node

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "(":
            self.next()
            inner = self.parse_term()
            self.expect(")")
            return inner
        if tok.kind != "name":
            raise ParseError(f"expected a term, found {tok.text or 'end of input'!r}", tok.line, tok.col)
        name = self.next().text
        if name == "let":
            raise ParseError("'let' is only allowed at the top of a term file", tok.line, tok.col)
        if name in ("dom", "mass"):
            self.expect("(")
            inner = self.parse_term()
            self.expect(")")
            return Dom(inner) if name == "dom" else Mass(inner)
        if name in ("id", "copy", "del"):
            self.expect("[")
            word = self.parse_word()
            self.expect("]")
            return {"id": Id, "copy": Copy, "del": Del}[name](word)
        if name == "swap":
            self.expect("[")
            left = self.parse_word()
            self.expect(";")
            right = self.parse_word()
            self.expect("]")
            return Swap(left, right)
        return Gen(name)

    def parse_word(self) -> tuple:
        if self.peek().kind != "name":
            return ()
        parts = [self.parse_sort_name()]
        while self.peek().kind == ",":
            self.next()
            parts.append(self.parse_sort_name())
        return tuple(parts)

    def parse_sort_name(self) -> str:
        tok = self.expect("name")
        if tok.text in KEYWORDS:
            raise ParseError(f"{tok.text!r} is reserved and cannot name a sort", tok.line, tok.col)
        return tok.text


def parse_term(text: str):
    parser = _Parser(tokenize(text))
    term = parser.parse_term()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"trailing input starting at {tok.text!r}", tok.line, tok.col)
    return term


def parse_term_file(text: str) -> dict:
    """Named bindings 'let name = term', or a single bare term named 'main'."""
    tokens = tokenize(text)
    if tokens[0].kind == "eof":
        raise ParseError("empty term file", 1, 1)
    if not (tokens[0].kind == "name" and tokens[0].text == "let"):
        return {"main": parse_term(text)}
    parser = _Parser(tokens)
    bindings: dict = {}
    while parser.peek().kind != "eof":
        kw = parser.expect("name")
        if kw.text != "let":
            raise ParseError(f"expected 'let', found {kw.text!r}", kw.line, kw.col)
        name_tok = parser.expect("name")
        if name_tok.text in KEYWORDS:
            raise ParseError(f"{name_tok.text!r} is reserved", name_tok.line, name_tok.col)
        if name_tok.text in bindings:
            raise ParseError(f"duplicate binding {name_tok.text!r}", name_tok.line, name_tok.col)
        parser.expect("=")
        term = parser.parse_term()
        bindings[name_tok.text] = term
    return bindings


# ---------------------------------------------------------------------------
# printing


def print_term(term) -> str:
    return _render(term, 0)


def _prec(term) -> int:
    if isinstance(term, Seq):
        return 0
    if isinstance(term, Tensor):
        return 1
    return 2


def _render(term, min_prec: int) -> str:
    p = _prec(term)
    if isinstance(term, Seq):
        body = f"{_render(term.left, 0)} ; {_render(term.right, 1)}"
    elif isinstance(term, Tensor):
        body = f"{_render(term.left, 1)} * {_render(term.right, 2)}"
    elif isinstance(term, Id):
        body = f"id[{','.join(term.word)}]"
    elif isinstance(term, Copy):
        body = f"copy[{','.join(term.word)}]"
    elif isinstance(term, Del):
        body = f"del[{','.join(term.word)}]"
    elif isinstance(term, Swap):
        body = f"swap[{','.join(term.left)};{','.join(term.right)}]"
    elif isinstance(term, Dom):
        body = f"dom({_render(term.term, 0)})"
    elif isinstance(term, Mass):
        body = f"mass({_render(term.term, 0)})"
    elif isinstance(term, Gen):
        body = term.name
    else:
        raise TypeError(f"not a term: {term!r}")
    return f"({body})" if p < min_prec else body


# ---------------------------------------------------------------------------
# typechecking


@dataclass(frozen=True)
class Signature:
    sorts: tuple
    generators: Mapping  # name -> (dom word, cod word) of sort names


def _check_word(word: tuple, sig: Signature, context: str):
    for sort in word:
        if sort not in sig.sorts:
            raise TypecheckError(f"unknown sort {sort!r} in {context}")


def typecheck_term(term, sig: Signature) -> tuple[tuple, tuple]:
    """Boundary words (sort names) of the term, or a TypecheckError."""
    if isinstance(term, Id):
        _check_word(term.word, sig, "id")
        return term.word, term.word
    if isinstance(term, Copy):
        _check_word(term.word, sig, "copy")
        return term.word, term.word + term.word
    if isinstance(term, Del):
        _check_word(term.word, sig, "del")
        return term.word, ()
    if isinstance(term, Swap):
        _check_word(term.left + term.right, sig, "swap")
        return term.left + term.right, term.right + term.left
    if isinstance(term, Gen):
        if term.name not in sig.generators:
            raise UnknownGeneratorError(f"unknown generator {term.name!r}")
        return sig.generators[term.name]
    if isinstance(term, Seq):
        ldom, lcod = typecheck_term(term.left, sig)
        rdom, rcod = typecheck_term(term.right, sig)
        if lcod != rdom:
            raise TypecheckError(
                f"composition boundary mismatch: left produces [{','.join(lcod)}], "
                f"right expects [{','.join(rdom)}]"
            )
        return ldom, rcod
    if isinstance(term, Tensor):
        ldom, lcod = typecheck_term(term.left, sig)
        rdom, rcod = typecheck_term(term.right, sig)
        return ldom + rdom, lcod + rcod
    if isinstance(term, (Dom, Mass)):
        dom, _cod = typecheck_term(term.term, sig)
        return (dom, dom) if isinstance(term, Dom) else (dom, ())
    raise TypeError(f"not a term: {term!r}")


# ---------------------------------------------------------------------------
# interpretations and evaluation


class Interpretation:
    """Semiring, sort assignment, and generator arrows for a signature."""

    def __init__(self, semiring: Semiring, sorts: Mapping, generators: Mapping, gen_sig: Mapping):
        self.semiring = semiring
        self.sorts = dict(sorts)
        self.generators = dict(generators)
        self.gen_sig = dict(gen_sig)
        for name, (dw, cw) in self.gen_sig.items():
            arrow = self.generators[name]
            if arrow.dom != self.word(dw) or arrow.cod != self.word(cw):
                raise InterpFormatError(
                    f"generator {name!r}: arrow boundary does not match declared sorts"
                )

    def word(self, sort_word: tuple) -> tuple:
        missing = [s for s in sort_word if s not in self.sorts]
        if missing:
            raise TypecheckError(f"unknown sort {missing[0]!r}")
        return tuple(self.sorts[s] for s in sort_word)

    def signature(self) -> Signature:
        return Signature(tuple(sorted(self.sorts)), dict(self.gen_sig))


def evaluate_term(term, interp: Interpretation) -> WRel:
    """Evaluate after typechecking; dom/mass expand to defining composites."""
    typecheck_term(term, interp.signature())
    return _eval(term, interp)


def _eval(term, interp: Interpretation) -> WRel:
    sr = interp.semiring
    if isinstance(term, Id):
        return wrel_id(sr, interp.word(term.word))
    if isinstance(term, Copy):
        return wrel_copy(sr, interp.word(term.word))
    if isinstance(term, Del):
        return wrel_del(sr, interp.word(term.word))
    if isinstance(term, Swap):
        return wrel_swap(sr, interp.word(term.left), interp.word(term.right))
    if isinstance(term, Gen):
        return interp.generators[term.name]
    if isinstance(term, Seq):
        return wrel_compose(sr, _eval(term.left, interp), _eval(term.right, interp))
    if isinstance(term, Tensor):
        return wrel_tensor(sr, _eval(term.left, interp), _eval(term.right, interp))
    if isinstance(term, Dom):
        return wrel_dom(sr, _eval(term.term, interp))
    if isinstance(term, Mass):
        return wrel_mass(sr, _eval(term.term, interp))
    raise TypeError(f"not a term: {term!r}")


def check_term_equality(t1, t2, interp: Interpretation, law: str = "term-eq") -> LawReport:
    """Evaluate both terms and compare entrywise; boundary mismatch raises."""
    f = evaluate_term(t1, interp)
    g = evaluate_term(t2, interp)
    if f.boundary() != g.boundary():
        raise TypecheckError(
            f"terms have different boundaries: "
            f"[{','.join(s.name for s in f.dom)}] -> [{','.join(s.name for s in f.cod)}] vs "
            f"[{','.join(s.name for s in g.dom)}] -> [{','.join(s.name for s in g.cod)}]"
        )
    sr = interp.semiring
    checks = 0
    seen = set()
    for arrow_rows in (f.rows, g.rows):
        for x, h in arrow_rows:
            for y, _v in h.entries:
                seen.add((x, y))
    for x, y in sorted(seen):
        checks += 1
        v1 = f.value(sr, x, y)
        v2 = g.value(sr, x, y)
        if v1 != v2:
            witness = {
                "row": word_labels(f.dom, x),
                "col": word_labels(f.cod, y),
                "left": sr.label(v1),
                "right": sr.label(v2),
            }
            return LawReport(law, COUNTEREXAMPLE, checks, witness)
    return LawReport(law, EXHAUSTIVE_PASS, checks)


# ---------------------------------------------------------------------------
# interpretation documents


def load_interpretation(doc: Mapping) -> Interpretation:
    if not isinstance(doc, Mapping):
        raise InterpFormatError("interpretation document must be an object")
    for key in ("semiring", "sorts", "generators"):
        if key not in doc:
            raise InterpFormatError(f"interpretation document missing field {key!r}")
    sr = load_semiring(doc["semiring"])
    sorts = {}
    for name, spec in doc["sorts"].items():
        if isinstance(spec, int):
            size, labels = spec, None
        elif isinstance(spec, Mapping) and "size" in spec:
            size = int(spec["size"])
            labels = tuple(spec["labels"]) if "labels" in spec else None
        else:
            raise InterpFormatError(f"bad sort spec for {name!r}: {spec!r}")
        try:
            sorts[name] = FinSet(name, size, labels)
        except WeightMapError as e:
            raise InterpFormatError(str(e)) from None
    generators = {}
    gen_sig = {}
    for name, body in doc["generators"].items():
        if not isinstance(body, Mapping) or "dom" not in body or "cod" not in body:
            raise InterpFormatError(f"generator {name!r} needs 'dom' and 'cod' sort words")
        dw = tuple(body["dom"])
        cw = tuple(body["cod"])
        for s in dw + cw:
            if s not in sorts:
                raise InterpFormatError(f"generator {name!r} uses undeclared sort {s!r}")
        arrow_doc = {
            "dom": [_sort_doc(sorts[s]) for s in dw],
            "cod": [_sort_doc(sorts[s]) for s in cw],
            "entries": body.get("entries", []),
        }
        try:
            generators[name] = wrel_from_doc(sr, arrow_doc)
        except (WRelFormatError, BoundaryError) as e:
            raise InterpFormatError(f"generator {name!r}: {e}") from None
        gen_sig[name] = (dw, cw)
    return Interpretation(sr, sorts, generators, gen_sig)


def _sort_doc(s: FinSet) -> dict:
    doc = {"name": s.name, "size": s.size}
    if s.labels is not None:
        doc["labels"] = list(s.labels)
    return doc


# ---------------------------------------------------------------------------
# structural axiom schemas


def gsm_axiom_pairs(a: str = "A", b: str = "B") -> list[tuple[str, str, str]]:
    """The seven structural axiom schemas as printable term pairs."""
    return [
        ("copy-coassoc", f"copy[{a}] ; (copy[{a}] * id[{a}])", f"copy[{a}] ; (id[{a}] * copy[{a}])"),
        ("copy-cocomm", f"copy[{a}] ; swap[{a};{a}]", f"copy[{a}]"),
        ("copy-counit-right", f"copy[{a}] ; (id[{a}] * del[{a}])", f"id[{a}]"),
        ("copy-counit-left", f"copy[{a}] ; (del[{a}] * id[{a}])", f"id[{a}]"),
        (
            "copy-tensor-mult",
            f"copy[{a},{b}]",
            f"(copy[{a}] * copy[{b}]) ; (id[{a}] * swap[{a};{b}] * id[{b}])",
        ),
        ("del-tensor-mult", f"del[{a},{b}]", f"del[{a}] * del[{b}]"),
        ("unit-object", "copy[] * del[]", "id[]"),
    ]
