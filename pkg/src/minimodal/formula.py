"""Formula ASTs, parser, printer and structural measures.

Two languages share one set of node classes: the monomodal language
(Box/Dia) and the bimodal target language (Box1/Dia1/Box2/Dia2) with the
reserved atom ``f``.  Derived connectives are expanded at construction
time and never stored: ``top`` is ``bot -> bot``, ``~A`` is ``A -> bot``
and ``A <-> B`` is ``(A -> B) & (B -> A)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

RESERVED_ATOM = "f"


class ParseError(ValueError):
    """Syntax error with a position into the source text."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Node:
    __slots__ = ()

    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class Atom(_Node):
    name: str


@dataclass(frozen=True)
class Bottom(_Node):
    pass


@dataclass(frozen=True)
class And(_Node):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or(_Node):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Imp(_Node):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Box(_Node):
    body: "Formula"


@dataclass(frozen=True)
class Dia(_Node):
    body: "Formula"


@dataclass(frozen=True)
class Box1(_Node):
    body: "Formula"


@dataclass(frozen=True)
class Dia1(_Node):
    body: "Formula"


@dataclass(frozen=True)
class Box2(_Node):
    body: "Formula"


@dataclass(frozen=True)
class Dia2(_Node):
    body: "Formula"


Formula = Union[Atom, Bottom, And, Or, Imp, Box, Dia]
BiFormula = Union[Atom, Bottom, And, Or, Imp, Box1, Dia1, Box2, Dia2]

BOT = Bottom()
TOP = Imp(BOT, BOT)

_BINARY = (And, Or, Imp)
_MONO_MODAL = (Box, Dia)
_BI_MODAL = (Box1, Dia1, Box2, Dia2)
_UNARY = _MONO_MODAL + _BI_MODAL


def neg(f: Formula) -> Formula:
    return Imp(f, BOT)


def iff(a: Formula, b: Formula) -> Formula:
    return And(Imp(a, b), Imp(b, a))


def is_monomodal(f) -> bool:
    """True when the tree uses only Box/Dia and avoids the reserved atom."""
    if isinstance(f, Atom):
        return f.name != RESERVED_ATOM
    if isinstance(f, Bottom):
        return True
    if isinstance(f, _BINARY):
        return is_monomodal(f.left) and is_monomodal(f.right)
    if isinstance(f, _MONO_MODAL):
        return is_monomodal(f.body)
    return False


def is_bimodal(f) -> bool:
    if isinstance(f, (Atom, Bottom)):
        return True
    if isinstance(f, _BINARY):
        return is_bimodal(f.left) and is_bimodal(f.right)
    if isinstance(f, _BI_MODAL):
        return is_bimodal(f.body)
    return False


# ---------------------------------------------------------------------------
# Lexer / parser

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<iff><->|↔)
  | (?P<imp>->|→)
  | (?P<and>&|∧)
  | (?P<or>\|\|?|∨)
  | (?P<not>~|¬)
  | (?P<lp>\()
  | (?P<rp>\))
  | (?P<box1>□_?1)
  | (?P<dia1>◇_?1)
  | (?P<box2>□_?2)
  | (?P<dia2>◇_?2)
  | (?P<boxu>□)
  | (?P<diau>◇)
  | (?P<bot>⊥)
  | (?P<top>⊤)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)

_KEYWORDS = {
    "bot": "bot",
    "top": "top",
    "box": "box",
    "dia": "dia",
    "box1": "box1",
    "dia1": "dia1",
    "box2": "box2",
    "dia2": "dia2",
}

_UNICODE_ALIAS = {
    "boxu": "box",
    "diau": "dia",
    "box1": "box1",
    "dia1": "dia1",
    "box2": "box2",
    "dia2": "dia2",
    "bot": "bot",
    "top": "top",
}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            if kind == "ident":
                word = m.group()
                kind = _KEYWORDS.get(word, "ident")
                tokens.append((kind, word, pos))
            elif kind in _UNICODE_ALIAS:
                tokens.append((_UNICODE_ALIAS[kind], m.group(), pos))
            else:
                tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


_MODALITY_NODE = {
    "box": Box,
    "dia": Dia,
    "box1": Box1,
    "dia1": Dia1,
    "box2": Box2,
    "dia2": Dia2,
}


class _Parser:
    def __init__(self, text: str, bimodal: bool):
        self.tokens = _tokenize(text)
        self.i = 0
        self.bimodal = bimodal

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def formula(self):
        left = self.implication()
        while self.peek()[0] == "iff":
            self.take()
            right = self.implication()
            left = iff(left, right)
        return left

    def implication(self):
        left = self.disjunction()
        if self.peek()[0] == "imp":
            self.take()
            return Imp(left, self.implication())
        return left

    def disjunction(self):
        left = self.conjunction()
        while self.peek()[0] == "or":
            self.take()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self):
        left = self.unary()
        while self.peek()[0] == "and":
            self.take()
            left = And(left, self.unary())
        return left

    def unary(self):
        kind, value, pos = self.peek()
        if kind == "not":
            self.take()
            return neg(self.unary())
        if kind in _MODALITY_NODE:
            self.take()
            indexed = kind in ("box1", "dia1", "box2", "dia2")
            if indexed and not self.bimodal:
                raise ParseError(f"{value!r} is a bimodal operator", pos)
            if not indexed and self.bimodal:
                raise ParseError(
                    f"{value!r} is ambiguous in the bimodal language; use an indexed modality", pos
                )
            return _MODALITY_NODE[kind](self.unary())
        return self.atomish()

    def atomish(self):
        kind, value, pos = self.take()
        if kind == "bot":
            return BOT
        if kind == "top":
            return TOP
        if kind == "ident":
            if value == RESERVED_ATOM and not self.bimodal:
                raise ParseError(f"atom {RESERVED_ATOM!r} is reserved", pos)
            return Atom(value)
        if kind == "lp":
            inner = self.formula()
            self.expect("rp")
            return inner
        raise ParseError(f"unexpected token {value!r}", pos)


def parse(text: str, *, bimodal: bool = False):
    """Parse concrete syntax into a Formula (or BiFormula with bimodal=True)."""
    p = _Parser(text, bimodal)
    result = p.formula()
    p.expect("eof")
    return result


# ---------------------------------------------------------------------------
# Printer

_PREC_IMP, _PREC_OR, _PREC_AND, _PREC_UNARY, _PREC_ATOM = 1, 2, 3, 4, 5

_MODALITY_NAME = {
    Box: "box",
    Dia: "dia",
    Box1: "box1",
    Dia1: "dia1",
    Box2: "box2",
    Dia2: "dia2",
}


def pretty(f, *, sugar: bool = True) -> str:
    """Render with minimal parenthesization; parse(pretty(f)) == f."""

    def go(g, ctx: int) -> str:
        if isinstance(g, Atom):
            return g.name
        if isinstance(g, Bottom):
            return "bot"
        if isinstance(g, Imp):
            if sugar and g == TOP:
                return "top"
            if sugar and g.right == BOT:
                return "~" + go(g.left, _PREC_UNARY)
            s = go(g.left, _PREC_IMP + 1) + " -> " + go(g.right, _PREC_IMP)
            return "(" + s + ")" if ctx > _PREC_IMP else s
        if isinstance(g, Or):
            s = go(g.left, _PREC_OR) + " | " + go(g.right, _PREC_OR + 1)
            return "(" + s + ")" if ctx > _PREC_OR else s
        if isinstance(g, And):
            s = go(g.left, _PREC_AND) + " & " + go(g.right, _PREC_AND + 1)
            return "(" + s + ")" if ctx > _PREC_AND else s
        s = _MODALITY_NAME[type(g)] + " " + go(g.body, _PREC_UNARY)
        return "(" + s + ")" if ctx > _PREC_UNARY else s

    return go(f, 0)


# ---------------------------------------------------------------------------
# Structural measures

def complexity(f) -> int:
    """Connective weight: atoms and bot weigh 1, every other node adds 1."""
    if isinstance(f, (Atom, Bottom)):
        return 1
    if isinstance(f, _BINARY):
        return complexity(f.left) + complexity(f.right) + 1
    return complexity(f.body) + 1


def size(f) -> int:
    """Number of AST nodes."""
    if isinstance(f, (Atom, Bottom)):
        return 1
    if isinstance(f, _BINARY):
        return size(f.left) + size(f.right) + 1
    return size(f.body) + 1


def modal_depth(f) -> int:
    if isinstance(f, (Atom, Bottom)):
        return 0
    if isinstance(f, _BINARY):
        return max(modal_depth(f.left), modal_depth(f.right))
    return modal_depth(f.body) + 1


def subformulas(f) -> frozenset:
    """Subformula closure of f, including f itself."""
    acc = set()

    def go(g):
        if g in acc:
            return
        acc.add(g)
        if isinstance(g, _BINARY):
            go(g.left)
            go(g.right)
        elif isinstance(g, _UNARY):
            go(g.body)

    go(f)
    return frozenset(acc)


def atoms_of(f) -> frozenset:
    return frozenset(g.name for g in subformulas(f) if isinstance(g, Atom))


_SKEY_TAG = {
    Bottom: "F",
    And: "&",
    Or: "|",
    Imp: ">",
    Box: "B",
    Dia: "D",
    Box1: "b",
    Dia1: "d",
    Box2: "c",
    Dia2: "e",
}


def skey(f) -> str:
    """Canonical prefix encoding; lexicographic order on it is the fixed total
    order used for multiset normalization and search tie-breaks."""
    parts: list[str] = []

    def go(g):
        if isinstance(g, Atom):
            parts.append("a" + g.name + ";")
        elif isinstance(g, _BINARY):
            parts.append(_SKEY_TAG[type(g)])
            go(g.left)
            go(g.right)
        elif isinstance(g, Bottom):
            parts.append("F")
        else:
            parts.append(_SKEY_TAG[type(g)])
            go(g.body)

    go(f)
    return "".join(parts)


def sort_formulas(fs) -> list:
    return sorted(fs, key=skey)


def iter_subtrees(f) -> Iterator:
    yield f
    if isinstance(f, _BINARY):
        yield from iter_subtrees(f.left)
        yield from iter_subtrees(f.right)
    elif isinstance(f, _UNARY):
        yield from iter_subtrees(f.body)
