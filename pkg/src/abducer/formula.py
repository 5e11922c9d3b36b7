"""Formulas of the single-agent plausibility language.

Five primitive node kinds carry the semantics: ``Atom``, ``Not``, ``Or``,
``DiaPl`` (there is an at-least-as-plausible world where ...) and ``DiaEp``
(there is an epistemically indistinguishable world where ...).  Everything
else (``And``, ``Implies``, ``Iff``, ``BoxPl``, ``BoxEp``, ``Know``,
``Believe``) is sugar that :func:`desugar` rewrites into primitives.

Concrete syntax, loosest binding first::

    a <-> b        left associative
    a -> b         right associative
    a | b
    a & b
    !a  <pl> a  [pl] a  <ep> a  [ep] a  K a  B a

Atoms match ``[a-z][a-z0-9_]*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import FormulaSyntaxError, UnknownOperator

ATOM_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


class Formula:
    """Base class; gives every node operator shorthands for building sugar."""

    __slots__ = ()

    def __invert__(self):
        return Not(self)

    def __or__(self, other):
        return Or(self, other)

    def __and__(self, other):
        return And(self, other)

    def __rshift__(self, other):
        return Implies(self, other)

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not ATOM_RE.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")

    def __repr__(self):
        return f"Atom({self.name!r})"


@dataclass(frozen=True, slots=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class DiaPl(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class DiaEp(Formula):
    operand: Formula


# sugar


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class BoxPl(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class BoxEp(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class Know(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class Believe(Formula):
    operand: Formula


K = Know
B = Believe

PRIMITIVE_TYPES = (Atom, Not, Or, DiaPl, DiaEp)
MODAL_TYPES = (DiaPl, DiaEp, BoxPl, BoxEp, Know, Believe)
_UNARY = (Not, DiaPl, DiaEp, BoxPl, BoxEp, Know, Believe)
_BINARY = (Or, And, Implies, Iff)


def atom(name):
    return Atom(name)


def atoms_of(names):
    """``atoms_of("p q r")`` -> ``(Atom('p'), Atom('q'), Atom('r'))``."""
    return tuple(Atom(n) for n in names.split())


def conjoin(formulas):
    """Left-nested conjunction of a non-empty sequence."""
    formulas = list(formulas)
    if not formulas:
        raise ValueError("cannot conjoin an empty sequence")
    out = formulas[0]
    for f in formulas[1:]:
        out = And(out, f)
    return out


def desugar(f):
    """Rewrite every derived connective into the five primitive kinds."""
    if isinstance(f, Atom):
        return f
    if isinstance(f, Not):
        return Not(desugar(f.operand))
    if isinstance(f, Or):
        return Or(desugar(f.left), desugar(f.right))
    if isinstance(f, DiaPl):
        return DiaPl(desugar(f.operand))
    if isinstance(f, DiaEp):
        return DiaEp(desugar(f.operand))
    if isinstance(f, And):
        return Not(Or(Not(desugar(f.left)), Not(desugar(f.right))))
    if isinstance(f, Implies):
        return Or(Not(desugar(f.left)), desugar(f.right))
    if isinstance(f, Iff):
        return desugar(And(Implies(f.left, f.right), Implies(f.right, f.left)))
    if isinstance(f, BoxPl):
        return Not(DiaPl(Not(desugar(f.operand))))
    if isinstance(f, (BoxEp, Know)):
        return Not(DiaEp(Not(desugar(f.operand))))
    if isinstance(f, Believe):
        return DiaPl(desugar(BoxPl(f.operand)))
    raise TypeError(f"not a formula: {f!r}")


def is_primitive(f):
    """True iff ``f`` is built from primitive node kinds only."""
    return all(isinstance(g, PRIMITIVE_TYPES) for g in subformulas(f))


def subformulas(f):
    """Yield every node of ``f`` (pre-order, with repetition)."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, _UNARY):
            stack.append(g.operand)
        elif isinstance(g, _BINARY):
            stack.append(g.right)
            stack.append(g.left)


def atoms(f):
    return {g.name for g in subformulas(f) if isinstance(g, Atom)}


def is_propositional(f):
    return not any(isinstance(g, MODAL_TYPES) for g in subformulas(f))


def depth(f):
    if isinstance(f, Atom):
        return 0
    if isinstance(f, _UNARY):
        return 1 + depth(f.operand)
    return 1 + max(depth(f.left), depth(f.right))


# ---------------------------------------------------------------- printing

_IFF, _IMP, _OR, _AND, _UNARY_LEVEL, _ATOM_LEVEL = range(1, 7)
_BIN_LEVEL = {"<->": _IFF, "->": _IMP, "|": _OR, "&": _AND}


def _view(f):
    """Classify a node for printing, recognising desugared sugar patterns.

    Returns ``("atom", name)``, ``(op, operand)`` for prefix operators or
    ``(op, left, right)`` for infix ones.
    """
    if isinstance(f, Atom):
        return ("atom", f.name)
    if isinstance(f, And):
        return ("&", f.left, f.right)
    if isinstance(f, Implies):
        return ("->", f.left, f.right)
    if isinstance(f, Iff):
        return ("<->", f.left, f.right)
    if isinstance(f, BoxPl):
        return ("[pl]", f.operand)
    if isinstance(f, BoxEp):
        return ("[ep]", f.operand)
    if isinstance(f, Know):
        return ("K", f.operand)
    if isinstance(f, Believe):
        return ("B", f.operand)
    if isinstance(f, DiaEp):
        return ("<ep>", f.operand)
    if isinstance(f, DiaPl):
        x = f.operand
        if isinstance(x, Not) and isinstance(x.operand, DiaPl) and isinstance(x.operand.operand, Not):
            return ("B", x.operand.operand.operand)
        return ("<pl>", x)
    if isinstance(f, Or):
        # prefer "a & b | c" over "(a -> !b) -> c"
        if isinstance(f.left, Not) and _view(f.left)[0] == "!":
            return ("->", f.left.operand, f.right)
        return ("|", f.left, f.right)
    if isinstance(f, Not):
        x = f.operand
        if isinstance(x, DiaEp) and isinstance(x.operand, Not):
            return ("K", x.operand.operand)
        if isinstance(x, DiaPl) and _view(x)[0] == "B":
            return ("!", x)
        if isinstance(x, DiaPl) and isinstance(x.operand, Not):
            return ("[pl]", x.operand.operand)
        if isinstance(x, Or) and isinstance(x.left, Not) and isinstance(x.right, Not):
            l, r = x.left.operand, x.right.operand
            if (
                isinstance(l, Or) and isinstance(l.left, Not)
                and isinstance(r, Or) and isinstance(r.left, Not)
                and l.left.operand == r.right and l.right == r.left.operand
            ):
                return ("<->", l.left.operand, l.right)
            return ("&", l, r)
        return ("!", x)
    raise TypeError(f"not a formula: {f!r}")


def _fmt(f, min_level):
    v = _view(f)
    if v[0] == "atom":
        return v[1]
    if len(v) == 2:
        op, x = v
        inner = _fmt(x, _UNARY_LEVEL)
        text = f"!{inner}" if op == "!" else f"{op} {inner}"
        level = _UNARY_LEVEL
    else:
        op, l, r = v
        level = _BIN_LEVEL[op]
        if op == "->":
            text = f"{_fmt(l, level + 1)} -> {_fmt(r, level)}"
        else:
            text = f"{_fmt(l, level)} {op} {_fmt(r, level + 1)}"
    return f"({text})" if level < min_level else text


def to_text(f):
    """Canonical concrete syntax; ``parse(to_text(f)) == desugar(f)``."""
    return _fmt(f, _IFF)


# ----------------------------------------------------------------- parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<op><->|->|<pl>|\[pl\]|<ep>|\[ep\]|[|&!()KB])|(?P<atom>[a-z][a-z0-9_]*))"
)
_PREFIX = {
    "!": Not, "<pl>": DiaPl, "[pl]": BoxPl, "<ep>": DiaEp, "[ep]": BoxEp,
    "K": Know, "B": Believe,
}
_INFIX = {"<->": Iff, "->": Implies, "|": Or, "&": And}


def tokenize(text):
    """List of ``(kind, value, position)``; kind is ``"op"`` or ``"atom"``."""
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            start = pos
            while pos < n and not text[pos].isspace():
                pos += 1
            raise UnknownOperator(f"unknown operator {text[start:pos]!r}", text, start)
        kind = "op" if m.group("op") else "atom"
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][1] if self.i < len(self.tokens) else None

    def pos(self):
        return self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)

    def error(self, msg):
        return FormulaSyntaxError(msg, self.text, self.pos())

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise FormulaSyntaxError("empty formula", self.text, 0)
        f = self.iff()
        if self.i < len(self.tokens):
            tok = self.peek()
            if tok == ")":
                raise self.error("unbalanced ')'")
            raise self.error(f"unexpected {tok!r}")
        return f

    def iff(self):
        f = self.imp()
        while self.peek() == "<->":
            self.take()
            f = Iff(f, self.imp())
        return f

    def imp(self):
        f = self.disj()
        if self.peek() == "->":
            self.take()
            return Implies(f, self.imp())
        return f

    def disj(self):
        f = self.conj()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self):
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self):
        tok = self.peek()
        if tok in _PREFIX:
            self.take()
            return _PREFIX[tok](self.unary())
        if tok == "(":
            start = self.pos()
            self.take()
            f = self.iff()
            if self.peek() != ")":
                if self.peek() is None:
                    raise FormulaSyntaxError("unbalanced '('", self.text, start)
                raise self.error(f"expected ')' but found {self.peek()!r}")
            self.take()
            return f
        if tok is None:
            raise self.error("unexpected end of formula")
        kind, value, _ = self.tokens[self.i]
        if kind == "atom":
            self.take()
            return Atom(value)
        raise self.error(f"unexpected {value!r}")


def parse(text, keep_sugar=False):
    """Parse concrete syntax into a formula.

    By default the result is desugared into primitive nodes.  With
    ``keep_sugar=True`` derived connectives are returned as written.
    """
    if not isinstance(text, str):
        raise TypeError("parse expects a string")
    try:
        f = _Parser(text).parse()
    except RecursionError:
        raise FormulaSyntaxError("formula nested too deeply", text, None) from None
    return f if keep_sugar else desugar(f)


def as_formula(f):
    """Accept either a formula or its concrete syntax."""
    if isinstance(f, Formula):
        return f
    if isinstance(f, str):
        return parse(f)
    raise TypeError(f"expected Formula or str, got {type(f).__name__}")
