"""Classical propositional abduction over truth tables.

Consequence is decided by enumerating all valuations (vectorised with
numpy), which caps theories at :data:`MAX_ATOMS` distinct atoms.
Theories can be normalised into a canonical clausal form so that logically
equivalent inputs serialise to the same bit string.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

import numpy as np

from .errors import NotPropositional, TooManyAtoms, UnknownAtom
from .formula import Atom, Formula, Not, Or, as_formula, atoms, desugar, is_propositional, to_text

MAX_ATOMS = 16


class ProblemKind(str, enum.Enum):
    NOVEL = "novel"
    ANOMALOUS = "anomalous"
    NOT_A_PROBLEM = "not_a_problem"

    def __str__(self):
        return self.value


class SolutionFlags(NamedTuple):
    plain: bool
    consistent: bool
    explanatory: bool


def _prepare(formulas):
    out = []
    for f in formulas:
        f = as_formula(f)
        if not is_propositional(f):
            raise NotPropositional(f"{to_text(f)} contains a modal operator")
        out.append(desugar(f))
    return out


def _atom_order(formulas):
    names = sorted(set().union(*(atoms(f) for f in formulas))) if formulas else []
    if len(names) > MAX_ATOMS:
        raise TooManyAtoms(f"{len(names)} atoms exceed the truth-table bound of {MAX_ATOMS}")
    return names


def valuations(order):
    """Boolean array of shape ``(2**n, n)``; row ``r`` is one valuation."""
    n = len(order)
    rows = np.arange(2 ** n, dtype=np.int64)[:, None]
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)[None, :]
    return ((rows >> shifts) & 1).astype(bool)


def _table(f, cols, vals):
    if isinstance(f, Atom):
        return vals[:, cols[f.name]]
    if isinstance(f, Not):
        return ~_table(f.operand, cols, vals)
    if isinstance(f, Or):
        return _table(f.left, cols, vals) | _table(f.right, cols, vals)
    raise NotPropositional(f"unexpected node {f!r}")


def truth_table(f, order):
    """Truth value of ``f`` under every valuation of ``order`` (see :func:`valuations`)."""
    (f,) = _prepare([f])
    missing = atoms(f) - set(order)
    if missing:
        raise UnknownAtom(f"atoms {sorted(missing)} not in order")
    cols = {a: i for i, a in enumerate(order)}
    return _table(f, cols, valuations(order))


def _tables(formulas):
    formulas = _prepare(formulas)
    order = _atom_order(formulas)
    cols = {a: i for i, a in enumerate(order)}
    vals = valuations(order)
    return [_table(f, cols, vals) for f in formulas], vals.shape[0]


def entails(theta, phi):
    """True iff every valuation satisfying all of ``theta`` satisfies ``phi``."""
    theta = list(theta)
    tabs, rows = _tables(theta + [phi])
    ok = np.ones(rows, dtype=bool)
    for t in tabs[:-1]:
        ok &= t
    return not bool(np.any(ok & ~tabs[-1]))


def satisfiable(theta):
    theta = list(theta)
    if not theta:
        return True
    tabs, rows = _tables(theta)
    ok = np.ones(rows, dtype=bool)
    for t in tabs:
        ok &= t
    return bool(ok.any())


def classify_problem(theta, phi):
    theta = list(theta)
    phi = as_formula(phi)
    if entails(theta, phi):
        return ProblemKind.NOT_A_PROBLEM
    if entails(theta, Not(phi)):
        return ProblemKind.ANOMALOUS
    return ProblemKind.NOVEL


def check_solution(theta, phi, alpha):
    """Plain, consistent and explanatory status of ``alpha`` for ``(theta, phi)``."""
    theta = list(theta)
    extended = theta + [as_formula(alpha)]
    return SolutionFlags(
        plain=entails(extended, phi),
        consistent=satisfiable(extended),
        explanatory=not entails([alpha], phi),
    )


# ------------------------------------------------------------ clausal form


class Literal(NamedTuple):
    atom: str
    positive: bool

    def negate(self):
        return Literal(self.atom, not self.positive)

    def __str__(self):
        return self.atom if self.positive else f"!{self.atom}"


def _literal_key(lit):
    return (lit.atom, not lit.positive)


def _clause_key(clause):
    return (len(clause), [_literal_key(l) for l in clause])


@dataclass(frozen=True)
class ClausalTheory:
    """Conjunction of clauses, each a disjunction of literals, in canonical order."""

    clauses: tuple

    def atoms(self):
        return sorted({lit.atom for c in self.clauses for lit in c})

    def __str__(self):
        inner = ", ".join("{" + ", ".join(str(l) for l in c) + "}" for c in self.clauses)
        return "{" + inner + "}"

    def as_sets(self):
        return {frozenset((l.atom, l.positive) for l in c) for c in self.clauses}


def _nnf(f, positive=True):
    """Negation normal form as nested ``("and"|"or", [..])`` or a Literal."""
    if isinstance(f, Atom):
        return Literal(f.name, positive)
    if isinstance(f, Not):
        return _nnf(f.operand, not positive)
    if isinstance(f, Or):
        op = "or" if positive else "and"
        return (op, [_nnf(f.left, positive), _nnf(f.right, positive)])
    raise NotPropositional(f"unexpected node {f!r}")


def _cnf(node):
    if isinstance(node, Literal):
        return [frozenset([node])]
    op, parts = node
    if op == "and":
        return [c for p in parts for c in _cnf(p)]
    out = [frozenset()]
    for p in parts:
        out = [a | b for a, b in product(out, _cnf(p))]
    return out


def _tautological(clause):
    return any(lit.negate() in clause for lit in clause)


def to_minimal_clausal(theta):
    """Canonical clausal form: distribute into CNF, drop tautological and
    duplicate clauses, drop clauses subsumed by a strict subset, sort.

    Not guaranteed to be globally minimal in size (no resolution step).
    """
    if isinstance(theta, (str, Formula)):
        theta = [theta]
    formulas = _prepare(theta)
    _atom_order(formulas)
    clauses = set()
    for f in formulas:
        for c in _cnf(_nnf(f)):
            if not _tautological(c):
                clauses.add(c)
    reduced = [c for c in clauses if not any(d < c for d in clauses)]
    ordered = sorted(
        (tuple(sorted(c, key=_literal_key)) for c in reduced), key=_clause_key
    )
    return ClausalTheory(tuple(ordered))


def clausal_truth_table(t, order):
    cols = {a: i for i, a in enumerate(order)}
    vals = valuations(order)
    out = np.ones(vals.shape[0], dtype=bool)
    for clause in t.clauses:
        sat = np.zeros(vals.shape[0], dtype=bool)
        for lit in clause:
            col = vals[:, cols[lit.atom]]
            sat |= col if lit.positive else ~col
        out &= sat
    return out


_CODE = {None: "00", True: "01", False: "10"}


def clausal_bits(t, atom_order=None):
    """Two bits per atom per clause: absent ``00``, positive ``01``, negative ``10``.

    Clauses follow the canonical order of ``t``; atoms follow ``atom_order``
    (default: sorted atoms of ``t``).
    """
    order = list(t.atoms() if atom_order is None else atom_order)
    known = set(order)
    out = []
    for clause in t.clauses:
        signs = {}
        for lit in clause:
            if lit.atom not in known:
                raise UnknownAtom(f"atom {lit.atom!r} missing from the atom order")
            signs[lit.atom] = lit.positive
        out.extend(_CODE[signs.get(a)] for a in order)
    return "".join(out)
