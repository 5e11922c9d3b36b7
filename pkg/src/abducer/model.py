"""Plausibility models, their structural checks, and relation matrices.

A model is a non-empty list of worlds, each carrying the set of atoms true
there, plus a plausibility relation ``leq`` given as explicit pairs:
``(w, u)`` in ``leq`` reads "u is at least as plausible as w".  Reflexive
and transitive pairs must be listed; :func:`validate` reports omissions.

JSON layout::

    {"worlds": [{"id": "w1", "atoms": ["p"]}, ...],
     "leq": [["w1", "w1"], ["w1", "w2"], ...],
     "point": "w1"}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import NamedTuple

import numpy as np

from .errors import InvalidModel, UnknownWorld


@dataclass(frozen=True)
class World:
    id: str
    atoms: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "atoms", frozenset(self.atoms))


@dataclass(frozen=True)
class PlausibilityModel:
    worlds: tuple
    leq: frozenset
    point: str | None = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "leq", frozenset(tuple(p) for p in self.leq))
        object.__setattr__(self, "_index", {w.id: w for w in self.worlds})

    @classmethod
    def build(cls, valuation, leq, point=None):
        """Shorthand: ``valuation`` maps world id to an iterable of atoms."""
        worlds = [World(w, frozenset(a)) for w, a in valuation.items()]
        return cls(tuple(worlds), frozenset(leq), point)

    @property
    def ids(self):
        return tuple(w.id for w in self.worlds)

    def world(self, wid):
        try:
            return self._index[wid]
        except KeyError:
            raise UnknownWorld(f"unknown world {wid!r}") from None

    def valuation(self, wid):
        return self.world(wid).atoms

    def __contains__(self, wid):
        return wid in self._index

    def __len__(self):
        return len(self.worlds)

    @cached_property
    def canonical_order(self):
        """World ids sorted lexicographically; the order used for matrices."""
        return tuple(sorted(self.ids))

    @cached_property
    def more_plausible(self):
        """``w -> {u | w <= u}``."""
        succ = {w: set() for w in self.ids}
        for w, u in self.leq:
            succ[w].add(u)
        return {w: frozenset(s) for w, s in succ.items()}

    @cached_property
    def indistinguishable(self):
        """``w -> {u | w ~ u}`` where ``~`` is ``leq`` united with its converse."""
        succ = {w: set() for w in self.ids}
        for w, u in self.leq:
            succ[w].add(u)
            succ[u].add(w)
        return {w: frozenset(s) for w, s in succ.items()}

    def replace(self, **changes):
        kw = {"worlds": self.worlds, "leq": self.leq, "point": self.point}
        kw.update(changes)
        return PlausibilityModel(**kw)


class Violation(NamedTuple):
    property: str
    witness: tuple

    def __str__(self):
        return f"{self.property} violated at {self.witness}"


def validate(m):
    """Return a list of violated structural requirements (empty when valid).

    Checks non-emptiness, unique ids, that ``leq`` and ``point`` only mention
    known worlds, reflexivity, transitivity and, once those hold, local
    connectedness.  Converse well-foundedness needs no check: a finite
    preorder cannot contain an infinite strictly ascending chain.
    """
    out = []
    if not m.worlds:
        return [Violation("nonempty", ())]
    seen = set()
    for w in m.worlds:
        if not w.id:
            out.append(Violation("nonempty-id", (w.id,)))
        if w.id in seen:
            out.append(Violation("unique-ids", (w.id,)))
        seen.add(w.id)
    for pair in sorted(m.leq):
        for wid in pair:
            if wid not in seen:
                out.append(Violation("known-worlds", pair))
                break
    if m.point is not None and m.point not in seen:
        out.append(Violation("point-exists", (m.point,)))
    if out:
        return out

    ids = m.ids
    leq = m.leq
    for w in ids:
        if (w, w) not in leq:
            out.append(Violation("reflexivity", (w,)))
    for w, u, v in product(ids, repeat=3):
        if (w, u) in leq and (u, v) in leq and (w, v) not in leq:
            out.append(Violation("transitivity", (w, v)))
    if out:
        # local connectedness is only meaningful once leq is a preorder
        return _dedupe(out)
    comparable = m.indistinguishable
    for w, u, v in product(ids, repeat=3):
        if w < u and v in comparable[w] and v in comparable[u] and u not in comparable[w]:
            out.append(Violation("local-connectedness", (w, u, v)))
    return _dedupe(out)


def _dedupe(violations):
    seen = set()
    out = []
    for v in violations:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def check(m):
    """Raise :class:`InvalidModel` unless ``m`` is a valid plausibility model."""
    problems = validate(m)
    if problems:
        raise InvalidModel(problems)
    return m


def epistemic_relation(m):
    """Union of ``leq`` and its converse."""
    return frozenset(m.leq) | {(u, w) for w, u in m.leq}


def equal_plausibility(m):
    """Intersection of ``leq`` and its converse."""
    return frozenset((w, u) for w, u in m.leq if (u, w) in m.leq)


def strictly_less(m):
    return frozenset((w, u) for w, u in m.leq if (u, w) not in m.leq)


def maximal_worlds(m, wid):
    """Most plausible worlds among those indistinguishable from ``wid``."""
    cls = m.indistinguishable[m.world(wid).id]
    up = m.more_plausible
    return frozenset(u for u in cls if all((v, u) in m.leq for v in up[u]))


# ------------------------------------------------------------------ matrices


@dataclass(frozen=True, eq=False)
class RelationMatrix:
    order: tuple
    bits: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, RelationMatrix):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.bits, other.bits)

    __hash__ = None

    @property
    def size(self):
        return len(self.order)

    def rows(self):
        return ["".join(str(int(b)) for b in row) for row in self.bits]


def encode_relation(rel, order):
    """Binary matrix with ``bits[i, j] == 1`` iff ``(order[i], order[j])`` is in ``rel``."""
    order = tuple(order)
    pos = {w: i for i, w in enumerate(order)}
    bits = np.zeros((len(order), len(order)), dtype=np.uint8)
    for w, u in rel:
        if w not in pos or u not in pos:
            missing = w if w not in pos else u
            raise UnknownWorld(f"world {missing!r} is not in the matrix order")
        bits[pos[w], pos[u]] = 1
    bits.setflags(write=False)
    return RelationMatrix(order, bits)


def decode_relation(mx):
    i, j = np.nonzero(mx.bits)
    return frozenset((mx.order[a], mx.order[b]) for a, b in zip(i.tolist(), j.tolist()))


def matrix_bits(mx):
    """Row-major ``'0'``/``'1'`` string of length n squared."""
    return "".join(str(int(b)) for b in mx.bits.ravel())


def plausibility_matrix(m, order=None):
    return encode_relation(m.leq, m.canonical_order if order is None else order)


def parse_matrix(text):
    """Read a square 0/1 matrix written one row per line; order is 0..n-1."""
    rows = [ln.split() if " " in ln.strip() else list(ln.strip()) for ln in text.splitlines()]
    rows = [r for r in rows if r]
    n = len(rows)
    if any(len(r) != n for r in rows) or any(c not in "01" for r in rows for c in r):
        raise ValueError("matrix must be square and contain only 0 and 1")
    bits = np.array([[int(c) for c in r] for r in rows], dtype=np.uint8).reshape(n, n)
    bits.setflags(write=False)
    return RelationMatrix(tuple(range(n)), bits)


# ----------------------------------------------------------------------- I/O


def model_to_dict(m):
    d = {
        "worlds": [{"id": w.id, "atoms": sorted(w.atoms)} for w in m.worlds],
        "leq": [list(p) for p in sorted(m.leq)],
    }
    if m.point is not None:
        d["point"] = m.point
    return d


def model_from_dict(d, force=False):
    """Build a model from its JSON dictionary; validates unless ``force``."""
    try:
        worlds = tuple(World(str(w["id"]), frozenset(w.get("atoms", ()))) for w in d["worlds"])
        leq = frozenset((str(a), str(b)) for a, b in d.get("leq", ()))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidModel([Violation("schema", (str(exc),))]) from None
    point = d.get("point")
    m = PlausibilityModel(worlds, leq, None if point is None else str(point))
    if not force:
        check(m)
    return m


def loads(text, force=False):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidModel([Violation("json", (str(exc),))]) from None
    return model_from_dict(d, force=force)


def dumps(m, indent=None):
    return json.dumps(model_to_dict(m), indent=indent)


def load(path, force=False):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), force=force)


def dump(m, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(m, indent=2))
        fh.write("\n")
