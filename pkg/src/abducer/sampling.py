"""Random valid plausibility models and random formulas.

Every finite plausibility model partitions its worlds into
indistinguishability classes, each totally preordered.  Sampling follows
that shape: split the worlds into classes, give every world a random
plausibility rank inside its class, and set ``w <= u`` iff both sit in one
class and ``rank(w) <= rank(u)``.
"""

from __future__ import annotations

import numpy as np

from .formula import Atom, DiaEp, DiaPl, Not, Or
from .model import PlausibilityModel, World


def random_model(rng, n_worlds, atom_names=("p", "q", "r"), max_classes=3, max_ranks=None,
                 point=True):
    rng = np.random.default_rng(rng)
    n_classes = int(rng.integers(1, max(1, min(max_classes, n_worlds)) + 1))
    max_ranks = n_worlds if max_ranks is None else max_ranks
    classes = rng.integers(0, n_classes, size=n_worlds)
    ranks = rng.integers(0, max_ranks, size=n_worlds)
    width = len(str(n_worlds))
    ids = [f"w{i:0{width}d}" for i in range(n_worlds)]
    worlds = tuple(
        World(wid, frozenset(a for a in atom_names if rng.random() < 0.5)) for wid in ids
    )
    leq = frozenset(
        (ids[i], ids[j])
        for i in range(n_worlds)
        for j in range(n_worlds)
        if classes[i] == classes[j] and ranks[i] <= ranks[j]
    )
    pt = ids[int(rng.integers(n_worlds))] if point else None
    return PlausibilityModel(worlds, leq, pt)


def random_formula(rng, depth, atom_names=("p", "q", "r"), modal=True):
    """Random primitive formula of at most the given depth."""
    rng = np.random.default_rng(rng)
    return _rand(rng, depth, list(atom_names), modal)


def _rand(rng, depth, names, modal):
    if depth <= 0 or rng.random() < 0.25:
        return Atom(names[int(rng.integers(len(names)))])
    kinds = ["not", "or"] + (["pl", "ep"] if modal else [])
    kind = kinds[int(rng.integers(len(kinds)))]
    if kind == "or":
        return Or(_rand(rng, depth - 1, names, modal), _rand(rng, depth - 1, names, modal))
    inner = _rand(rng, depth - 1, names, modal)
    return {"not": Not, "pl": DiaPl, "ep": DiaEp}[kind](inner)


def random_bits(rng, n):
    rng = np.random.default_rng(rng)
    return "".join("1" if b else "0" for b in rng.integers(0, 2, size=n))
