"""Model checking for the plausibility language.

Truth is computed bottom-up as the set of worlds satisfying each
subformula, so a formula is checked at every world in one pass.  Derived
connectives are desugared first; only the five primitive cases exist here.
Atoms missing from a world's atom set are false there.
"""

from __future__ import annotations

from .formula import Atom, DiaEp, DiaPl, Know, Believe, Not, Or, as_formula, desugar


def extension(m, f):
    """Frozenset of world ids where ``f`` holds in ``m``."""
    f = desugar(as_formula(f))
    cache = {}
    return _ext(m, f, cache)


def _ext(m, f, cache):
    hit = cache.get(f)
    if hit is not None:
        return hit
    if isinstance(f, Atom):
        out = frozenset(w.id for w in m.worlds if f.name in w.atoms)
    elif isinstance(f, Not):
        out = frozenset(m.ids) - _ext(m, f.operand, cache)
    elif isinstance(f, Or):
        out = _ext(m, f.left, cache) | _ext(m, f.right, cache)
    elif isinstance(f, DiaPl):
        inner = _ext(m, f.operand, cache)
        out = frozenset(w for w, up in m.more_plausible.items() if up & inner)
    elif isinstance(f, DiaEp):
        inner = _ext(m, f.operand, cache)
        out = frozenset(w for w, cls in m.indistinguishable.items() if cls & inner)
    else:
        raise TypeError(f"not a primitive formula: {f!r}")
    cache[f] = out
    return out


def evaluate(m, w, f):
    """Truth of ``f`` at world ``w`` of ``m``."""
    m.world(w)
    return w in extension(m, f)


def valid_in_model(m, f):
    """True iff ``f`` holds at every world of ``m``."""
    return len(extension(m, f)) == len(m.worlds)


def knows(m, w, f):
    return evaluate(m, w, Know(as_formula(f)))


def believes(m, w, f):
    return evaluate(m, w, Believe(as_formula(f)))
