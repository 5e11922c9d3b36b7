"""Epistemic actions: observation and conjecture (radical upgrade)."""

from __future__ import annotations

from .errors import EmptyObservation
from .formula import as_formula, to_text
from .semantics import extension


def observe(m, psi):
    """Keep only the worlds where ``psi`` holds, restricting ``leq`` to them.

    The designated point is kept if it survives and dropped otherwise.
    """
    psi = as_formula(psi)
    keep = extension(m, psi)
    if not keep:
        raise EmptyObservation(f"no world satisfies {to_text(psi)}")
    worlds = tuple(w for w in m.worlds if w.id in keep)
    leq = frozenset((w, u) for w, u in m.leq if w in keep and u in keep)
    point = m.point if m.point in keep else None
    return m.replace(worlds=worlds, leq=leq, point=point)


def conjecture(m, psi):
    """Radical upgrade with ``psi``: within every indistinguishability class
    all ``psi``-worlds become strictly more plausible than all ``!psi``-worlds;
    the order inside each of the two blocks is untouched.
    """
    psi = as_formula(psi)
    good = extension(m, psi)
    leq = {(w, u) for w, u in m.leq if u in good}
    leq |= {(w, u) for w, u in m.leq if w not in good}
    leq |= {
        (w, u)
        for w, cls in m.indistinguishable.items() if w not in good
        for u in cls if u in good
    }
    return m.replace(leq=frozenset(leq))
