"""Abductive problems and solutions inside plausibility models.

A surprising observation ``phi`` at world ``w`` of ``M`` is a problem when
the agent did not know ``phi`` before observing it.  A hypothesis ``psi``
solves it when, before the observation, the agent knew ``psi -> phi``.
Solutions are integrated by conjecturing them in the observed model and
ranked by how compressible the resulting change to the plausibility
matrix is, given the matrix before the change.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import propabduction
from .complexity import default_backend, score_relation_change
from .dynamics import conjecture, observe
from .errors import BudgetExceeded, NoSolutions, NotASolution, PointEliminated, TooManyAtoms
from .formula import (
    Atom, DiaEp, Implies, Not, as_formula, atoms, conjoin, desugar, is_propositional, to_text,
)
from .model import plausibility_matrix
from .propabduction import ProblemKind
from .semantics import believes, evaluate, knows, valid_in_model

DEFAULT_CANDIDATE_CAP = 10_000


@dataclass(frozen=True)
class AbductiveProblem:
    base_model: object
    point: str
    surprise: object
    observed_model: object
    kind: ProblemKind


@dataclass(frozen=True)
class CandidateSolution:
    hypothesis: object
    is_solution: bool
    consistent_analog: bool | None = None
    explanatory_analog: bool | None = None
    score: float | None = None
    backend: str | None = None
    reason: str | None = None

    @property
    def text(self):
        return to_text(self.hypothesis)


@dataclass(frozen=True)
class IntegrationResult:
    model: object
    belief_established: bool
    satisfiable: bool


def detect(m, w, phi):
    """The abductive problem raised by observing ``phi`` at ``w``, or ``None``.

    ``None`` means the agent already knew ``phi``.  A problem is anomalous
    when the agent believed ``!phi`` beforehand and novel otherwise.
    """
    phi = as_formula(phi)
    if not evaluate(m, w, phi):
        raise PointEliminated(f"{to_text(phi)} is false at {w}, so observing it removes {w}")
    if knows(m, w, phi):
        return None
    observed = observe(m, phi).replace(point=w)
    kind = ProblemKind.ANOMALOUS if believes(m, w, Not(phi)) else ProblemKind.NOVEL
    return AbductiveProblem(m, w, phi, observed, kind)


def is_solution(problem, psi):
    """Whether the agent knew ``psi -> phi`` before observing ``phi``."""
    return knows(problem.base_model, problem.point, Implies(as_formula(psi), problem.surprise))


def filter_flags(problem, psi):
    """``(consistent, explanatory)`` epistemic counterparts of the classical filters.

    consistent: ``psi`` holds at some world the agent still considers
    possible after the observation.  explanatory: ``psi -> phi`` is not a
    tautology (propositional case) or not valid in the observed model.
    """
    psi = as_formula(psi)
    consistent = evaluate(problem.observed_model, problem.point, DiaEp(psi))
    link = Implies(psi, problem.surprise)
    explanatory = None
    if is_propositional(psi) and is_propositional(problem.surprise):
        try:
            explanatory = not propabduction.entails([], link)
        except TooManyAtoms:
            pass
    if explanatory is None:
        explanatory = not valid_in_model(problem.observed_model, link)
    return consistent, explanatory


def candidate_atoms(problem):
    names = set(atoms(problem.surprise))
    for w in problem.base_model.worlds:
        names |= w.atoms
    return sorted(names)


def count_candidates(n_atoms, max_literals):
    return sum(comb(n_atoms, k) * 2 ** k for k in range(1, min(max_literals, n_atoms) + 1))


def generate_candidates(problem, max_literals=1, cap=DEFAULT_CANDIDATE_CAP):
    """Conjunctions of up to ``max_literals`` distinct, non-complementary literals.

    Literals range over the atoms of the surprise and of the base model;
    positive literals come first, then negative ones, each alphabetically.
    """
    if max_literals < 1:
        raise ValueError("max_literals must be at least 1")
    names = candidate_atoms(problem)
    total = count_candidates(len(names), max_literals)
    if total > cap:
        raise BudgetExceeded(f"{total} candidates exceed the cap of {cap}")
    literals = [(a, True) for a in names] + [(a, False) for a in names]
    out = []
    for k in range(1, max_literals + 1):
        for combo in combinations(literals, k):
            if len({a for a, _ in combo}) < k:
                continue
            parts = [Atom(a) if pos else Not(Atom(a)) for a, pos in combo]
            out.append(desugar(conjoin(parts)))
    return out


def relation_change_score(m, psi, backend=None):
    """Complexity of ``m``'s plausibility matrix after conjecturing ``psi``,
    given the matrix before."""
    before = plausibility_matrix(m)
    after = plausibility_matrix(conjecture(m, psi), order=before.order)
    return score_relation_change(before, after, backend)


def screen(problem, candidates, strict=True, backend=None, score=True):
    """Evaluate every candidate; only those passing the filters get a score.

    In plain mode (``strict=False``) the only filter is being a solution.
    Strict mode also requires both epistemic filter flags.  Excluded
    candidates carry a ``reason``.
    """
    backend = backend or default_backend()
    out = []
    for psi in candidates:
        psi = as_formula(psi)
        if not is_solution(problem, psi):
            out.append(CandidateSolution(psi, False, reason="agent did not know psi -> phi"))
            continue
        consistent, explanatory = filter_flags(problem, psi)
        reason = None
        if strict and not consistent:
            reason = "inconsistent with what remains possible"
        elif strict and not explanatory:
            reason = "not explanatory: psi -> phi holds regardless of the model"
        bits = None
        if reason is None and score:
            bits = relation_change_score(problem.observed_model, psi, backend).bits
        out.append(CandidateSolution(psi, True, consistent, explanatory, bits, backend, reason))
    return out


def rank(problem, candidates, strict=True, backend=None):
    """Solutions sorted by ascending score, ties broken by printed hypothesis."""
    candidates = list(candidates)
    if not candidates:
        raise ValueError("no candidates to rank")
    screened = screen(problem, candidates, strict=strict, backend=backend)
    if not any(c.is_solution for c in screened):
        raise NoSolutions("no candidate satisfies the solution condition")
    scored = [c for c in screened if c.score is not None]
    return sorted(scored, key=lambda c: (c.score, c.text))


def integrate(problem, chosen):
    """Conjecture ``chosen`` in the observed model.

    ``belief_established`` reports whether the agent ends up believing
    ``chosen`` at the point; this fails when no world the agent considers
    possible satisfies it.
    """
    chosen = as_formula(chosen)
    if not is_solution(problem, chosen):
        raise NotASolution(f"{to_text(chosen)} is not a solution")
    result = conjecture(problem.observed_model, chosen)
    sat = evaluate(problem.observed_model, problem.point, DiaEp(chosen))
    return IntegrationResult(result, believes(result, problem.point, chosen), sat)
