import numpy as np
import pytest

from abducer.abduction import (
    count_candidates, detect, filter_flags, generate_candidates, integrate, is_solution,
    rank, relation_change_score, screen,
)
from abducer.dynamics import conjecture
from abducer.errors import (
    BudgetExceeded, NoSolutions, NotASolution, PointEliminated,
)
from abducer.formula import Atom, Not, parse, to_text
from abducer.model import PlausibilityModel, validate
from abducer.propabduction import ProblemKind
from abducer.sampling import random_formula, random_model
from abducer.semantics import believes, evaluate, knows

P = parse


def top_worlds(m, w):
    cls = [u for u in m.ids if (w, u) in m.leq or (u, w) in m.leq]
    return [u for u in cls if all((v, u) in m.leq for v in cls if (u, v) in m.leq)]


@pytest.fixture
def fig2_problem(fig2):
    return detect(fig2, "w1", P("q"))


def test_fig2_novel(fig2, fig2_problem):
    # all three worlds are most plausible; q holds at w1, w2 but not w3
    assert top_worlds(fig2, "w1") == ["w1", "w2", "w3"]
    assert fig2_problem.kind is ProblemKind.NOVEL
    assert fig2_problem.observed_model.ids == ("w1", "w2")
    assert fig2_problem.observed_model.point == "w1"


def test_known_fact_is_not_a_problem(fig1):
    assert detect(fig1, "w1", P("p")) is None


def test_anomalous():
    m = PlausibilityModel.build({"a": {"q"}, "b": set()}, {("a", "a"), ("a", "b"), ("b", "b")})
    assert all("q" not in m.valuation(u) for u in top_worlds(m, "a"))
    assert detect(m, "a", P("q")).kind is ProblemKind.ANOMALOUS


def test_point_eliminated(fig2):
    with pytest.raises(PointEliminated):
        detect(fig2, "w3", P("q"))


def test_is_solution(fig2_problem):
    assert is_solution(fig2_problem, P("p"))
    assert is_solution(fig2_problem, P("q"))
    assert not is_solution(fig2_problem, P("!p"))


def test_disjoint_atoms_not_a_solution():
    m = PlausibilityModel.build(
        {"w1": {"p", "q"}, "w2": {"q"}, "w3": {"r"}},
        {(a, b) for a in ("w1", "w2", "w3") for b in ("w1", "w2", "w3")},
    )
    problem = detect(m, "w1", P("q"))
    witness = [u for u in m.ids if evaluate(m, u, P("r & !q"))]
    assert witness == ["w3"]
    assert not is_solution(problem, P("r"))


def test_filter_flags(fig2_problem):
    assert filter_flags(fig2_problem, P("p")) == (True, True)
    assert filter_flags(fig2_problem, P("q"))[1] is False
    assert is_solution(fig2_problem, P("p & !p"))
    assert filter_flags(fig2_problem, P("p & !p"))[0] is False


def test_generate_candidates(fig2_problem):
    assert generate_candidates(fig2_problem, 1) == [Atom("p"), Atom("q"), Not(Atom("p")), Not(Atom("q"))]
    two = [to_text(c) for c in generate_candidates(fig2_problem, 2)]
    assert two[4:] == ["p & q", "p & !q", "q & !p", "!p & !q"]
    assert P("p") in generate_candidates(fig2_problem, 1)


def test_generate_single_atom():
    m = PlausibilityModel.build({"a": {"p"}, "b": set()}, {(x, y) for x in "ab" for y in "ab"})
    problem = detect(m, "a", P("p"))
    assert generate_candidates(problem, 2) == [Atom("p"), Not(Atom("p"))]


def test_budget(fig2_problem):
    assert count_candidates(2, 2) == 8
    with pytest.raises(BudgetExceeded):
        generate_candidates(fig2_problem, 2, cap=5)


def test_rank_fig2(fig2_problem):
    ranked = rank(fig2_problem, [P("p"), P("!p")])
    assert [c.text for c in ranked] == ["p"]
    excluded = [c for c in screen(fig2_problem, [P("p"), P("!p")]) if c.score is None]
    assert excluded[0].reason


def test_identical_relations_equal_scores(fig2_problem):
    ranked = rank(fig2_problem, [P("p & q"), P("p")], strict=False)
    assert ranked[0].score == ranked[1].score
    assert [c.text for c in ranked] == ["p", "p & q"]


def test_no_solutions(fig2_problem):
    with pytest.raises(NoSolutions):
        rank(fig2_problem, [P("!p")])


def test_rank_is_permutation_of_solutions(fig2_problem):
    cands = generate_candidates(fig2_problem, 2)
    ranked = rank(fig2_problem, cands, strict=False)
    sols = [c for c in cands if is_solution(fig2_problem, c)]
    assert sorted(to_text(c.hypothesis) for c in ranked) == sorted(to_text(c) for c in sols)
    assert all(c.score >= 0 for c in ranked)
    keys = [(c.score, c.text) for c in ranked]
    assert keys == sorted(keys)


def test_integrate_fig2(fig2_problem):
    res = integrate(fig2_problem, P("p"))
    assert res.model.leq == {("w1", "w1"), ("w2", "w1"), ("w2", "w2")}
    assert res.belief_established and believes(res.model, "w1", P("p"))


def test_integrate_true_everywhere(fig2_problem):
    res = integrate(fig2_problem, P("q"))
    assert res.model == fig2_problem.observed_model
    assert res.belief_established


def test_integrate_unsatisfiable_in_point_class():
    # r only holds in a class the agent at a cannot reach
    m = PlausibilityModel.build(
        {"a": {"q"}, "c": set(), "d": {"q", "r"}},
        {("a", "a"), ("c", "c"), ("d", "d"), ("a", "c"), ("c", "a")},
    )
    problem = detect(m, "a", P("q"))
    assert is_solution(problem, P("r"))
    res = integrate(problem, P("r"))
    assert not res.satisfiable and not res.belief_established


def test_integrate_requires_solution(fig2_problem):
    with pytest.raises(NotASolution):
        integrate(fig2_problem, P("!p"))


def _problem_instance(rng, n_lo, n_hi, min_changed=None):
    """Random problem for surprise q where conjecturing q & r scrambles the order."""
    while True:
        n = int(rng.integers(n_lo, n_hi + 1))
        m = random_model(rng, n, ("q", "r", "s"), max_classes=3)
        if "q" not in m.valuation(m.point):
            continue
        problem = detect(m, m.point, P("q"))
        if problem is None:
            continue
        obs = problem.observed_model
        changed = len(conjecture(obs, P("q & r")).leq ^ obs.leq)
        if changed >= (len(obs) if min_changed is None else min_changed):
            return problem


def test_unchanged_relation_scores_lower(rng):
    lower = 0
    for _ in range(120):
        problem = _problem_instance(rng, 8, 12)
        scores = {c.text: c.score for c in rank(problem, [P("q"), P("q & r")], strict=False)}
        lower += scores["q"] < scores["q & r"]
    assert lower / 120 >= 0.95


@pytest.mark.parametrize("seed", range(150))
def test_random_invariants(seed):
    rng = np.random.default_rng(seed)
    m = random_model(rng, int(rng.integers(1, 7)))
    phi = random_formula(rng, 2, modal=False)
    w = m.point
    if not evaluate(m, w, phi):
        with pytest.raises(PointEliminated):
            detect(m, w, phi)
        return
    problem = detect(m, w, phi)
    if knows(m, w, phi):
        assert problem is None
        return
    assert problem is not None
    assert is_solution(problem, phi)
    assert filter_flags(problem, phi)[1] is False
    psi = random_formula(rng, 2, modal=False)
    if is_solution(problem, psi):
        res = integrate(problem, psi)
        assert res.model.worlds == problem.observed_model.worlds
        assert validate(res.model) == []
        if res.satisfiable:
            assert res.belief_established


def test_relation_change_score_identity(fig2):
    assert relation_change_score(fig2, P("p | !p")).bits >= 0
