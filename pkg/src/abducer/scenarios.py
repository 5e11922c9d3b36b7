"""The two worked examples: a two-world model and a full abduction cycle."""

from __future__ import annotations

from .abduction import detect, filter_flags, integrate, is_solution
from .dynamics import observe
from .formula import parse, to_text
from .model import PlausibilityModel, equal_plausibility
from .semantics import believes, evaluate, knows, valid_in_model


def fig1_model():
    """w1 has p and not q, w2 has p and q; w2 is strictly more plausible."""
    return PlausibilityModel.build(
        {"w1": {"p"}, "w2": {"p", "q"}},
        {("w1", "w1"), ("w1", "w2"), ("w2", "w2")},
        point="w1",
    )


def fig2_model():
    """Three equally plausible worlds: (p,q), (!p,q), (!p,!q)."""
    ids = ("w1", "w2", "w3")
    return PlausibilityModel.build(
        {"w1": {"p", "q"}, "w2": {"q"}, "w3": set()},
        {(a, b) for a in ids for b in ids},
        point="w1",
    )


def _yn(value):
    return "true" if value else "false"


def fig1_transcript():
    m = fig1_model()
    lines = ["model: w1 {p, !q} <= w2 {p, q}"]
    for text in ("K p", "K q", "B q", "B p"):
        lines.append(f"w1 |= {text}: {_yn(evaluate(m, 'w1', parse(text)))}")
    f = "K p & !K q & B q"
    lines.append(f"valid: {f}: {_yn(valid_in_model(m, parse(f)))}")
    return lines


def fig2_transcript():
    m = fig2_model()
    q, p = parse("q"), parse("p")
    lines = ["model: w1 {p, q} ~ w2 {!p, q} ~ w3 {!p, !q}, all equally plausible"]
    lines.append(f"valid: K (p -> q): {_yn(valid_in_model(m, parse('K (p -> q)')))}")
    lines.append(f"valid: !K q: {_yn(valid_in_model(m, parse('!K q')))}")
    problem = detect(m, "w1", q)
    obs = problem.observed_model
    total = equal_plausibility(obs) == obs.leq
    lines.append(f"observe q: worlds {', '.join(obs.ids)}; total: {_yn(total)}")
    lines.append(f"abductive problem at w1: {problem.kind}")
    lines.append(f"solution p: {_yn(is_solution(problem, p))}")
    consistent, explanatory = filter_flags(problem, p)
    lines.append(f"consistent: {_yn(consistent)}; explanatory: {_yn(explanatory)}")
    result = integrate(problem, p).model
    order = sorted(result.leq)
    lines.append("conjecture p: leq " + " ".join(f"{a}<={b}" for a, b in order))
    for w in result.ids:
        lines.append(f"{w} knows {to_text(q)}: {_yn(knows(result, w, q))}")
    lines.append(f"believes p: {_yn(all(believes(result, w, p) for w in result.ids))}")
    return lines


SCENARIOS = {"fig1": fig1_transcript, "fig2": fig2_transcript}
