"""
Ranking hypotheses on larger random models
==========================================

Strict ranking first.  Then the observation itself, ``q``, which is true
at every remaining world and so leaves the matrix alone, is compared in
plain mode against ``q & r``, which usually reshuffles it.
"""

import numpy as np

from abducer import parse
from abducer.abduction import detect, generate_candidates, rank
from abducer.sampling import random_model

rng = np.random.default_rng(3)
problem = None
while problem is None:
    m = random_model(rng, 12, ("q", "r", "s"), max_classes=2)
    if "q" in m.valuation(m.point):
        problem = detect(m, m.point, parse("q"))

print("point", problem.point, "kind", problem.kind)
print("observed worlds:", len(problem.observed_model))

candidates = generate_candidates(problem, max_literals=2)
for backend in ("lz76", "deflate"):
    ranked = rank(problem, candidates, backend=backend)
    print(backend)
    for c in ranked[:6]:
        print(f"  {c.text:10} {c.score:8.2f}")

wins = ties = 0
trials = 200
for _ in range(trials):
    while True:
        m = random_model(rng, 10, ("q", "r", "s"))
        if "q" in m.valuation(m.point):
            p = detect(m, m.point, parse("q"))
            if p is not None:
                break
    s = {c.text: c.score for c in rank(p, ["q", "q & r"], strict=False)}
    wins += s["q"] < s["q & r"]
    ties += s["q"] == s["q & r"]
print(f"q strictly lower {wins}/{trials}, tied {ties}/{trials}")
