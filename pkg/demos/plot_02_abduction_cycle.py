"""
Detecting, solving and integrating a surprise
=============================================

Three worlds, a known rule ``p -> q``, and then ``q`` is observed.
"""

from abducer import parse
from abducer.abduction import detect, generate_candidates, integrate, is_solution, rank
from abducer.model import plausibility_matrix
from abducer.scenarios import fig2_model
from abducer.semantics import believes, valid_in_model

m = fig2_model()
print("K (p -> q) everywhere:", valid_in_model(m, parse("K (p -> q)")))
print("!K q everywhere:", valid_in_model(m, parse("!K q")))

problem = detect(m, "w1", parse("q"))
print("problem kind:", problem.kind)
print("worlds left after observing q:", problem.observed_model.ids)

print("p solves it:", is_solution(problem, parse("p")))
print("!p solves it:", is_solution(problem, parse("!p")))

# candidates are conjunctions of literals; strict mode also drops hypotheses
# that are impossible after the observation or explain phi trivially
for c in rank(problem, generate_candidates(problem, max_literals=2)):
    print(f"{c.text:10} {c.score:7.3f} bits")

result = integrate(problem, parse("p"))
print("\n".join(plausibility_matrix(result.model).rows()))
for w in result.model.ids:
    print(w, "believes p:", believes(result.model, w, parse("p")))
