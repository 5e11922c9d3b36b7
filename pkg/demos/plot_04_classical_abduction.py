"""
Classical abduction with truth tables
=====================================

A small diagnosis example of our own: one of two keys ``a`` or ``b`` is
in use, key ``a`` opens door ``o1`` and key ``b`` opens door ``o2``.
Both doors stay shut.
"""

from abducer import parse
from abducer.complexity import plain_complexity
from abducer.propabduction import (
    check_solution, classify_problem, clausal_bits, to_minimal_clausal,
)

theta = [parse(t) for t in ("a | b", "a -> o1", "b -> o2")]
phi = parse("!o1 & !o2")
print("kind:", classify_problem(theta, phi))

# theta rules phi out, so whatever yields phi together with theta also
# makes theta inconsistent
for alpha in ("l", "!o1 & !o2"):
    print(f"{alpha:10}", check_solution(theta, phi, parse(alpha)))

# a variant where the surprise is merely novel: a lock l keeps both doors shut
novel = [parse("a -> o1"), parse("l -> !o1 & !o2")]
print("novel variant:", classify_problem(novel, phi))
for alpha in ("l", "!o1 & !o2", "!a", "l & !a"):
    print(f"{alpha:10}", check_solution(novel, phi, parse(alpha)))

# equivalent theories normalise to the same clauses and score the same
t1 = to_minimal_clausal(["p -> q"])
t2 = to_minimal_clausal(["!q -> !p", "!p | q"])
print(t1, t2, clausal_bits(t1) == clausal_bits(t2))
print(to_minimal_clausal(theta), clausal_bits(to_minimal_clausal(theta)))
print(plain_complexity(clausal_bits(to_minimal_clausal(theta))).bits)
