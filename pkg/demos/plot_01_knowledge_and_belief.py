"""
Knowledge and belief in a two-world model
=========================================

The agent cannot tell w1 from w2 but finds w2 more plausible.
"""

from abducer import parse
from abducer.model import dumps, plausibility_matrix
from abducer.scenarios import fig1_model
from abducer.semantics import evaluate, extension, valid_in_model

m = fig1_model()
print(dumps(m, indent=2))

# K looks at every indistinguishable world, B only at the most plausible ones
for text in ("p", "q", "K p", "K q", "B q", "B p", "B !q"):
    print(f"{text:6} at w1: {evaluate(m, 'w1', parse(text))}")

# extensions are plain sets of world ids
print("worlds where B q holds:", sorted(extension(m, parse("B q"))))
print("valid everywhere:", valid_in_model(m, parse("K p & !K q & B q")))

mx = plausibility_matrix(m)
print("order", mx.order)
print("\n".join(mx.rows()))
