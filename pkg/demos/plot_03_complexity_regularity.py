"""
Regular strings compress, random ones do not
============================================

Both backends agree on which string is simpler; only lz76 is
platform independent.
"""

import numpy as np

from abducer.complexity import conditional_complexity, lz76_phrases, plain_complexity

periodic = "01" * 20
irregular = "0001101000100110111101010010111011100100"

for backend in ("lz76", "deflate"):
    a = plain_complexity(periodic, backend)
    b = plain_complexity(irregular, backend)
    print(f"{backend:8} periodic {a.bits:7.2f}  irregular {b.bits:7.2f}")

print("lz76 phrases:", lz76_phrases(periodic), lz76_phrases(irregular))

# growth with length: periodic stays flat, random grows roughly like n / log n
rng = np.random.default_rng(0)
for n in (64, 256, 1024, 4096):
    noise = "".join(rng.choice(["0", "1"], n))
    print(n, plain_complexity(("01" * n)[:n]).bits, round(plain_complexity(noise).bits, 1))

# conditioning on itself leaves almost nothing to describe
x = "".join(rng.choice(["0", "1"], 256))
y = "".join(rng.choice(["0", "1"], 256))
print("K(x)   ", round(plain_complexity(x).bits, 1))
print("K(x|x) ", round(conditional_complexity(x, x).bits, 1))
print("K(x|y) ", round(conditional_complexity(x, y).bits, 1))
