"""
How often is a random case-13.1 matrix in K^(1)?
================================================

Sample angle vectors from the main regime and tally the verdicts, along with
which m_ijk is responsible for each failure.
"""

from collections import Counter

import numpy as np

from copositive6 import generator, parrilo

rng = np.random.default_rng(0)
phis = generator.sample_main_regime(rng, "13.1", 2000)

verdicts = Counter()
culprits = Counter()
for phi in phis:
    cert = parrilo.membership_case13_1(phi)
    verdicts[cert.outcome.value] += 1
    culprits.update("".join(map(str, t)) for t in cert.violating)

print(dict(verdicts))
print("violated triples:", dict(culprits.most_common()))

# m135 and m246 are each a sum of three c-coefficients and stay nonnegative
low = min(min(parrilo.m_closed_form(p)[(1, 3, 5)], parrilo.m_closed_form(p)[(2, 4, 6)]) for p in phis)
print("smallest m135 / m246 seen:", low)
