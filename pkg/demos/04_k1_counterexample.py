"""
An extreme copositive matrix outside K^(1)
==========================================

For case-13.1 matrices the K^(1) certificate is forced: each M^i has rank two
with a known column space, which fixes Lambda^i = A - M^i and the numbers
m_ijk. Membership then reduces to the signs of eight cosine expressions.
"""

import numpy as np

from copositive6 import parrilo, zeros
from copositive6.copositivity import certify

phi = parrilo.counterexample_phi()
A = parrilo.counterexample_matrix()
print("matches printed entries:", np.abs(A - parrilo.printed_counterexample()).max() <= 1e-12)
print("copositive:", certify(A).outcome.value)
print("extended supports:", [str(e) for e in zeros.esupp_set(A)])

cert = parrilo.solve_certificate(A, phi)
print("normalized determinant:", cert.det)
for t, v in cert.m.items():
    if abs(v) > 1e-12:
        print(f"  m{''.join(map(str, t))} = {v:+.6f}")
print("verdict:", cert.outcome.value, "violating", cert.violating)
print("m136 below -4/3 by", -4 / 3 - cert.m[(1, 3, 6)])

# the determinant never vanishes: it is 4 prod(sin phi) sin^2(sum/2)
f = phi.array
print(parrilo.system_determinant(phi, normalized=False), 4 * np.prod(np.sin(f)) * np.sin(f.sum() / 2) ** 2)
