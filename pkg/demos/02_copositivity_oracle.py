"""
An independent copositivity check
=================================

A simplicial partition of the standard simplex certifies copositivity up to
eps, or returns a nonnegative vector where the quadratic form is negative.
"""

import time

import numpy as np

from copositive6 import copositivity, generator
from copositive6.parrilo import counterexample_matrix

print(copositivity.certify(np.eye(6)).to_json())

bad = np.array([[1.0, -2.0], [-2.0, 1.0]])
v = copositivity.certify(bad)
print(v.outcome.value, "witness", v.witness, "value", v.value)

# an extreme matrix has zeros on the simplex, so only the eps-relaxed verdict is possible
A = counterexample_matrix()
for eps in (1e-3, 1e-6, 1e-9):
    t0 = time.perf_counter()
    v = copositivity.certify(A, eps=eps, max_depth=40)
    print(f"eps={eps:g}: {v.outcome.value}, depth {v.depth}, {v.simplices} simplices, "
          f"{time.perf_counter() - t0:.2f} s")

# too small a depth budget leaves simplices unresolved
v = copositivity.certify(A, eps=1e-9, max_depth=20)
print("depth 20:", v.outcome.value, v.unresolved, "unresolved")

# a cheap random search agrees
print("sampling witness:", copositivity.sample_falsify(A, samples=50_000))
w = copositivity.sample_falsify(A - 0.01 * np.eye(6))
print("shifted matrix witness:", np.round(w, 4), copositivity.quadratic_value(A - 0.01 * np.eye(6), w))
