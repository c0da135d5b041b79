"""
Case-13 matrices and their minimal zeros
========================================

Build a case-13.1 matrix from six angles, then recover its minimal zeros
twice: once from the sine formulas, once by searching principal submatrices.
"""

import numpy as np

from copositive6 import generator, zeros
from copositive6.core_types import AngleVector

# angles given as multiples of pi
phi = AngleVector.from_pi_multiples((0.20, 0.29, 0.30, 0.23, 0.06, 0.02))
print("regime:", [f.value for f in generator.classify_regime(phi).as_tuple()])

A = generator.build_case13(phi, "13.1")
np.set_printoptions(precision=4, suppress=True)
print(A)

# the search knows nothing about the angles
found = zeros.find_minimal_zeros(A)
closed = {z.support: z.vector for z in generator.closed_form_zeros(phi)}
for z in found:
    e = zeros.extended_support(A, z)
    err = np.abs(z.vector - closed[z.support]).max()
    print(f"{str(e):24s} max deviation from closed form {err:.1e}")

# A U has a fixed sparsity pattern; nonzero entries are c-coefficients times sines
AU = A @ generator.zero_matrix(phi)
print("A U pattern error:", np.abs(AU - generator.expected_AU(phi, "13.1")).max())

# extended supports are invariant under positive diagonal scaling
d = np.array([0.5, 2.0, 1.0, 3.0, 0.7, 1.5])
print("DAD invariant:", zeros.esupp_set(generator.scale_dad(A, d)) == zeros.esupp_set(A))

# every block A[I x J] is rank deficient
print("in Z_E:", zeros.check_ZE_membership(A, zeros.esupp_set(A)))
