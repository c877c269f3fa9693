"""Compound and additive compound matrices, and why they matter here:
the largest eigenvalue of the second additive compound is exactly S2.

Run:  python demos/compound_matrices.py
"""

import numpy as np

from eigsum import additive_compound, compound, eig_sym, ksubsets_lex
from eigsum.graphs import family_star_plus
from eigsum.linalg import numeric_derivative_compound
from eigsum.spectral import MatrixKind, matrix_of, q_a_pi, s_k

print("== lexicographic k-subsets index the compound rows/columns ==")
idx = ksubsets_lex(4, 2)
print("2-subsets of {1..4}:", idx.sets)
print()

print("== compound matrix: minors of a diagonal matrix stay diagonal ==")
d = np.diag([2.0, 3.0, 5.0])
print(compound(d, 2))
print()

print("== additive compound via closed form vs. the derivative oracle ==")
q3 = q_a_pi(3).astype(float)
closed = additive_compound(q3, 2)
approx = numeric_derivative_compound(q3, 2, 1e-7)
print("closed form:\n", closed)
print("max deviation from finite difference:", np.abs(closed - approx).max())
print()

print("== eigenvalues of the additive compound are pairwise sums ==")
a = np.array([[1.0, 2.0], [2.0, -1.0]])
full = eig_sym(a).values
print("eig(A)      =", [round(v, 6) for v in full])
print("eig(D2(A))  =", [round(v, 6) for v in eig_sym(additive_compound(a, 2)).values])
print("sum of both =", round(sum(full), 6))
print()

print("== S2 of the star-plus graph equals the top compound eigenvalue ==")
for a_param in (3, 5, 9):
    g = family_star_plus(a_param)
    d2 = additive_compound(matrix_of(g, MatrixKind.SIGNLESS).astype(float), 2)
    top = max(np.linalg.eigvals(d2).real)
    print(f"a={a_param}: S2 = {s_k(g, 2):.9f}   top compound eigenvalue = {top:.9f}")
