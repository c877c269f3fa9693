"""Exact machinery: integer characteristic polynomials, Sturm counts, and the
quotient-cubic shortcut for the star-plus family.

Run:  python demos/exact_certificates.py
"""

from fractions import Fraction

from eigsum import charpoly_exact, isolate_top_roots, sturm_count
from eigsum.exact import RationalInterval, count_roots_above, signless_charpoly
from eigsum.graphs import family_star_plus
from eigsum.spectral import (
    p_a,
    p_qapi,
    q_a_pi,
    quotient_matrix,
    star_plus_f_bracket,
    star_plus_partition,
)

print("== equitable partition of the star-plus graph and its quotient ==")
a = 6
g = family_star_plus(a)
blocks = star_plus_partition(a)
print("blocks:", blocks)
print("quotient matrix:\n", quotient_matrix(g, blocks))
print()

print("== its characteristic polynomial is a cubic; the rest is (x-1)^(a-2) ==")
cubic = p_qapi(a)
print("cubic      :", cubic)
print("full P_Q   :", signless_charpoly(g))
print("cubic roots above 1:", count_roots_above(cubic, 1), "(top two eigenvalues)")
print()

print("== isolate roots with exact rational brackets ==")
for rb in isolate_top_roots(cubic, 3, width=Fraction(1, 10**15)):
    kind = "exact" if rb.is_exact else f"width <= 1e-15"
    print(f"root ~ {rb.interval.midpoint_float():.12f}  ({kind}, "
          f"multiplicity {rb.multiplicity})")
print()

print("== Sturm counts answer interval queries without floats ==")
print("roots of the cubic in (1, 3]:", sturm_count(cubic, RationalInterval(1, 3)))
print("roots of x^2 - 2 in (0, 2]:",
      sturm_count(charpoly_exact([[0, 1], [2, 0]]), RationalInterval(0, 2)))
print()

print("== f of the star-plus family via the shifted cubic (scales to any a) ==")
for a in (3, 10, 50, 99):
    iv = star_plus_f_bracket(a, Fraction(1, 10**12))
    n = a + 1
    print(f"a={a:3d}: f in [{float(iv.lo):.10f}, {float(iv.hi):.10f}]  "
          f"vs (1.3/n, 1.5/n) = ({1.3/n:.10f}, {1.5/n:.10f})")
print()
print("shifted cubic at a=3:", p_a(3), " (largest root is exactly -f)")
