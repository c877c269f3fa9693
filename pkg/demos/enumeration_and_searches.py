"""Isomorphism-free enumeration and the certified extremal searches,
including the cospectral tie that breaks uniqueness at cycle dimension 3.

Run:  python demos/enumeration_and_searches.py
"""

from eigsum import (
    EnumSpec,
    canonical_form,
    enumerate_graphs,
    family_G,
    family_star_plus,
    laplacian_equality_class,
    max_s2_by_cycle_dim,
    min_f_by_edges,
)
from eigsum.exact import signless_charpoly
from eigsum.graphs import graph6_decode

print("== enumeration: one canonical representative per class ==")
for n in range(1, 7):
    print(f"n={n}: {len(enumerate_graphs(EnumSpec('vertices', n)))} classes")
print("5-vertex trees:", [canonical_form(g) for g in
                          enumerate_graphs(EnumSpec("vertices", 5, trees_only=True))])
print("3-edge classes:", [canonical_form(g) for g in
                          enumerate_graphs(EnumSpec("edges", 3))])
print()

print("== minimum f over all graphs with m edges ==")
for m in (4, 5, 6):
    rep = min_f_by_edges(m)
    star = canonical_form(family_star_plus(m - 1))
    print(f"m={m}: argmin={rep.argext} unique={rep.unique} "
          f"f~{rep.ext_value.midpoint_float():.6f} "
          f"(star-plus? {rep.argext == (star,)})")
print()

print("== graphs attaining the Laplacian equality mu1 + mu2 = e + 3 ==")
rep = laplacian_equality_class("vertices", 5, connected=True)
print("n=5 connected:", rep.argext)
print("family G(s, 3-s):", sorted(canonical_form(family_G(s, 3 - s)) for s in range(3)))
print()

print("== S2-maximizers by cycle dimension: a cospectral surprise at c=3 ==")
for c in (1, 2, 3):
    rep = max_s2_by_cycle_dim(6, c)
    predicted = canonical_form(family_G(6 - 2 - c, c))
    print(f"n=6 c={c}: argmax={rep.argext} unique={rep.unique} "
          f"predicted={predicted}")
rep = max_s2_by_cycle_dim(6, 3)
print()
print("the two c=3 maximizers share one characteristic polynomial exactly:")
for s in rep.argext:
    print(f"  {s}: {signless_charpoly(graph6_decode(s))}")
