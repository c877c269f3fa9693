"""Tour of the basic objects: graph families, spectra, S2 and f.

Run:  python demos/spectra_and_f.py
"""

from fractions import Fraction

from eigsum import (
    MatrixKind,
    certify_f,
    certify_s2,
    f_value,
    family_double_star,
    family_G,
    family_star_plus,
    graph6_encode,
    s_k,
)
from eigsum.graphs import complete_graph, path_graph
from eigsum.spectral import spectrum_of

print("== the star-plus graph on 5 vertices (star plus one extra edge) ==")
g = family_star_plus(4)
print("graph6:", graph6_encode(g), " n =", g.n, " e =", g.e)
print("Q-eigenvalues:", [round(v, 6) for v in spectrum_of(g).values])
print("S2 =", round(s_k(g, 2), 6), "   f = e + 3 - S2 =", round(f_value(g), 6))
print()

print("== the two-center family G(s, t): s pendants, t common neighbors ==")
for s, t in [(0, 2), (1, 2), (2, 1)]:
    g = family_G(s, t)
    print(f"G({s},{t}): n={g.n} e={g.e} f={f_value(g):.6f}")
print()

print("== a balanced double star (tree) has matching L and Q spectra ==")
t = family_double_star(2, 2)
print("Q:", [round(v, 4) for v in spectrum_of(t, MatrixKind.SIGNLESS).values])
print("L:", [round(v, 4) for v in spectrum_of(t, MatrixKind.LAPLACIAN).values])
print()

print("== exact certificates: rational brackets instead of floats ==")
for g, name in [(complete_graph(3), "K3"), (family_star_plus(3), "star-plus:3"),
                (path_graph(5), "P5")]:
    s2_iv = certify_s2(g, width=Fraction(1, 10**12))
    f_iv = certify_f(g, width=Fraction(1, 10**12))
    tag = "exact point" if s2_iv.lo == s2_iv.hi else f"width {float(s2_iv.width):.1e}"
    print(f"{name:12s} S2 in [{float(s2_iv.lo):.12f}, {float(s2_iv.hi):.12f}] ({tag})")
    print(f"{'':12s} f  in [{float(f_iv.lo):.12f}, {float(f_iv.hi):.12f}]")
