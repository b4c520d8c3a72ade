"""Singular vectors in Fock modules from rectangular Jack functions, checked two ways.

Run: python demos/singular_vectors.py [p_plus p_minus]
"""

import sys

from fockjack import model, weight
from fockjack.fock import l0_eigenvalue, singular_space, virasoro_apply
from fockjack.screening import proportionality, singular_vector, struct_const

pp, pm = (int(x) for x in sys.argv[1:3]) if len(sys.argv) > 2 else (2, 3)
m = model(pp, pm)
print(f"model {m}: c = {m.c}, alpha_+ = {m.alpha_plus}, alpha_- = {m.alpha_minus}")

for r, s in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 4)]:
    v = singular_vector(m, "+", r, s)
    killed = all(virasoro_apply(v, k).is_zero() for k in range(1, 6))
    # brute force: the kernel of L_1 and L_2 at grade rs
    space = singular_space(m, weight(m, -r, -s), r * s)
    cert = proportionality(m, r, s)
    print(
        f"  (r,s)=({r},{s}): {len(v.terms)} monomials, L_0 = {l0_eigenvalue(v)}, "
        f"killed by L_1..L_5: {killed}, brute-force dim {len(space)}, "
        f"S+/S- ratio {cert.ratio} (expected {cert.rhs})"
    )

print("\nsmallest vector written out:")
print(" ", singular_vector(m, "+", 1, 2))

print("\nstructure constants a_{n,k} (closed product / Jack evaluation):")
for n, k in [(1, -1), (1, 0), (2, -1)]:
    sc = struct_const(m, "a", n, k)
    print(f"  a_{{{n},{k}}} = {sc.value} / {sc.second_route}")
