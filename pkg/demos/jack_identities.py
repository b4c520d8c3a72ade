"""Jack polynomials over the generic parameter, and the identities they satisfy.

Run: python demos/jack_identities.py
"""

from fractions import Fraction

from fockjack.jack import b_lambda, ct_pairing, duality_check, eval_P, inner_N, jack, norm_check
from fockjack.partitions import enumerate_partitions
from fockjack.symfun import convert, eval_eps

print("P_lambda in the monomial basis, degree 3 (k is the Jack parameter):")
for lam in enumerate_partitions(3):
    pair = jack(lam)
    terms = ", ".join(f"m{list(mu)}: {c}" for mu, c in sorted(pair.P.terms.items(), reverse=True))
    print(f"  P{list(lam)} = {terms}")
    print(f"    b = {pair.b}")

# Gram-Schmidt produced <P, P> as a by-product; the box product gives 1/b
lam = (3, 2, 1)
cert = norm_check(lam)
print(f"\n<P, P> for {lam} by Gram-Schmidt equals 1/b by the box product: {cert.passed}")
print(f"omega_k P{lam}(k) = Q of the conjugate at 1/k: {duality_check(lam).passed}")

# evaluating every power sum at X: substitution and the closed product agree
X = Fraction(7, 2)
k0 = Fraction(2, 3)
direct = eval_eps(convert(jack((2, 2), k0).P, "p"), X)
print(f"\nepsilon_X(P(2,2)) at X = {X}, k = {k0}: {direct} (closed product {eval_P((2, 2), X, k0)})")

print("\nN-variable norms against the constant-term functional (k = 1/2):")
for N in (2, 3):
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        P = jack(lam, Fraction(1, 2)).P
        print(f"  N={N} {lam}: closed {inner_N(lam, lam, N, Fraction(1, 2))}, constant term {ct_pairing(P, P, N, 2)}")

print(f"\nb_(2,1) at k = 2/3: {b_lambda((2, 1), Fraction(2, 3))}")
