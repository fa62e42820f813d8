"""
Joubert's sextic covariant and the outer automorphism of S6
===========================================================

The sextic construction starts on the projective line over GF(5), whose six
points are permuted by PGL2(F5), a subgroup of S6 of order 120 that fixes
no point.  The outer automorphism tau carries a point stabilizer onto it.
"""

import random
from collections import Counter

from tforge import covariants as cov
from tforge import gf
from tforge import transform as T

tau = cov.outer_automorphism_tau()
for k, img in sorted(tau.transposition_images().items()):
    print(f"tau((1 {k})) = {img}")

facts = cov.group_facts()
print("|H| =", facts["order_H"], " H is a union of eta-cosets:", facts["H_is_union_of_eta_cosets"])

# psi_1 is a cubic with 20 terms, all coefficients +-1, congruent to e3 mod 2.
psi = cov.joubert_psi()
print("psi_1 =", psi[1])
rep = cov.verify_joubert()
print("e5(psi) = c * Delta with c =", rep["s5(phi) = c * Delta^6"])

# psi_1 is not fixed by the permutations of x2..x6, so psi is equivariant only
# through tau.  There is no polynomial phi(a, X) with phi_1 = phi(a, x1).
try:
    cov.build_covariant(cov.joubert_phi1(), 6)
except cov.InvarianceError as exc:
    print("as an untwisted seed:", exc)

# The image polynomial is still computable from the coefficients of f through
# symmetric functions and the discriminant.
rng = random.Random(0)
shapes = Counter()
for q in (3, 5, 7, 9):
    K = gf.field_of_order(q)
    for _ in range(20):
        f = gf.random_irreducible(K, 6, rng)
        shapes[tuple(T.factor_degrees(T.joubert_image().apply(f)))] += 1
print("factor degrees of the image over GF(3), GF(5), GF(7), GF(9):", dict(shapes))

# Those images factor, so the direct normal form is unavailable here.  The
# opt-in search over generators of K[x]/(f) still finds one.
f = gf.first_irreducible(gf.field_of_order(7), 6)
ne = T.normalize_sextic(f, fallback="search")
print(f.format("x"), "->", ne.transformed.format("y"), ne.verify())
