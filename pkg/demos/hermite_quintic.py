"""
Hermite's quintic covariant
===========================

Build the covariant, watch its first and third elementary symmetric
functions vanish, and use it to put quintics into the shape
y^5 + b y^3 + c y + c.
"""

import random

from tforge import covariants as cov
from tforge import gf
from tforge import transform as T
from tforge.domains import GF, QQ
from tforge.unipoly import UniPoly

# The seed psi_1 has degree 9 and is fixed by every permutation of x2..x5.
psi1 = cov.hermite_psi1()
print("psi_1:", len(psi1), "terms, degree", psi1.degree())

# Multiplying by omega_i and by the Vandermonde product gives phi_i of degree 25.
phi = cov.hermite_covariant()
print("phi_1 degree:", phi[1].degree(), "equivariant:", phi.is_equivariant())

# e1 and e3 of psi~_i = psi_i * omega_i are identically zero.
report = cov.verify_hermite()
for name, check in report["checks"].items():
    print(f"  {name}: {'PASS' if check['ok'] else 'FAIL'}")

# Because the covariant is untwisted, phi_i(x) = phi(a(x), x_i) for a single
# polynomial phi(a, X) of X-degree 4, so the transform is a resultant over K.
tf = T.hermite_form()
print("Tschirnhaus form: X-degree", len(tf.pj) - 1,
      "with", sum(len(p) for p in tf.pj), "terms in the coefficients")

# Every image has vanishing y^4 and y^2 coefficients.
f = gf.random_irreducible(GF(41), 5, random.Random(1))
print("f      =", f.format("x"))
print("f_bar  =", T.transformed_polynomial(f, tf).format("y"))

# x^5 - a lies in the kernel: its image is y^5.
print("x^5 - 2 over Q ->", T.transformed_polynomial(UniPoly.parse("x^5 - 2", QQ), tf).format("y"))

# The normalizer scans generators of K[x]/(f) until the image has a nonzero
# tail, then rescales so the last two coefficients agree.
ne = T.normalize_quintic(f)
print("normal form:", ne.transformed.format("y"), ne.verify())

# Fields with fewer than 41 elements use a short table instead.
for q in (3, 8, 32):
    K = gf.field_of_order(q)
    ne = T.normalize_quintic(gf.first_irreducible(K, 5))
    print(f"GF({q}):", ne.transformed.format("y"))
