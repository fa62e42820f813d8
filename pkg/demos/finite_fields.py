"""
Finite-field facts behind the small cases
=========================================

The covariant argument needs a field with at least 41 elements.  Below that
a table covers each field, and two counting arguments bound what is possible.
"""

from tforge import gf

rep = gf.verify_quintic_table()
for row in rep["entries"]:
    print(f"{row['field']:>6}  {row['polynomial']:<28} irreducible={row['irreducible']}")
print(f"{rep['passed']}/{rep['total']} entries pass")

# The proper subfields of GF(p^n) span a subspace of codimension phi(n),
# Euler's totient.  Here the span is computed by Gaussian elimination.
for p, n in ((2, 4), (2, 6), (3, 6), (2, 10), (5, 6)):
    r = gf.subfield_span_report(p, n)
    print(f"GF({p}^{n}): codimension {r['codim']}, formula {r['formula']}")

# A form of degree d < q that vanishes on all of K^m is zero; at d = q it need not be.
print(gf.vanishing_bound_witness(2, 1, 2)["counterexample"])
