"""
Cubics and quartics
===================

Degrees 3 and 4 need no covariant beyond the trace-zero shift, with one
squaring step when the linear coefficient happens to vanish.
"""

from tforge import transform as T
from tforge.domains import GF, QQ
from tforge.unipoly import UniPoly

for text, field in (("x^3 + x + 1", GF(5)), ("x^3 + 3", GF(7)), ("x^3 - 2", QQ)):
    ne = T.normalize_cubic(UniPoly.parse(text, field))
    print(f"{text:>14} over {field}: {ne.transformed.format('y')}   notes={ne.notes}")

# A biquadratic quartic: y = b/2 + x + x^2 gets linear coefficient 4d - b^2.
f = UniPoly.parse("x^4 + 3*x^2 + 5", GF(7))
ne = T.normalize_quartic(f)
print("4d - b^2 =", GF(7).normalize(T.quartic_shift_linear_coefficient(3, 5)))
print(f.format("x"), "->", ne.transformed.format("y"), ne.verify())
