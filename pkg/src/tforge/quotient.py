"""The field L = K[x]/(f) for an irreducible polynomial f over K.

Elements are coordinate tuples in the power basis 1, x, ..., x^(n-1).  The
class is a ``Domain``, so ``UniPoly`` over L works and the finite-field root
finding in ``gf`` applies when K is finite.
"""

from __future__ import annotations

import itertools

from .domains import Domain
from .unipoly import UniPoly, charpoly


class QuotientElement:
    __slots__ = ("ring", "c")

    def __init__(self, ring, coords):
        self.ring = ring
        self.c = coords

    def _coords(self, other):
        if isinstance(other, QuotientElement):
            if other.ring != self.ring:
                raise ValueError("elements of different quotient rings")
            return other.c
        try:
            return self.ring.normalize(other).c
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coords(other)
        if o is None:
            return NotImplemented
        norm = self.ring.base.normalize
        return QuotientElement(self.ring, tuple(norm(a + b) for a, b in zip(self.c, o)))

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.base.normalize
        return QuotientElement(self.ring, tuple(norm(-a) for a in self.c))

    def __sub__(self, other):
        o = self._coords(other)
        if o is None:
            return NotImplemented
        norm = self.ring.base.normalize
        return QuotientElement(self.ring, tuple(norm(a - b) for a, b in zip(self.c, o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coords(other)
        if o is None:
            return NotImplemented
        return QuotientElement(self.ring, self.ring._mul(self.c, o))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self):
        return self.ring.inv(self)

    def __truediv__(self, other):
        return self * self.ring.inv(self.ring.normalize(other))

    def __eq__(self, other):
        if isinstance(other, QuotientElement):
            return self.ring == other.ring and self.c == other.c
        o = self._coords(other)
        return o is not None and o == self.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def as_poly(self) -> UniPoly:
        return UniPoly(self.ring.base, self.c)

    def is_base(self) -> bool:
        return not any(self.c[1:])

    def base_value(self):
        if not self.is_base():
            raise ValueError(f"{self} does not lie in the base field")
        return self.c[0]

    def __repr__(self):
        return f"[{self.as_poly().format()}]"

    __str__ = __repr__


class QuotientField(Domain):
    """K[x]/(f) with f monic irreducible over K (irreducibility is the caller's claim)."""

    is_field = True

    def __init__(self, modulus: UniPoly, var_name="x"):
        if modulus.degree() < 1:
            raise ValueError("modulus must have positive degree")
        self.modulus = modulus.monic()
        self.base = modulus.domain
        self.n = self.modulus.degree()
        self.var_name = var_name
        base = self.base
        self.characteristic = getattr(base, "characteristic", 0)
        if hasattr(base, "order"):
            self.order = base.order ** self.n
        self.zero = QuotientElement(self, (base.zero,) * self.n)
        self.one = self._embed_base(base.one)
        self.gen = self.from_poly(UniPoly.x(base))
        # x^(n+i) reduced, as coordinate rows
        norm = base.normalize
        tail = [norm(-c) for c in self.modulus.coeffs[:self.n]]
        red, cur = [], tail
        for _ in range(max(self.n - 1, 0)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [base.zero] + list(cur[:-1])
            cur = [norm(a + top * t) for a, t in zip(cur, tail)]
        self._red = red
        self.descriptor = f"{base.descriptor}[{var_name}]/({self.modulus.format(var_name)})"

    def _embed_base(self, c):
        return QuotientElement(self, (self.base.normalize(c),) + (self.base.zero,) * (self.n - 1))

    def _mul(self, a, b):
        base = self.base
        n = self.n
        prod_ = [base.zero] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod_[i + j] = prod_[i + j] + x * y
        out = prod_[:n]
        for i, c in enumerate(prod_[n:]):
            if c:
                row = self._red[i]
                out = [o + c * r for o, r in zip(out, row)]
        norm = base.normalize
        return tuple(norm(v) for v in out)

    def from_poly(self, p: UniPoly) -> QuotientElement:
        r = p % self.modulus
        coords = list(r.coeffs) + [self.base.zero] * (self.n - len(r.coeffs))
        return QuotientElement(self, tuple(coords))

    def __call__(self, value):
        return self.normalize(value)

    def normalize(self, c):
        if isinstance(c, QuotientElement):
            if c.ring != self:
                raise ValueError(f"{c} does not belong to {self}")
            return c
        if isinstance(c, UniPoly):
            return self.from_poly(c)
        return self._embed_base(c)

    def inv(self, c):
        c = self.normalize(c)
        if not c:
            raise ZeroDivisionError(f"division by zero in {self}")
        # extended Euclid on (c, f)
        a, b = self.modulus, c.as_poly()
        s0, s1 = UniPoly(self.base, []), UniPoly(self.base, [1])
        while b.degree() > 0:
            q, r = a.divmod(b)
            a, b = b, r
            s0, s1 = s1, s0 - q * s1
        if not b:
            raise ZeroDivisionError(f"{c} is not invertible modulo {self.modulus}")
        return self.from_poly(s1 * self.base.inv(b.lc()))

    def elements(self):
        """All elements in lexicographic order of (c_{n-1}, ..., c_0)."""
        base_elems = list(self.base.elements())
        for digits in itertools.product(base_elems, repeat=self.n):
            yield QuotientElement(self, tuple(reversed(digits)))

    def random_element(self, rng):
        return QuotientElement(self, tuple(self.base.random_element(rng) for _ in range(self.n)))

    def format_coef(self, c) -> str:
        return "(" + c.as_poly().format(self.var_name) + ")"

    # -- linear algebra over K -------------------------------------------
    def multiplication_matrix(self, alpha) -> list:
        """Matrix of y -> alpha*y in the power basis (columns are images)."""
        alpha = self.normalize(alpha)
        cols = []
        cur = alpha
        for _ in range(self.n):
            cols.append(cur.c)
            cur = cur * self.gen
        return [[cols[j][i] for j in range(self.n)] for i in range(self.n)]

    def charpoly(self, alpha) -> UniPoly:
        return charpoly(self.multiplication_matrix(alpha), self.base)

    def trace(self, alpha):
        m = self.multiplication_matrix(alpha)
        return self.base.normalize(sum((m[i][i] for i in range(self.n)), self.base.zero))

    def __eq__(self, other):
        return isinstance(other, QuotientField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("K[x]/f", self.modulus))
