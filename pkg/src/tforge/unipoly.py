"""Dense univariate polynomials over a coefficient domain.

Coefficients are stored low to high; the zero polynomial has no
coefficients.  Division, gcd and resultants require a field.
"""

from __future__ import annotations

from fractions import Fraction


class UniPoly:
    __slots__ = ("domain", "coeffs")

    def __init__(self, domain, coeffs=()):
        norm = domain.normalize
        c = [norm(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.domain = domain
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, domain, coeffs):
        obj = cls.__new__(cls)
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        obj.domain = domain
        obj.coeffs = tuple(c)
        return obj

    @classmethod
    def x(cls, domain):
        return cls(domain, [0, 1])

    @classmethod
    def const(cls, domain, c):
        return cls(domain, [c])

    @classmethod
    def from_roots(cls, domain, roots):
        out = cls(domain, [1])
        for r in roots:
            out = out * cls(domain, [-r, 1])
        return out

    # -- basic queries ---------------------------------------------------
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.domain.one

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.domain.zero

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.domain == other.domain and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == UniPoly(self.domain, [other])
        return NotImplemented

    def __hash__(self):
        return hash((self.domain, self.coeffs))

    def __repr__(self):
        return f"UniPoly({self.domain}, {self.format()})"

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.domain != self.domain:
                raise ValueError(f"domain mismatch: {self.domain} vs {other.domain}")
            return other
        return UniPoly(self.domain, [other])

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        norm = self.domain.normalize
        out = list(a)
        for i, c in enumerate(b):
            out[i] = norm(out[i] + c)
        return UniPoly._raw(self.domain, out)

    __radd__ = __add__

    def __neg__(self):
        norm = self.domain.normalize
        return UniPoly._raw(self.domain, [norm(-c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = self.domain.convert(other)
            norm = self.domain.normalize
            return UniPoly._raw(self.domain, [norm(c * x) for x in self.coeffs])
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw(self.domain, [])
        zero = self.domain.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        norm = self.domain.normalize
        return UniPoly._raw(self.domain, [norm(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly(self.domain, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divmod(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        dom = self.domain
        norm = dom.normalize
        rem = list(self.coeffs)
        db = other.degree()
        inv_lc = dom.inv(other.lc())
        b = other.coeffs
        if len(rem) - 1 < db:
            return UniPoly._raw(dom, []), self
        quot = [dom.zero] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = norm(c * inv_lc)
            quot[i - db] = q
            for j in range(db + 1):
                rem[i - db + j] = norm(rem[i - db + j] - q * b[j])
        return UniPoly._raw(dom, quot), UniPoly._raw(dom, rem[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"inexact division, remainder {r.format()}")
        return q

    def monic(self):
        if not self.coeffs:
            return self
        return self * self.domain.inv(self.lc())

    def derivative(self):
        norm = self.domain.normalize
        return UniPoly._raw(self.domain, [norm(i * c) for i, c in enumerate(self.coeffs) if i])

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a domain element or any ring value."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.domain.zero
        if isinstance(acc, (int, Fraction)):
            return self.domain.normalize(acc)
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        out = UniPoly(self.domain, [])
        for c in reversed(self.coeffs):
            out = out * other + c
        return out

    def scale_variable(self, lam):
        """Return ``self(lam * x)``."""
        norm = self.domain.normalize
        out, pw = [], self.domain.one
        for c in self.coeffs:
            out.append(norm(c * pw))
            pw = norm(pw * lam)
        return UniPoly._raw(self.domain, out)

    def powmod(self, e: int, mod: "UniPoly") -> "UniPoly":
        result = UniPoly(self.domain, [1]) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            e >>= 1
            if e:
                base = (base * base) % mod
        return result

    def gcd(self, other):
        a, b = self, self._coerce(other)
        while b:
            a, b = b, a % b
        return a.monic()

    def is_squarefree(self) -> bool:
        """``gcd(f, f') == 1``; a vanishing derivative counts as inseparable."""
        d = self.derivative()
        if not d:
            return self.degree() <= 0
        return self.gcd(d).degree() == 0

    def to_multipoly(self, var_name="x"):
        from .polyring import MultiPoly

        return MultiPoly.from_dict(
            self.domain, 1, {(i,): c for i, c in enumerate(self.coeffs)}, [var_name]
        )

    @classmethod
    def from_multipoly(cls, p):
        if p.nvars != 1:
            raise ValueError("expected a univariate polynomial")
        deg = p.degree()
        c = [p.domain.zero] * (deg + 1)
        for (e,), v in p.terms():
            c[e] = v
        return cls(p.domain, c)

    @classmethod
    def parse(cls, text, domain, var_name="x"):
        from .polyring import parse_poly

        return cls.from_multipoly(parse_poly(text, domain, [var_name]))

    def format(self, var_name="x") -> str:
        from .polyring import format_poly

        return format_poly(self.to_multipoly(var_name))

    def __str__(self):
        return self.format()


def resultant(f: UniPoly, g: UniPoly):
    """Resultant of two polynomials over a field by the Euclidean algorithm."""
    dom = f.domain
    norm = dom.normalize
    if not f or not g:
        return dom.zero
    res = dom.one
    while True:
        m, n = f.degree(), g.degree()
        if n == 0:
            return norm(res * g.lc() ** m)
        r = f % g
        if not r:
            return dom.zero
        # Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r)
        sign = -1 if (m * n) % 2 else 1
        res = norm(res * sign * g.lc() ** (m - r.degree()))
        f, g = g, r


def interpolate(domain, xs, ys) -> UniPoly:
    """Lagrange interpolation through distinct nodes."""
    out = UniPoly(domain, [])
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        num = UniPoly(domain, [1])
        den = domain.one
        for j, xj in enumerate(xs):
            if j != i:
                num = num * UniPoly(domain, [-xj, 1])
                den = domain.normalize(den * (xi - xj))
        out = out + num * domain.normalize(yi * domain.inv(den))
    return out


def charpoly(matrix, domain) -> UniPoly:
    """Characteristic polynomial det(X*I - M) over a field.

    Reduces to upper Hessenberg form by similarity transforms and then runs
    the standard Hessenberg recurrence.
    """
    n = len(matrix)
    norm = domain.normalize
    h = [[norm(v) for v in row] for row in matrix]
    for m in range(1, n - 1):
        piv = None
        for i in range(m, n):
            if h[i][m - 1]:
                piv = i
                break
        if piv is None:
            continue
        if piv != m:
            h[m], h[piv] = h[piv], h[m]
            for row in h:
                row[m], row[piv] = row[piv], row[m]
        inv = domain.inv(h[m][m - 1])
        for i in range(m + 1, n):
            u = norm(h[i][m - 1] * inv)
            if not u:
                continue
            for j in range(n):
                h[i][j] = norm(h[i][j] - u * h[m][j])
            for row in h:
                row[m] = norm(row[m] + u * row[i])
    polys = [UniPoly(domain, [1])]
    X = UniPoly.x(domain)
    for k in range(n):
        p = (X - h[k][k]) * polys[k]
        prod = domain.one
        for i in range(k - 1, -1, -1):
            prod = norm(prod * h[i + 1][i])
            if not prod:
                break
            p = p - polys[i] * norm(prod * h[i][k])
        polys.append(p)
    return polys[n]


def rational_roots(f: UniPoly):
    """Rational roots of a polynomial over Q (rational root test)."""
    from math import isqrt, lcm

    from .domains import QQ

    if f.domain != QQ or not f:
        raise ValueError("expected a nonzero polynomial over Q")
    den = lcm(*(Fraction(c).denominator for c in f.coeffs))
    ints = [int(c * den) for c in f.coeffs]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)
    if len(ints) <= 1:
        return roots

    def divisors(n):
        n = abs(n)
        small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
        return sorted(set(small + [n // d for d in small]))

    g = UniPoly(QQ, ints)
    for p in divisors(ints[0]):
        for q in divisors(ints[-1]):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if r not in roots and g(r) == 0:
                    roots.append(r)
    return roots
