"""Finite fields GF(p^k) and the finite-field facts used by the normalizers.

An extension field is a single step ``GF(p)[t]/(modulus)``; elements are
coordinate tuples over GF(p) in the power basis of the class of ``t``.
"""

from __future__ import annotations

import itertools
import random
import re
from functools import lru_cache
from math import prod

from .domains import GF, Domain, PrimeField, is_prime
from .unipoly import UniPoly

# Moduli fixed by the table of irreducible quintics (low-to-high coefficients).
TABLE_MODULI = {
    (2, 3): (1, 0, 1, 1),  # b^3 + b^2 + 1
    (2, 5): (1, 0, 1, 1, 1, 1),  # c^5 + c^4 + c^3 + c^2 + 1
}
_GEN_NAMES = {(2, 2): "a", (2, 3): "b", (2, 5): "c"}


class FqElement:
    __slots__ = ("field", "c")

    def __init__(self, field, coords):
        self.field = field
        self.c = coords

    def _other(self, other):
        if isinstance(other, FqElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other.c
        if isinstance(other, int):
            return self.field._int_coords(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FqElement(self.field, tuple((x + y) % p for x, y in zip(self.c, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FqElement(self.field, tuple((x - y) % p for x, y in zip(self.c, o)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.field.p
        return FqElement(self.field, tuple(-x % p for x in self.c))

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.field.p
            return FqElement(self.field, tuple(x * other % p for x in self.c))
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FqElement(self.field, self.field._mul(self.c, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self):
        if not any(self.c):
            raise ZeroDivisionError(f"division by zero in {self.field}")
        return self ** (self.field.order - 2)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.c == o

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def frobenius(self, times=1):
        return self ** (self.field.p ** times)

    def trace(self):
        """Absolute trace down to GF(p), returned as an int."""
        acc, x = self, self
        for _ in range(self.field.k - 1):
            x = x ** self.field.p
            acc = acc + x
        return acc.c[0]

    def is_prime_field(self):
        return not any(self.c[1:])

    def __repr__(self):
        return self.field.format_coef(self)

    def __str__(self):
        return self.field.format_coef(self)


class FqField(Domain):
    """GF(p^k) = GF(p)[t]/(modulus) with a named generator."""

    is_field = True

    def __init__(self, p, modulus, gen_name="a", check=True):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        mod = tuple(int(c) % p for c in modulus)
        if not mod or mod[-1] != 1:
            raise ValueError("modulus must be monic")
        self.p = p
        self.k = len(mod) - 1
        self.modulus = mod
        self.characteristic = p
        self.order = p ** self.k
        self.degree = self.k
        self.gen_name = gen_name
        if check and not is_irreducible(UniPoly(GF(p), mod)):
            raise ValueError(f"modulus {mod} is not irreducible over GF({p})")
        k = self.k
        # reduction rows: t^(k+i) expressed in the power basis
        red, cur = [], [(-c) % p for c in mod[:k]]
        for _ in range(max(k - 1, 0)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            cur = [(x - top * m) % p for x, m in zip(cur, mod[:k])]
        self._red = red
        self.zero = FqElement(self, (0,) * k)
        self.one = self._from_int(1)
        self.gen = FqElement(self, tuple(1 if i == 1 else 0 for i in range(k))) if k > 1 \
            else FqElement(self, ((-mod[0]) % p,))
        mod_text = UniPoly(GF(p), mod).format(gen_name)
        self.descriptor = f"GF({p}^{k};modulus={mod_text})"

    # -- element construction --------------------------------------------
    def _int_coords(self, n):
        return (n % self.p,) + (0,) * (self.k - 1)

    def _from_int(self, n):
        return FqElement(self, self._int_coords(n))

    def __call__(self, value):
        if isinstance(value, FqElement):
            return self.normalize(value)
        if isinstance(value, int):
            return self._from_int(value)
        coords = [int(v) % self.p for v in value]
        coords += [0] * (self.k - len(coords))
        if len(coords) > self.k:
            return sum((c * self.gen ** i for i, c in enumerate(coords)), self.zero)
        return FqElement(self, tuple(coords))

    def _mul(self, a, b):
        p, k = self.p, self.k
        prod_ = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod_[i + j] += x * y
        out = prod_[:k]
        for i, c in enumerate(prod_[k:]):
            if c:
                row = self._red[i]
                for j in range(k):
                    out[j] += c * row[j]
        return tuple(v % p for v in out)

    # -- Domain protocol -------------------------------------------------
    def normalize(self, c):
        if isinstance(c, FqElement):
            if c.field is self or c.field == self:
                return c if c.field is self else FqElement(self, c.c)
            raise ValueError(f"{c} does not belong to {self}")
        if isinstance(c, int):
            return self._from_int(c)
        from fractions import Fraction

        if isinstance(c, Fraction):
            return self._from_int(c.numerator) * self._from_int(c.denominator).inverse()
        raise TypeError(f"cannot coerce {c!r} into {self}")

    def inv(self, c):
        return self.normalize(c).inverse()

    def elements(self):
        """All elements, lexicographic in (c_{k-1}, ..., c_0)."""
        for digits in itertools.product(range(self.p), repeat=self.k):
            yield FqElement(self, tuple(reversed(digits)))

    def format_coef(self, c) -> str:
        terms = []
        for i in range(self.k - 1, -1, -1):
            v = c.c[i]
            if not v:
                continue
            if i == 0:
                terms.append(str(v))
            else:
                mono = self.gen_name if i == 1 else f"{self.gen_name}^{i}"
                terms.append(mono if v == 1 else f"{v}*{mono}")
        return " + ".join(terms) if terms else "0"

    def coef_to_json(self, c):
        return [str(v) for v in c.c]

    def coef_from_json(self, v):
        if isinstance(v, list):
            return self([int(x) for x in v])
        return self._from_int(int(v))

    def random_element(self, rng):
        return FqElement(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def frobenius(self, c):
        return c ** self.p

    def prime_subfield_element(self, c):
        if not c.is_prime_field():
            raise ValueError(f"{c} is not in GF({self.p})")
        return c.c[0]

    def __eq__(self, other):
        return isinstance(other, FqField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash(("GFq", self.p, self.modulus))


def lex_least_irreducible(p: int, k: int) -> tuple:
    """Monic irreducible of degree k, least in lex order of (c_{k-1}, ..., c_0)."""
    F = GF(p)
    for n in range(p ** k):
        coeffs = []
        for _ in range(k):
            coeffs.append(n % p)
            n //= p
        f = UniPoly(F, coeffs + [1])
        if is_irreducible(f):
            return tuple(coeffs + [1])
    raise AssertionError("unreachable: irreducibles exist in every degree")


@lru_cache(maxsize=None)
def _extension(p, k, modulus, gen_name):
    return FqField(p, modulus, gen_name)


def extension_field(p: int, k: int, modulus=None, gen_name=None):
    """GF(p^k) with the table modulus, an explicit one, or the lex-least default.

    ``modulus`` may be a coefficient sequence (low to high) or polynomial text
    in the generator name.
    """
    if gen_name is None:
        gen_name = _GEN_NAMES.get((p, k), "a")
    if isinstance(modulus, str):
        from .polyring import parse_poly

        names = sorted(set(re.findall(r"[a-zA-Z][a-zA-Z0-9]*", modulus))) or [gen_name]
        if len(names) != 1:
            raise ValueError(f"modulus {modulus!r} must use a single variable")
        gen_name = names[0]
        mp = parse_poly(modulus, GF(p), [gen_name])
        modulus = tuple(UniPoly.from_multipoly(mp).coeffs)
    elif modulus is None:
        modulus = TABLE_MODULI.get((p, k)) or lex_least_irreducible(p, k)
    else:
        modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) - 1 != k:
        raise ValueError(f"modulus degree {len(modulus) - 1} does not match k={k}")
    return _extension(p, k, tuple(modulus), gen_name)


def field_of_order(q: int):
    from .domains import prime_power

    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = pk
    return GF(p) if k == 1 else extension_field(p, k)


# ---------------------------------------------------------------------------
# polynomials over finite fields
# ---------------------------------------------------------------------------

def first_irreducible(K, n: int) -> UniPoly:
    """Monic irreducible of degree n over a finite field K, least in lex order
    of (c_{n-1}, ..., c_0) with the field's own element order."""
    elems = list(K.elements())
    for digits in itertools.product(elems, repeat=n):
        f = UniPoly(K, list(reversed(digits)) + [K.one])
        if digits[-1] and is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")


def random_irreducible(K, n: int, rng) -> UniPoly:
    """A monic irreducible of degree n drawn by rejection sampling with ``rng``.

    About one draw in n succeeds, so this is quick for the small degrees used here.
    """
    while True:
        f = UniPoly(K, [K.random_element(rng) for _ in range(n)] + [K.one])
        if is_irreducible(f):
            return f


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _xpow(f: UniPoly, e: int) -> UniPoly:
    return UniPoly.x(f.domain).powmod(e, f)


def is_irreducible(f: UniPoly) -> bool:
    """Rabin's test: X^(q^n) = X mod f and gcd(X^(q^(n/l)) - X, f) = 1."""
    n = f.degree()
    if n < 1:
        return False
    if n == 1:
        return True
    q = f.domain.order
    f = f.monic()
    x = UniPoly.x(f.domain)
    # iterated q-th powers keep exponents small
    powers = {0: x % f}
    cur = x % f
    for i in range(1, n + 1):
        cur = cur.powmod(q, f)
        powers[i] = cur
    if powers[n] != x % f:
        return False
    for ell in _prime_factors(n):
        if (powers[n // ell] - x).gcd(f).degree() != 0:
            return False
    return True


def is_irreducible_bruteforce(f: UniPoly) -> bool:
    """Trial division by every monic polynomial of degree <= n/2."""
    n = f.degree()
    if n < 1:
        return False
    elems = list(f.domain.elements())
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(elems, repeat=d):
            g = UniPoly(f.domain, list(tail) + [1])
            if not f % g:
                return False
    return True


def distinct_degree_factor(f: UniPoly):
    """Pairs ``(d, g_d)`` where g_d is the product of the degree-d factors."""
    q = f.domain.order
    f = f.monic()
    out = []
    x = UniPoly.x(f.domain)
    h = x % f
    d = 0
    while f.degree() >= 2 * (d + 1):
        d += 1
        h = h.powmod(q, f)
        g = (h - x).gcd(f)
        if g.degree() > 0:
            out.append((d, g))
            f = f // g
            h = h % f
    if f.degree() > 0:
        out.append((f.degree(), f))
    return out


def equal_degree_split(f: UniPoly, d: int, rng=None):
    """Split a squarefree product of degree-d irreducibles (Cantor-Zassenhaus)."""
    f = f.monic()
    if f.degree() == d:
        return [f]
    dom = f.domain
    q = dom.order
    rng = rng or random.Random(0)
    while True:
        coeffs = [dom.random_element(rng) for _ in range(f.degree())]
        a = UniPoly(dom, coeffs)
        if a.degree() < 1:
            continue
        if q % 2:
            b = a.powmod((q ** d - 1) // 2, f) - 1
        else:
            # absolute trace map to GF(2) for characteristic two
            k = q.bit_length() - 1
            t, cur = a % f, a % f
            for _ in range(k * d - 1):
                cur = (cur * cur) % f
                t = t + cur
            b = t
        g = b.gcd(f)
        if 0 < g.degree() < f.degree():
            return equal_degree_split(g, d, rng) + equal_degree_split(f // g, d, rng)


def factor_squarefree(f: UniPoly, rng=None):
    """Monic irreducible factors of a squarefree polynomial over GF(q)."""
    out = []
    for d, g in distinct_degree_factor(f):
        out.extend(equal_degree_split(g, d, rng))
    return out


def roots(f: UniPoly, rng=None):
    """Distinct roots in the coefficient field."""
    f = f.monic()
    q = f.domain.order
    x = UniPoly.x(f.domain)
    g = (x.powmod(q, f) - x).gcd(f) if f.degree() > 0 else f
    if g.degree() <= 0:
        return []
    norm = f.domain.normalize
    return [norm(-h[0]) for h in equal_degree_split(g, 1, rng)]


def embed_subfield(small, big):
    """An injective homomorphism GF(small) -> GF(big) as a callable.

    The image of the small field's generator is a root of its modulus found
    by root finding in the big field.
    """
    if isinstance(small, PrimeField):
        return lambda c: big.normalize(int(c))
    if big.k % small.k:
        raise ValueError(f"{small} is not a subfield of {big}")
    mod = UniPoly(big, [big._from_int(c) for c in small.modulus])
    r = min(roots(mod), key=lambda e: e.c[::-1])
    powers = [big.one]
    for _ in range(small.k - 1):
        powers.append(powers[-1] * r)

    def embed(c):
        c = small.normalize(c)
        return sum((v * powers[i] for i, v in enumerate(c.c) if v), big.zero)

    return embed


def _pth_root(f: UniPoly) -> UniPoly:
    """g with g^p = f, for f whose exponents are all multiples of p."""
    dom = f.domain
    p = dom.characteristic
    q = dom.order
    root = (lambda c: c) if q == p else (lambda c: c ** (q // p))
    return UniPoly(dom, [root(f[i]) for i in range(0, f.degree() + 1, p)])


def squarefree_decomposition(f: UniPoly):
    """Pairs (g, m) with f = prod g^m, g squarefree and pairwise coprime."""
    f = f.monic()
    if f.degree() < 1:
        return []
    p = f.domain.characteristic
    out = {}
    d = f.derivative()
    if not d:
        for g, m in squarefree_decomposition(_pth_root(f)):
            out[m * p] = g
        return sorted(((g, m) for m, g in out.items()), key=lambda t: t[1])
    c = f.gcd(d)
    w = f // c
    i = 1
    while w.degree() > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree() > 0:
            out[i] = z
        i += 1
        w = y
        c = c // y
    result = [(g, m) for m, g in out.items()]
    if c.degree() > 0:
        for g, m in squarefree_decomposition(_pth_root(c)):
            result.append((g, m * p))
    merged = {}
    for g, m in result:
        merged[m] = merged[m] * g if m in merged else g
    return sorted(((g, m) for m, g in merged.items()), key=lambda t: t[1])


def factor(f: UniPoly, rng=None):
    """Monic irreducible factors with multiplicities over GF(q)."""
    out = []
    for g, m in squarefree_decomposition(f):
        for h in factor_squarefree(g, rng):
            out.append((h, m))
    return sorted(out, key=lambda t: (t[0].degree(), t[1]))


def gaussian_rank(rows, dom):
    """Rank of a matrix over a field, with a basis of its null space (column vectors)."""
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    norm = dom.normalize
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = dom.inv(m[r][c])
        m[r] = [norm(v * inv) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                t = m[i][c]
                m[i] = [norm(a - t * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    null = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        v = [dom.zero] * ncols
        v[fc] = dom.one
        for row, pc in enumerate(pivots):
            v[pc] = norm(-m[row][fc])
        null.append(v)
    return r, null


# ---------------------------------------------------------------------------
# minimal polynomials
# ---------------------------------------------------------------------------

def _coefficient_map(big, K):
    """Map elements of ``big`` lying in the subfield K back to K's representation."""
    from .quotient import QuotientField

    if isinstance(big, QuotientField) and (K is None or K == big.base):
        return big.base, lambda c: c.base_value()
    if isinstance(big, FqField):
        if K is None or isinstance(K, PrimeField):
            return GF(big.p), big.prime_subfield_element
        emb = embed_subfield(K, big)
        back = {emb(e): e for e in K.elements()}
        return K, lambda c: back[c]
    if isinstance(big, PrimeField) and (K is None or K == big):
        return big, lambda c: c
    raise ValueError(f"cannot view {K} as a subfield of {big}")


def minimal_polynomial(alpha, K=None) -> UniPoly:
    """Minimal polynomial of ``alpha`` over the subfield K, from its Frobenius orbit.

    ``alpha`` lies in an ``FqField`` (K defaults to the prime field) or a
    ``QuotientField`` over a finite field (K defaults to its base).
    """
    big = alpha.field if isinstance(alpha, FqElement) else getattr(alpha, "ring", None)
    if big is None:
        raise TypeError(f"{alpha!r} is not an extension-field element")
    K, to_K = _coefficient_map(big, K)
    q = K.order
    orbit = [alpha]
    cur = alpha ** q
    while cur != alpha:
        orbit.append(cur)
        cur = cur ** q
    poly = UniPoly(big, [big.one])
    for r in orbit:
        poly = poly * UniPoly(big, [-r, big.one])
    return UniPoly(K, [to_K(c) for c in poly.coeffs])


# ---------------------------------------------------------------------------
# the table of irreducible quintics
# ---------------------------------------------------------------------------

# (q, polynomial text over GF(q)); generator names follow TABLE_MODULI.
QUINTIC_TABLE = (
    (4, "x^5 + a*x + a"),
    (8, "x^5 + b*x^3 + b*x + b"),
    (32, "x^5 + c*x^3 + x + 1"),
    (3, "x^5 - x - 1"),
    (5, "x^5 - x - 1"),
    (7, "x^5 - 2*x - 2"),
    (11, "x^5 - x - 1"),
    (13, "x^5 - x - 1"),
    (17, "x^5 + 4*x + 4"),
    (19, "x^5 + 3*x + 3"),
    (23, "x^5 + 2*x + 2"),
    (29, "x^5 - 4*x - 4"),
    (31, "x^5 + 3*x + 3"),
    (37, "x^5 - 3*x - 3"),
)
EXCEPTION_GF2 = (2, "x^5 + x^3 + 1")


def _table_poly(q, text, substitute=None):
    from .polyring import parse_poly

    K = field_of_order(q)
    names = ["x"]
    if substitute is not None:
        text = text.replace(K.gen_name, f"({substitute})")
    return UniPoly.from_multipoly(parse_poly(text, K, names))


def quintic_shape_ok(f: UniPoly) -> bool:
    """x^5 + b x^3 + c x + c with b possibly zero."""
    return f.is_monic() and f.degree() == 5 and not f[4] and not f[2] and f[1] == f[0]


def quintic_table_entry(q: int):
    """(field, polynomial) for the tabulated quintic usable over GF(q), q <= 40.

    Fields missing from the table inherit the entry of a subfield of index
    prime to 5, where an irreducible quintic stays irreducible.
    """
    if q == 2:
        return GF(2), _table_poly(*EXCEPTION_GF2)
    table = dict(QUINTIC_TABLE)
    from .domains import prime_power

    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = pk
    for j in sorted((j for j in range(1, k + 1) if k % j == 0), reverse=True):
        sub = p ** j
        if sub in table and (k // j) % 5:
            return field_of_order(sub), _table_poly(sub, table[sub])
    return None


def verify_quintic_table(entries=None, include_exception=True) -> dict:
    """Irreducibility and shape of every tabulated quintic.

    ``entries`` overrides the table (used to check that corrupted entries are
    reported).  For GF(4) both elements of GF(4) \\ GF(2) are tried.
    """
    entries = QUINTIC_TABLE if entries is None else entries
    rows = []
    for q, text in entries:
        K = field_of_order(q)
        variants = [None]
        if q == 4:
            variants = [None, f"{K.gen_name} + 1"]
        irreducible, shape = True, True
        for sub in variants:
            f = _table_poly(q, text, sub)
            irreducible &= is_irreducible(f)
            shape &= quintic_shape_ok(f)
        rows.append({"field": K.descriptor, "polynomial": text,
                     "irreducible": bool(irreducible), "shape_ok": bool(shape)})
    report = {"entries": rows,
              "passed": sum(r["irreducible"] and r["shape_ok"] for r in rows),
              "total": len(rows)}
    if include_exception:
        q, text = EXCEPTION_GF2
        f = _table_poly(q, text)
        report["exception"] = {"field": "GF(2)", "polynomial": text,
                               "irreducible": is_irreducible(f)}
    report["ok"] = report["passed"] == report["total"] and (
        not include_exception or report["exception"]["irreducible"])
    return report


# ---------------------------------------------------------------------------
# span of the proper subfields
# ---------------------------------------------------------------------------

def totient_formula(n: int) -> int:
    """(n / (l_1 ... l_k)) (l_1 - 1) ... (l_k - 1) over the primes l_i dividing n."""
    ls = _prime_factors(n)
    return n // prod(ls) * prod(l - 1 for l in ls)


SPAN_GUARD = 1 << 24


def subfield_span_report(p: int, n: int) -> dict:
    """Codimension of the sum of the maximal proper subfields of GF(p^n), by enumeration."""
    if not is_prime(p) or n < 2:
        raise ValueError("need a prime p and n >= 2")
    if p ** n > SPAN_GUARD:
        raise ValueError(f"GF({p}^{n}) exceeds the enumeration guard 2^24")
    L = extension_field(p, n)
    F = GF(p)
    q_sub = {ell: p ** (n // ell) for ell in _prime_factors(n)}
    members = {ell: [] for ell in q_sub}
    for x in L.elements():
        for ell, q in q_sub.items():
            if x ** q == x:
                members[ell].append(x.c)
    vectors = [v for vs in members.values() for v in vs]
    dim, _ = gaussian_rank(vectors, F)
    subfield_dims = {ell: _log(len(vs), p) for ell, vs in members.items()}
    report = {
        "p": p, "n": n,
        "subfield_dims": {str(n // ell): d for ell, d in subfield_dims.items()},
        "span_dim": dim,
        "codim": n - dim,
        "formula": totient_formula(n),
    }
    # averaging-operator cross-check: (1/l) sum_i F^(i n/l) projects onto the subfield
    proj = {}
    for ell in q_sub:
        if ell % p == 0:
            continue
        q = q_sub[ell]
        inv_l = pow(ell, -1, p)
        rows = []
        for i in range(n):
            e = L([1 if j == i else 0 for j in range(n)])
            acc, cur = L.zero, e
            for _ in range(ell):
                acc = acc + cur
                cur = cur ** q
            rows.append([(c * inv_l) % p for c in acc.c])
        rank, _ = gaussian_rank(rows, F)
        proj[str(n // ell)] = rank
    report["projection_ranks"] = proj
    report["ok"] = report["codim"] == report["formula"] and all(
        proj[str(n // ell)] == subfield_dims[ell] for ell in q_sub if str(n // ell) in proj)
    return report


def _log(count, p):
    """d with p^d == count."""
    d = 0
    while p ** d < count:
        d += 1
    return d


def subfield_span_codim(p: int, n: int) -> int:
    return subfield_span_report(p, n)["codim"]


# ---------------------------------------------------------------------------
# the vanishing bound
# ---------------------------------------------------------------------------

def vanishing_bound_witness(q: int, m: int, d: int) -> dict:
    """Exhaustive check of the vanishing bound for homogeneous forms of degree d.

    A form vanishing off a proper subspace W also vanishes off any hyperplane
    containing W, so it suffices to run over hyperplanes.  For each, the
    evaluation matrix (points off the hyperplane x monomials of degree d)
    has full column rank exactly when no nonzero form of degree d vanishes
    there.
    """
    if q > 9 or m > 2 or d > q or d < 1:
        raise ValueError("outside the exhaustive regime q <= 9, m <= 2, 1 <= d <= q")
    K = field_of_order(q)
    elems = list(K.elements())
    points = [pt for pt in itertools.product(elems, repeat=m + 1)]
    monos = [e for e in itertools.product(range(d + 1), repeat=m + 1) if sum(e) == d]
    # hyperplanes: nonzero linear forms with first nonzero coefficient 1
    forms = [c for c in itertools.product(elems, repeat=m + 1)
             if any(c) and next(v for v in c if v) == K.one]
    norm = K.normalize
    min_rank = len(monos)
    counterexample = None
    for lin in forms:
        off = [pt for pt in points
               if norm(sum((a * b for a, b in zip(lin, pt)), K.zero))]
        rows = []
        for pt in off:
            row = []
            for e in monos:
                v = K.one
                for x, k in zip(pt, e):
                    v = v * x ** k if k else v
                row.append(norm(v))
            rows.append(row)
        rank, null = gaussian_rank(rows, K)
        if rank < min_rank:
            min_rank = rank
        if null and counterexample is None:
            counterexample = {"hyperplane": [K.format_coef(norm(c)) for c in lin],
                              "form": _form_text(K, monos, null[0], m)}
    return {
        "q": q, "m": m, "d": d,
        "hyperplanes": len(forms),
        "monomials": len(monos),
        "min_rank": min_rank,
        "full_rank": min_rank == len(monos),
        "counterexample": counterexample,
        "bound_respected": counterexample is None or d >= q,
    }


def _form_text(K, monos, coeffs, m):
    from .polyring import MultiPoly, format_poly

    names = [f"y{i}" for i in range(m + 1)]
    return format_poly(MultiPoly(K, m + 1, dict(zip(monos, coeffs)), names))
