"""Coefficient domains: the integers, the rationals and prime fields.

Extension fields live in :mod:`tforge.gf` and implement the same small
protocol.  Domain elements are plain Python values (``int`` for ZZ and
GF(p), ``Fraction`` for QQ) so that polynomial kernels can use the native
operators and call :meth:`normalize` once at the end of a reduction.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2


def is_prime(n: int) -> bool:
    """Primality via GMP (trial division then BPSW; exact below 2^64)."""
    return n >= 2 and bool(gmpy2.is_prime(n))


def prime_power(q: int):
    """Return ``(p, k)`` with ``q == p**k`` or ``None``."""
    if q < 2:
        return None
    for k in range(q.bit_length(), 0, -1):
        root, exact = gmpy2.iroot(q, k)
        if exact and is_prime(int(root)):
            return int(root), k
    return None


class Domain:
    """Protocol shared by every coefficient domain."""

    is_field = False
    characteristic = 0
    zero = 0
    one = 1

    def normalize(self, c):
        raise NotImplementedError

    def from_int(self, n: int):
        return self.normalize(n)

    def convert(self, c):
        """Coerce an int, Fraction or native element into this domain."""
        return self.normalize(c)

    def inv(self, c):
        raise ZeroDivisionError(f"{self} is not a field")

    def div(self, a, b):
        return self.normalize(a * self.inv(b))

    def format_coef(self, c) -> str:
        return str(c)

    def coef_to_json(self, c):
        return str(c)

    def coef_from_json(self, v):
        return self.convert(int(v))

    def __repr__(self):
        return self.descriptor


class IntegerRing(Domain):
    descriptor = "Z"

    def normalize(self, c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"{c} is not an integer")
            return c.numerator
        if not isinstance(c, int):
            raise TypeError(f"cannot coerce {c!r} into Z")
        return c

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")


class RationalField(Domain):
    descriptor = "Q"
    is_field = True

    def normalize(self, c):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, int):
            return Fraction(c)
        raise TypeError(f"cannot coerce {c!r} into Q")

    def inv(self, c):
        if c == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / Fraction(c)

    def coef_from_json(self, v):
        return Fraction(v)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Domain):
    """GF(p) with elements stored as ints in ``range(p)``."""

    is_field = True
    degree = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.descriptor = f"GF({p})"

    def normalize(self, c):
        if isinstance(c, int):
            return c % self.p
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {c!r} into {self}")

    def inv(self, c):
        if c % self.p == 0:
            raise ZeroDivisionError(f"division by zero in {self}")
        return pow(c, -1, self.p)

    def elements(self):
        return range(self.p)

    def random_element(self, rng):
        return rng.randrange(self.p)

    def frobenius(self, c):
        return c

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


ZZ = IntegerRing()
QQ = RationalField()

_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def parse_field(text: str):
    """Parse a field descriptor.

    Accepted forms: ``Q``, ``Z``, ``GF(p)``, ``GF(q)`` for a prime power q
    (default modulus), and ``GF(p^k;modulus=<poly in t>)``.
    """
    from . import gf

    s = text.replace(" ", "")
    if s in ("Q", "QQ"):
        return QQ
    if s in ("Z", "ZZ"):
        return ZZ
    if not (s.startswith("GF(") and s.endswith(")")):
        raise ValueError(f"unknown field descriptor {text!r}")
    body = s[3:-1]
    modulus = None
    if ";" in body:
        body, opt = body.split(";", 1)
        if not opt.startswith("modulus="):
            raise ValueError(f"unknown field option {opt!r}")
        modulus = opt[len("modulus="):]
    if "^" in body:
        p, k = (int(t) for t in body.split("^"))
    else:
        pk = prime_power(int(body))
        if pk is None:
            raise ValueError(f"{body} is not a prime power")
        p, k = pk
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k == 1 and modulus is None:
        return GF(p)
    return gf.extension_field(p, k, modulus)
