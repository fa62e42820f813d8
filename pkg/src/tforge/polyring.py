"""Sparse exact multivariate polynomials.

A :class:`MultiPoly` maps packed exponent vectors to nonzero coefficients.
Exponents are packed into one Python int, ``EXP_BITS`` bits per variable,
with x1 in the most significant field, so that monomial multiplication is
integer addition and the pure lexicographic order (x1 > x2 > ... > xn) is
integer order.

Large products over Z and GF(p) go through Kronecker substitution: both
factors are packed into big integers, multiplied with GMP and unpacked.  The
slot width comes from a rigorous coefficient bound, so the fast path is
bit-identical to schoolbook multiplication.
"""

from __future__ import annotations

import heapq
import json
import re
from fractions import Fraction

import gmpy2
import numpy as np

from .domains import QQ, ZZ, PrimeField

EXP_BITS = 16
EXP_MASK = (1 << EXP_BITS) - 1
MAX_EXP = EXP_MASK

# products with more term pairs than this use the Kronecker path
KRONECKER_THRESHOLD = 40_000


def pack(exps) -> int:
    key = 0
    for e in exps:
        if e < 0 or e > MAX_EXP:
            raise OverflowError(f"exponent {e} out of range")
        key = (key << EXP_BITS) | e
    return key


def unpack(key: int, n: int) -> tuple:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & EXP_MASK
        key >>= EXP_BITS
    return tuple(out)


def default_names(n: int):
    return [f"x{i + 1}" for i in range(n)]


class MultiPoly:
    """Immutable sparse polynomial in ``nvars`` variables over ``domain``."""

    __slots__ = ("domain", "nvars", "_t", "names", "_degs", "_emat")

    def __init__(self, domain, nvars, terms=None, names=None):
        self.domain = domain
        self.nvars = nvars
        self.names = list(names) if names is not None else default_names(nvars)
        if len(self.names) != nvars:
            raise ValueError("variable-name count does not match nvars")
        t = {}
        if terms:
            norm = domain.normalize
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, c in items:
                if len(exps) != nvars:
                    raise ValueError(f"monomial {exps} has wrong length for {nvars} variables")
                k = pack(exps)
                t[k] = t.get(k, domain.zero) + c
            t = {k: v for k, v in ((k, norm(v)) for k, v in t.items()) if v}
        self._t = t
        self._degs = None
        self._emat = None

    # -- construction helpers ---------------------------------------------
    @classmethod
    def _wrap(cls, domain, nvars, t, names):
        obj = cls.__new__(cls)
        obj.domain = domain
        obj.nvars = nvars
        obj._t = t
        obj.names = names
        obj._degs = None
        obj._emat = None
        return obj

    @classmethod
    def from_dict(cls, domain, nvars, terms, names=None):
        return cls(domain, nvars, terms, names)

    @classmethod
    def zero(cls, domain, nvars, names=None):
        return cls(domain, nvars, None, names)

    @classmethod
    def constant(cls, domain, nvars, c, names=None):
        return cls(domain, nvars, {(0,) * nvars: c}, names)

    @classmethod
    def var(cls, domain, nvars, i, names=None):
        """The variable with 0-based index ``i``."""
        e = [0] * nvars
        e[i] = 1
        return cls(domain, nvars, {tuple(e): 1}, names)

    @classmethod
    def gens(cls, domain, nvars, names=None):
        return [cls.var(domain, nvars, i, names) for i in range(nvars)]

    def _like(self, t):
        return MultiPoly._wrap(self.domain, self.nvars, t, self.names)

    def with_names(self, names):
        return MultiPoly._wrap(self.domain, self.nvars, self._t, list(names))

    # -- queries ------------------------------------------------------------
    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self):
        return not self._t

    def terms(self):
        """(exponent tuple, coefficient) pairs in decreasing lex order."""
        n = self.nvars
        for k in sorted(self._t, reverse=True):
            yield unpack(k, n), self._t[k]

    def coefficient(self, exps):
        return self._t.get(pack(exps), self.domain.zero)

    def packed_items(self):
        return self._t.items()

    def _degree_info(self):
        if self._degs is None:
            n = self.nvars
            tot_min, tot_max = None, -1
            per = [0] * n
            for k in self._t:
                e = unpack(k, n)
                s = sum(e)
                tot_max = max(tot_max, s)
                tot_min = s if tot_min is None else min(tot_min, s)
                for i, v in enumerate(e):
                    if v > per[i]:
                        per[i] = v
            self._degs = (tot_min, tot_max, tuple(per))
        return self._degs

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return self._degree_info()[1]

    def degree_in(self, i: int) -> int:
        return self._degree_info()[2][i] if self._t else -1

    def degrees(self):
        return self._degree_info()[2]

    def is_homogeneous(self) -> bool:
        lo, hi, _ = self._degree_info()
        return lo is None or lo == hi

    def leading_term(self):
        """Lex-greatest term as ``(exponents, coefficient)``."""
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        k = max(self._t)
        return unpack(k, self.nvars), self._t[k]

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self):
        return self._t.get(0, self.domain.zero)

    # -- comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (self.domain == other.domain and self.nvars == other.nvars
                    and self._t == other._t)
        if isinstance(other, (int, Fraction)):
            c = self.domain.convert(other)
            if not c:
                return not self._t
            return self._t == {0: c}
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._t.items())))

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other):
        if self.domain != other.domain:
            raise ValueError(f"domain mismatch: {self.domain} vs {other.domain}")
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) or getattr(other, "field", None) is not None:
            return MultiPoly.constant(self.domain, self.nvars, other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._like(_add(self._t, other._t, self.domain, 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._like(_add(self._t, other._t, self.domain, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        norm = self.domain.normalize
        return self._like({k: norm(-v) for k, v in self._t.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)) or getattr(other, "field", None) is not None:
                return self.scale(other)
            return NotImplemented
        self._check(other)
        return self._like(_mul(self, other))

    __rmul__ = __mul__

    def scale(self, c):
        c = self.domain.convert(c)
        if not c:
            return self._like({})
        norm = self.domain.normalize
        t = {}
        for k, v in self._t.items():
            w = norm(v * c)
            if w:
                t[k] = w
        return self._like(t)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.constant(self.domain, self.nvars, 1, self.names)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def mul_monomial(self, exps, c=1):
        shift = pack(exps)
        c = self.domain.convert(c)
        norm = self.domain.normalize
        return self._like({k + shift: norm(v * c) for k, v in self._t.items()})

    # -- evaluation and substitution -----------------------------------------
    def evaluate(self, point):
        """Exact value at ``point`` (domain elements or any ring values)."""
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        n = self.nvars
        cache = [dict() for _ in range(n)]
        total = None
        for k, c in self._t.items():
            e = unpack(k, n)
            term = c
            for i, ei in enumerate(e):
                if ei:
                    pw = cache[i].get(ei)
                    if pw is None:
                        pw = point[i] ** ei
                        cache[i][ei] = pw
                    term = term * pw
            total = term if total is None else total + term
        if total is None:
            return self.domain.zero
        if isinstance(total, (int, Fraction)):
            return self.domain.normalize(total)
        return total

    __call__ = evaluate

    def evaluate_mod(self, point, p: int) -> int:
        """Value of an integer polynomial at an integer point, reduced mod a prime p < 2^31.

        Vectorized with int64 arrays; the exponent matrix is built once per polynomial.
        """
        if p >= 1 << 31:
            return int(self.evaluate([int(v) for v in point])) % p
        if self._emat is None:
            keys = list(self._t)
            emat = np.array([unpack(k, self.nvars) for k in keys], dtype=np.int64)
            self._emat = (emat.reshape(len(keys), self.nvars), keys)
        emat, keys = self._emat
        if not keys:
            return 0
        coef = np.array([int(self._t[k]) % p for k in keys], dtype=np.int64)
        acc = coef
        for i in range(self.nvars):
            col = emat[:, i]
            top = int(col.max())
            table = np.empty(top + 1, dtype=np.int64)
            table[0] = 1
            v = int(point[i]) % p
            for e in range(1, top + 1):
                table[e] = table[e - 1] * v % p
            acc = acc * table[col] % p
        return int(acc.sum() % p)

    def substitute(self, assignments):
        """Replace variables (0-based index -> MultiPoly) simultaneously.

        Replacement polynomials may live in a different variable set; every
        variable that is not replaced must then be expressible there, so all
        replacements must share one ring and unreplaced variables are mapped
        to the same-index variable of that ring.
        """
        if not assignments:
            return self
        rings = {(q.domain, q.nvars) for q in assignments.values()}
        if len(rings) != 1:
            raise ValueError("replacement polynomials must share domain and nvars")
        dom, m = rings.pop()
        if dom != self.domain:
            raise ValueError(f"domain mismatch: {self.domain} vs {dom}")
        names = next(iter(assignments.values())).names
        images = []
        for i in range(self.nvars):
            if i in assignments:
                images.append(assignments[i])
            elif i < m:
                images.append(MultiPoly.var(dom, m, i, names))
            else:
                raise ValueError(f"variable {i} has no image in the target ring")
        return compose(self, images)

    def permute_vars(self, images):
        """Return p(x_{images[0]}, ..., x_{images[n-1]}) with 0-based images."""
        n = self.nvars
        shifts = [EXP_BITS * (n - 1 - images[i]) for i in range(n)]
        t = {}
        for k, c in self._t.items():
            e = unpack(k, n)
            nk = 0
            for i, ei in enumerate(e):
                if ei:
                    nk += ei << shifts[i]
            t[nk] = c
        return self._like(t)

    def change_domain(self, domain):
        """Map coefficients into ``domain`` (e.g. reduction Z -> GF(p))."""
        norm = domain.normalize
        t = {}
        for k, v in self._t.items():
            w = norm(v)
            if w:
                t[k] = w
        return MultiPoly._wrap(domain, self.nvars, t, self.names)

    def embed(self, nvars, positions, names=None):
        """Move into a ring with ``nvars`` variables; variable i goes to positions[i]."""
        n = self.nvars
        shifts = [EXP_BITS * (nvars - 1 - positions[i]) for i in range(n)]
        t = {}
        for k, c in self._t.items():
            e = unpack(k, n)
            t[sum(ei << shifts[i] for i, ei in enumerate(e) if ei)] = c
        return MultiPoly._wrap(self.domain, nvars, t, names or default_names(nvars))

    def coefficients_in(self, i: int):
        """Split as sum_m x_i^m * C_m; returns {m: C_m} with C_m free of x_i."""
        n = self.nvars
        shift = EXP_BITS * (n - 1 - i)
        out = {}
        for k, c in self._t.items():
            m = (k >> shift) & EXP_MASK
            out.setdefault(m, {})[k - (m << shift)] = c
        return {m: self._like(t) for m, t in out.items()}

    def derivative(self, i: int):
        """Partial derivative with respect to variable i."""
        shift = EXP_BITS * (self.nvars - 1 - i)
        unit = 1 << shift
        dom = self.domain
        t = {}
        for k, c in self._t.items():
            m = (k >> shift) & EXP_MASK
            if m:
                v = dom.normalize(c * m)
                if v:
                    t[k - unit] = v
        return self._like(t)

    def drop_variable(self, i: int, names=None):
        """Remove variable i, which must not occur."""
        n = self.nvars
        if self.degree_in(i) > 0:
            raise ValueError(f"variable {i} occurs in the polynomial")
        pos = [j if j < i else j - 1 for j in range(n)]
        pos[i] = 0
        t = {}
        for k, c in self._t.items():
            e = unpack(k, n)
            e = e[:i] + e[i + 1:]
            t[pack(e)] = c
        if names is None:
            names = self.names[:i] + self.names[i + 1:]
        return MultiPoly._wrap(self.domain, n - 1, t, names)

    # -- text ---------------------------------------------------------------
    def __repr__(self):
        return f"MultiPoly({self.domain}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# kernels
# ---------------------------------------------------------------------------

def _add(a, b, domain, sign):
    norm = domain.normalize
    t = dict(a)
    for k, v in b.items():
        w = t.get(k)
        w = norm(v if sign > 0 else -v) if w is None else norm(w + v if sign > 0 else w - v)
        if w:
            t[k] = w
        else:
            t.pop(k, None)
    return t


def _mul(a: MultiPoly, b: MultiPoly):
    ta, tb = a._t, b._t
    if not ta or not tb:
        return {}
    if a.degree() + b.degree() > MAX_EXP:
        raise OverflowError("product degree exceeds the exponent range")
    dom = a.domain
    if (len(ta) * len(tb) > KRONECKER_THRESHOLD
            and (dom == ZZ or isinstance(dom, PrimeField))):
        return kronecker_mul(a, b)
    return schoolbook_mul(ta, tb, dom)


def schoolbook_mul(ta, tb, dom):
    if len(ta) < len(tb):
        ta, tb = tb, ta
    acc = {}
    get = acc.get
    zero = dom.zero
    bitems = list(tb.items())
    for ka, ca in ta.items():
        for kb, cb in bitems:
            k = ka + kb
            acc[k] = get(k, zero) + ca * cb
    norm = dom.normalize
    out = {}
    for k, v in acc.items():
        w = norm(v)
        if w:
            out[k] = w
    return out


def _kron_layout(polys, nvars):
    """Mixed-radix layout for a product of the given polynomials.

    Returns (vars kept, radices, strides, dropped var or None, total degree).
    For homogeneous inputs the last variable is dropped and recovered from
    the total degree.
    """
    homogeneous = all(p.is_homogeneous() for p in polys)
    radices = [sum(p.degrees()[i] for p in polys) + 1 for i in range(nvars)]
    kept = list(range(nvars))
    dropped = None
    if homogeneous and nvars > 1:
        dropped = max(range(nvars), key=lambda i: radices[i])
        kept.remove(dropped)
    strides, s = [], 1
    for i in kept:
        strides.append(s)
        s *= radices[i]
    total = sum(p.degree() for p in polys)
    return kept, [radices[i] for i in kept], strides, dropped, total, s


def _indices(p: MultiPoly, kept, strides):
    n = p.nvars
    out = []
    for k, c in p._t.items():
        e = unpack(k, n)
        out.append((sum(e[i] * s for i, s in zip(kept, strides)), c))
    return out


def _pack_int(items, w):
    """Signed Kronecker packing: sum c * 2^(8*w*idx)."""
    if not items:
        return gmpy2.mpz(0)
    size = (max(i for i, _ in items) + 1) * w
    pos = bytearray(size)
    neg = bytearray(size)
    for idx, c in items:
        if c > 0:
            pos[idx * w:(idx + 1) * w] = c.to_bytes(w, "little")
        elif c < 0:
            neg[idx * w:(idx + 1) * w] = (-c).to_bytes(w, "little")
    return gmpy2.mpz(int.from_bytes(pos, "little")) - gmpy2.mpz(int.from_bytes(neg, "little"))


def _unpack_int(value, nslots, w):
    """Inverse of :func:`_pack_int` for coefficients below 2^(8w-1) in size."""
    half = 1 << (8 * w - 1)
    bias_bytes = (b"\x00" * (w - 1) + b"\x80") * nslots
    biased = int(value + gmpy2.mpz(int.from_bytes(bias_bytes, "little")))
    if biased < 0 or biased.bit_length() > 8 * w * nslots:
        raise OverflowError("Kronecker slot overflow")
    raw = biased.to_bytes(nslots * w, "little")
    arr = np.frombuffer(raw, dtype=np.uint8).reshape(nslots, w)
    pattern = np.frombuffer(b"\x00" * (w - 1) + b"\x80", dtype=np.uint8)
    nz = np.nonzero(np.any(arr != pattern, axis=1))[0]
    out = []
    for idx in nz.tolist():
        out.append((idx, int.from_bytes(raw[idx * w:(idx + 1) * w], "little") - half))
    return out


def _keys_from_indices(idx_coefs, kept, radices, strides, dropped, total, nvars):
    shifts = [EXP_BITS * (nvars - 1 - i) for i in range(nvars)]
    t = {}
    for idx, c in idx_coefs:
        key = 0
        s = 0
        for i, r, st in zip(kept, radices, strides):
            e = (idx // st) % r
            s += e
            key += e << shifts[i]
        if dropped is not None:
            rest = total - s
            if rest < 0:
                raise ArithmeticError("inconsistent homogeneous unpacking")
            key += rest << shifts[dropped]
        t[key] = c
    return t


def _slot_bytes(bound):
    return (bound.bit_length() + 2 + 7) // 8


def kronecker_mul(a: MultiPoly, b: MultiPoly):
    """Exact product via Kronecker substitution and GMP multiplication."""
    dom = a.domain
    n = a.nvars
    kept, radices, strides, dropped, total, nslots = _kron_layout([a, b], n)
    ia = _indices(a, kept, strides)
    ib = _indices(b, kept, strides)
    ma = max(abs(c) for _, c in ia)
    mb = max(abs(c) for _, c in ib)
    bound = min(len(ia), len(ib)) * ma * mb
    w = _slot_bytes(bound)
    prod_ = _pack_int(ia, w) * _pack_int(ib, w)
    coefs = _unpack_int(prod_, nslots, w)
    if isinstance(dom, PrimeField):
        p = dom.p
        coefs = [(i, c % p) for i, c in coefs if c % p]
    return _keys_from_indices(coefs, kept, radices, strides, dropped, total, n)


# ---------------------------------------------------------------------------
# exact division
# ---------------------------------------------------------------------------

class InexactDivision(ArithmeticError):
    """Raised when a division leaves a remainder; ``witness`` holds it."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def divide_exact(num: MultiPoly, den: MultiPoly, method="auto") -> MultiPoly:
    """Exact quotient ``num / den``; raises :class:`InexactDivision` otherwise.

    ``method='lex'`` is leading-term long division in the lex order.
    ``method='kronecker'`` (Z only) divides the Kronecker images as
    integers.  Either way the quotient is re-verified by multiplication.
    """
    num._check(den)
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return num
    if method == "auto":
        big = len(num) * len(den) > 50 * KRONECKER_THRESHOLD
        method = "kronecker" if big and num.domain == ZZ else "lex"
    if method == "kronecker":
        q = _kronecker_div(num, den)
        if q is None:
            q = _lex_div(num, den)
    else:
        q = _lex_div(num, den)
    if q * den != num:
        raise InexactDivision("quotient failed re-verification", num - q * den)
    return q


def _lex_div(num, den):
    dom = num.domain
    norm = dom.normalize
    lead_key = max(den._t)
    lead_c = den._t[lead_key]
    inv = None if dom == ZZ else dom.inv(lead_c)
    lead_exps = unpack(lead_key, num.nvars)
    rest = [(k - lead_key, c) for k, c in den._t.items() if k != lead_key]
    rem = dict(num._t)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot = {}
    n = num.nvars
    while heap:
        k = -heapq.heappop(heap)
        c = rem.get(k)
        if not c:
            continue
        diff = unpack(k, n)
        if any(x < y for x, y in zip(diff, lead_exps)):
            raise InexactDivision(
                f"leading monomial {diff} not divisible by {lead_exps}",
                MultiPoly._wrap(dom, n, rem, num.names))
        if inv is None:
            qc, r = divmod(c, lead_c)
            if r:
                raise InexactDivision(
                    f"coefficient {c} not divisible by {lead_c}",
                    MultiPoly._wrap(dom, n, rem, num.names))
        else:
            qc = norm(c * inv)
        qk = k - lead_key
        quot[qk] = qc
        del rem[k]
        for dk, dc in rest:
            kk = qk + lead_key + dk
            old = rem.get(kk)
            if old is None:
                rem[kk] = norm(-qc * dc)
                heapq.heappush(heap, -kk)
            else:
                v = norm(old - qc * dc)
                if v:
                    rem[kk] = v
                else:
                    del rem[kk]
    return MultiPoly._wrap(dom, n, quot, num.names)


def _kronecker_div(num, den):
    n = num.nvars
    if not (num.is_homogeneous() and den.is_homogeneous()):
        return None
    if any(d > m for d, m in zip(den.degrees(), num.degrees())):
        raise InexactDivision("divisor degree exceeds dividend degree", num)
    qdeg = num.degree() - den.degree()
    kept, radices, strides, dropped, _, nslots = _kron_layout([num], n)
    inum = _indices(num, kept, strides)
    iden = _indices(den, kept, strides)
    w = _slot_bytes(max(abs(c) for _, c in inum) * 4)
    for _ in range(4):
        N = _pack_int(inum, w)
        D = _pack_int(iden, w)
        Q, R = divmod(N, D)
        if R:
            return None
        try:
            coefs = _unpack_int(Q, nslots, w)
            t = _keys_from_indices(coefs, kept, radices, strides, dropped, qdeg, n)
        except (OverflowError, ArithmeticError):
            w *= 2
            continue
        q = MultiPoly._wrap(num.domain, n, t, num.names)
        if q * den == num:
            return q
        w *= 2
    return None


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------

def compose(p: MultiPoly, images):
    """p(images[0], ..., images[n-1]) with all images in one ring."""
    if len(images) != p.nvars:
        raise ValueError("need one image per variable")
    target = images[0]
    for q in images[1:]:
        target._check(q)
    if target.domain != p.domain:
        raise ValueError(f"domain mismatch: {p.domain} vs {target.domain}")
    n = p.nvars
    one = MultiPoly.constant(target.domain, target.nvars, 1, target.names)
    powers = [{0: one} for _ in range(n)]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            half = e // 2
            cache[e] = power(i, half) * power(i, e - half) if e > 1 else images[i]
        return cache[e]

    acc = {}
    for k, c in p._t.items():
        e = unpack(k, n)
        term = None
        for i, ei in enumerate(e):
            if ei:
                term = power(i, ei) if term is None else term * power(i, ei)
        if term is None:
            term = one
        acc_t = term.scale(c)
        acc = _add(acc, acc_t._t, target.domain, 1)
    return MultiPoly._wrap(target.domain, target.nvars, acc, target.names)


# ---------------------------------------------------------------------------
# parsing and formatting
# ---------------------------------------------------------------------------

class PolySyntaxError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9]*)|(.))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.replace("−", "-")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or not text[pos:].strip():
            break
        num, ident, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(("num", int(num), start))
        elif ident is not None:
            out.append(("id", ident, start))
        else:
            if op not in "+-*^()/":
                raise PolySyntaxError(f"unexpected character {op!r}", start)
            out.append(("op", op, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, domain, names):
        self.toks = _tokenize(text)
        self.i = 0
        self.domain = domain
        self.names = list(names)
        self.index = {nm: j for j, nm in enumerate(self.names)}
        self.n = len(self.names)
        self.gen_name = getattr(domain, "gen_name", None)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise PolySyntaxError(f"expected {op!r}", tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty expression", 0)
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expr(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            p = self.term()
            if tok[1] == "-":
                p = -p
        else:
            p = self.term()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                q = self.term()
                p = p + q if tok[1] == "+" else p - q
            else:
                return p

    def term(self):
        p = self.power()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "*/":
                self.take()
                q = self.power()
                if tok[1] == "*":
                    p = p * q
                else:
                    if not q.is_constant() or not q:
                        raise PolySyntaxError("division only by nonzero constants", tok[2])
                    if not self.domain.is_field:
                        c = p.domain
                        p = MultiPoly(QQ, self.n, {e: Fraction(v) for e, v in p.terms()}, self.names)
                        d = Fraction(q.constant_value())
                        p = p.scale(1 / d)
                        try:
                            p = p.change_domain(c)
                        except ValueError:
                            raise PolySyntaxError("coefficient not in domain", tok[2]) from None
                    else:
                        p = p.scale(self.domain.inv(q.constant_value()))
            elif tok[0] in ("num", "id") or (tok[0] == "op" and tok[1] == "("):
                raise PolySyntaxError("implicit multiplication is not accepted", tok[2])
            else:
                return p

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "num":
                raise PolySyntaxError("exponent must be a non-negative integer literal", e[2])
            return base ** e[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return MultiPoly.constant(self.domain, self.n, val, self.names)
        if kind == "id":
            if val in self.index:
                return MultiPoly.var(self.domain, self.n, self.index[val], self.names)
            if val == self.gen_name:
                return MultiPoly.constant(self.domain, self.n, self.domain.gen, self.names)
            raise PolySyntaxError(f"unknown variable {val!r}", pos)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "end":
            raise PolySyntaxError("unexpected end of input", pos)
        raise PolySyntaxError(f"unexpected token {val!r}", pos)


def parse_poly(text: str, domain, names) -> MultiPoly:
    """Parse ``text`` over ``domain`` in the variables ``names``.

    Grammar: integer literals, identifiers, ``+ - * ^`` and parentheses with
    the usual precedence; ``/`` is accepted for division by a nonzero
    constant.  Implicit multiplication is rejected.
    """
    if isinstance(names, int):
        names = default_names(names)
    return _Parser(text, domain, names).parse()


def _format_coef(domain, c):
    if domain == QQ:
        c = Fraction(c)
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return domain.format_coef(c)


def _monomial_text(exps, names):
    parts = []
    for nm, e in zip(names, exps):
        if e == 1:
            parts.append(nm)
        elif e > 1:
            parts.append(f"{nm}^{e}")
    return "*".join(parts)


def format_poly(p: MultiPoly) -> str:
    """Canonical text, terms in decreasing lex order."""
    if not p:
        return "0"
    out = []
    ext = hasattr(p.domain, "gen_name")
    for exps, c in p.terms():
        mono = _monomial_text(exps, p.names)
        if ext:
            ctext = _format_coef(p.domain, c)
            if "+" in ctext:
                ctext = f"({ctext})"
            sign = "+"
        else:
            if p.domain == ZZ or p.domain == QQ:
                sign = "-" if c < 0 else "+"
                c = -c if c < 0 else c
            else:
                sign = "+"
            ctext = _format_coef(p.domain, c)
        if mono and ctext == "1":
            body = mono
        elif mono:
            body = f"{ctext}*{mono}"
        else:
            body = ctext
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def to_json(p: MultiPoly) -> dict:
    return {
        "domain": p.domain.descriptor,
        "vars": list(p.names),
        "terms": [{"exp": list(e), "coef": p.domain.coef_to_json(c) if p.domain != QQ else str(c)}
                  for e, c in p.terms()],
    }


def from_json(data, domain=None) -> MultiPoly:
    from .domains import parse_field

    if isinstance(data, str):
        data = json.loads(data)
    if domain is None:
        domain = parse_field(data.get("domain", "Z"))
    names = data["vars"]
    terms = {}
    for t in data["terms"]:
        terms[tuple(t["exp"])] = domain.coef_from_json(t["coef"])
    return MultiPoly(domain, len(names), terms, names)
