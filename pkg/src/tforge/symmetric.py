"""Symmetric-group actions, elementary symmetric functions and the
translation / inversion conditions for symmetric functions of roots.

Permutations act on polynomials by ``(s.p)(x1, ..., xn) = p(x_s(1), ..., x_s(n))``,
which is a left action: ``s.(t.p) == (s*t).p``.
"""

from __future__ import annotations

import itertools

from .domains import ZZ
from .polyring import MultiPoly, divide_exact, pack, unpack

__all__ = [
    "Permutation", "apply_permutation", "elementary_symmetric", "elem_sym_of",
    "vandermonde_delta", "divide_exact", "is_symmetric", "is_skew",
    "symmetrize_to_elementary", "expand_elementary", "check_condition_T",
    "check_condition_R", "inversion_transform", "power_sum", "orbit_sum",
]


class Permutation:
    """A bijection of {1, ..., n}; ``images[i-1]`` is the image of i."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n, *cycles):
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(img)

    @classmethod
    def transposition(cls, n, i, j):
        return cls.from_cycles(n, (i, j))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        """Composition: ``(s*t)(i) = s(t(i))``."""
        if self.n != other.n:
            raise ValueError("permutations of different degree")
        return Permutation(self.images[j - 1] for j in other.images)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = Permutation.identity(self.n)
        for _ in range(e):
            out = out * self
        return out

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(inv)

    def cycles(self):
        seen, out = set(), []
        for i in range(1, self.n + 1):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self):
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_identity(self):
        return self.images == tuple(range(1, self.n + 1))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def adjacent_transpositions(n):
    return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]


def generate_group(gens):
    """Closure of a set of permutations under composition."""
    gens = list(gens)
    n = gens[0].n
    ident = Permutation.identity(n)
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s * g
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return elems


def apply_permutation(p: MultiPoly, sigma: Permutation) -> MultiPoly:
    if sigma.n != p.nvars:
        raise ValueError(f"permutation of degree {sigma.n} on {p.nvars} variables")
    return p.permute_vars([i - 1 for i in sigma.images])


def elementary_symmetric(n: int, k: int, domain=ZZ) -> MultiPoly:
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    terms = {}
    for combo in itertools.combinations(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = 1
    return MultiPoly(domain, n, terms)


def elem_sym_of(polys, k: int) -> MultiPoly:
    """k-th elementary symmetric polynomial evaluated at ``polys``."""
    polys = list(polys)
    if not polys:
        raise ValueError("need at least one polynomial")
    first = polys[0]
    for q in polys[1:]:
        first._check(q)
    if not 0 <= k <= len(polys):
        raise ValueError(f"k={k} out of range for {len(polys)} polynomials")
    one = MultiPoly.constant(first.domain, first.nvars, 1, first.names)
    zero = MultiPoly.zero(first.domain, first.nvars, first.names)
    E = [one] + [zero] * k
    for i, q in enumerate(polys):
        # only the levels that can still reach k matter
        lo = max(1, k - (len(polys) - 1 - i))
        for j in range(min(k, i + 1), lo - 1, -1):
            if E[j - 1]:
                E[j] = E[j] + q * E[j - 1]
    return E[k]


def power_sum(n: int, k: int, domain=ZZ) -> MultiPoly:
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = k
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return MultiPoly(domain, n, terms)


def vandermonde_delta(n: int, domain=ZZ) -> MultiPoly:
    """Delta = prod_{i<j} (x_i - x_j)."""
    if n < 2:
        raise ValueError("Delta needs n >= 2")
    x = MultiPoly.gens(domain, n)
    out = MultiPoly.constant(domain, n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (x[i] - x[j])
    return out


def is_symmetric(p: MultiPoly) -> bool:
    return all(apply_permutation(p, s) == p for s in adjacent_transpositions(p.nvars))


def is_skew(p: MultiPoly) -> bool:
    return all(apply_permutation(p, s) == -p for s in adjacent_transpositions(p.nvars))


def orbit_sum(p: MultiPoly, group) -> MultiPoly:
    out = MultiPoly.zero(p.domain, p.nvars, p.names)
    for g in group:
        out = out + apply_permutation(p, g)
    return out


def _a_names(n):
    return [f"a{i + 1}" for i in range(n)]


def symmetrize_to_elementary(p: MultiPoly, names=None) -> MultiPoly:
    """Write a symmetric polynomial in a_1..a_n where a_k = (-1)^k e_k.

    Classical leading-term elimination: the lex-leading exponent lambda of
    the remainder is a partition, and subtracting c * prod e_k^(l_k - l_(k+1))
    removes it.
    """
    n = p.nvars
    if not is_symmetric(p):
        raise ValueError("input is not symmetric")
    dom = p.domain
    norm = dom.normalize
    names = names or _a_names(n)
    e_polys = [elementary_symmetric(n, k, dom) for k in range(1, n + 1)]
    pow_cache = [{0: MultiPoly.constant(dom, n, 1), 1: e} for e in e_polys]

    def e_power(k, m):
        cache = pow_cache[k]
        if m not in cache:
            cache[m] = e_power(k, m - 1) * e_polys[k]
        return cache[m]

    def is_partition_key(key):
        e = unpack(key, n)
        return all(e[i] >= e[i + 1] for i in range(n - 1))

    # a symmetric polynomial is determined by its partition-exponent terms
    rem = {k: c for k, c in p.packed_items() if is_partition_key(k)}
    out = {}
    while rem:
        key = max(rem)
        lam = unpack(key, n)
        c = rem[key]
        beta = tuple(lam[i] - (lam[i + 1] if i + 1 < n else 0) for i in range(n))
        sign = -1 if sum((i + 1) * b for i, b in enumerate(beta)) % 2 else 1
        out[beta] = norm(sign * c)
        prod_ = pow_cache[0][0]
        for k, b in enumerate(beta):
            if b:
                prod_ = prod_ * e_power(k, b)
        for kk, v in prod_.packed_items():
            if is_partition_key(kk):
                w = norm(rem.get(kk, dom.zero) - c * v)
                if w:
                    rem[kk] = w
                else:
                    rem.pop(kk, None)
        if key in rem:
            raise ArithmeticError("leading-term elimination failed to cancel")
    return MultiPoly(dom, n, out, names)


def expand_elementary(q: MultiPoly, n: int | None = None) -> MultiPoly:
    """Substitute a_k = (-1)^k e_k(x_1..x_n) into a polynomial in a_1..a_n."""
    n = n or q.nvars
    dom = q.domain
    images = []
    for k in range(1, q.nvars + 1):
        e = elementary_symmetric(n, k, dom)
        images.append(e if k % 2 == 0 else -e)
    return q.substitute(dict(enumerate(images)))


def check_condition_T(q: MultiPoly, method="auto") -> bool:
    """Translation invariance: q(x1+t, ..., xn+t) == q(x1, ..., xn).

    In characteristic 0 this is equivalent to sum_i dq/dx_i == 0 (the
    t-derivative of q(x+t) is that sum evaluated at x+t), which avoids
    expanding in an extra variable.  ``method='substitute'`` forces the
    direct expansion, which is also what positive characteristic uses.
    """
    if method == "auto":
        method = "derivative" if q.domain.characteristic == 0 else "substitute"
    n = q.nvars
    if method == "derivative":
        if q.domain.characteristic != 0:
            raise ValueError("the derivative criterion needs characteristic 0")
        total = MultiPoly.zero(q.domain, n, q.names)
        for i in range(n):
            total = total + q.derivative(i)
        return not total
    dom = q.domain
    names = list(q.names) + ["t"]
    gens = MultiPoly.gens(dom, n + 1, names)
    shifted = q.substitute({i: gens[i] + gens[n] for i in range(n)})
    return shifted == q.embed(n + 1, list(range(n)), names)


def inversion_transform(q: MultiPoly, degs) -> MultiPoly:
    """(x1^d1 ... xn^dn) * q(1/x1, ..., 1/xn) for per-variable degrees d_i.

    Raises ``ValueError`` if some variable exceeds its stated degree.
    """
    n = q.nvars
    if isinstance(degs, int):
        degs = [degs] * n
    top = pack(degs)
    for k in dict(q.packed_items()):
        e = unpack(k, n)
        if any(x > d for x, d in zip(e, degs)):
            raise ValueError(f"monomial {e} exceeds per-variable degrees {tuple(degs)}")
    # every field of top - key stays non-negative, so no borrows occur
    return MultiPoly._wrap(q.domain, n, {top - k: c for k, c in q.packed_items()}, q.names)


def check_condition_R(q: MultiPoly, d: int) -> bool:
    """n*d even and (x1...xn)^d q(1/x1, ..., 1/xn) == (-1)^(nd/2) q."""
    n = q.nvars
    if (n * d) % 2:
        return False
    try:
        inv = inversion_transform(q, d)
    except ValueError:
        return False
    sign = -1 if (n * d // 2) % 2 else 1
    return inv == (q if sign == 1 else -q)

