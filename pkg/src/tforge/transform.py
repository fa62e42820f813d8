"""Tschirnhaus transformations from covariants and the normalizers built on them.

A covariant ``(phi_1, ..., phi_n)`` sends a monic polynomial ``f`` with roots
``xi_i`` to ``f_bar = prod (Y - phi_i(xi))``.  For an untwisted covariant
``phi_i(xi) = phi(a, xi_i)`` for a polynomial ``phi(a, X)`` of X-degree < n,
so ``f_bar`` is a resultant computable over the coefficient field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import gf
from .covariants import Covariant
from .domains import QQ, ZZ, PrimeField
from .polyring import MultiPoly
from .quotient import QuotientField
from .symmetric import symmetrize_to_elementary
from .unipoly import UniPoly, interpolate, rational_roots


class TransformError(ValueError):
    """Bad input to a transformation (not monic, wrong degree, inseparable...)."""


class UnsupportedCase(ValueError):
    """A case where no normal form is known to be produced (e.g. sextics in characteristic 2)."""

    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code


class SearchExhausted(RuntimeError):
    pass


class NotPowerOfIrreducible(ArithmeticError):
    pass


class IrreducibilityUndecided(ArithmeticError):
    pass


class TransformNotIrreducible(ArithmeticError):
    """A covariant image expected to be irreducible factors; carries the evidence."""

    def __init__(self, message, image, factor_degrees):
        super().__init__(message)
        self.image = image
        self.factor_degrees = factor_degrees


def a_names(n):
    return [f"a{k}" for k in range(1, n + 1)]


def coefficient_vector(f: UniPoly):
    """(a_1, ..., a_n) of a monic f = X^n + a_1 X^(n-1) + ... + a_n."""
    n = f.degree()
    return [f[n - k] for k in range(1, n + 1)]


def _evaluate_in(p: MultiPoly, domain, point):
    """Evaluate an integer polynomial at a point of ``domain``, reducing as we go."""
    if isinstance(domain, PrimeField) and p.domain == ZZ:
        return p.evaluate_mod(point, domain.p)
    norm = domain.normalize
    if domain in (QQ, ZZ):
        return norm(p.evaluate(list(point)))
    return norm(p.change_domain(domain).evaluate([norm(v) for v in point]))


# ---------------------------------------------------------------------------
# Tschirnhaus forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TschirnhausForm:
    """phi(a, X) = sum_j pj[j](a) X^j with ``pj`` integer polynomials in a_1..a_n."""

    n: int
    pj: tuple
    twist: str = "none"

    def specialize(self, f: UniPoly) -> UniPoly:
        """phi(f, X) in K[X] for a monic f of degree n."""
        if f.degree() != self.n:
            raise TransformError(f"degree {f.degree()} polynomial for a degree-{self.n} form")
        a = coefficient_vector(f)
        return UniPoly(f.domain, [_evaluate_in(p, f.domain, a) for p in self.pj])

    def __call__(self, a, x):
        """phi(a, x) for coefficient values ``a`` and a value ``x`` of the same domain."""
        vals = [p.evaluate(list(a)) for p in self.pj]
        acc = 0
        for v in reversed(vals):
            acc = acc * x + v
        return acc

    def to_multipoly(self) -> MultiPoly:
        """phi as one polynomial in a_1..a_n and X."""
        names = a_names(self.n) + ["X"]
        out = MultiPoly.zero(ZZ, self.n + 1, names)
        for j, p in enumerate(self.pj):
            e = [0] * self.n + [j]
            out = out + p.embed(self.n + 1, list(range(self.n)), names).mul_monomial(e)
        return out

    def is_homogeneous_weight(self, weight) -> bool:
        """Each a_k has weight k and X weight 1; a homogeneous covariant gives one weight."""
        for j, p in enumerate(self.pj):
            for e, _ in p.terms():
                if sum((k + 1) * ek for k, ek in enumerate(e)) + j != weight:
                    return False
        return True


def _collect_in_x1(p: MultiPoly):
    """{m: coefficient of x1^m as a polynomial in x2..xn}."""
    out = {}
    for e, c in p.terms():
        out.setdefault(e[0], {})[e[1:]] = c
    names = p.names[1:]
    return {m: MultiPoly(p.domain, p.nvars - 1, t, names) for m, t in out.items()}


def tschirnhaus_extract(cov: Covariant) -> TschirnhausForm:
    """The polynomial phi(a, X) with phi_i(x) = phi(a(x), x_i).

    Writes phi_1 in powers of x_1 with coefficients symmetric in x_2..x_n,
    rewrites those through the elementary functions of x_2..x_n, which equal
    sum_i x_1^i a_(k-i) up to sign, and reduces x_1^n with f(x_1) = 0.
    """
    if cov.twist != "none":
        raise TransformError(
            "a twisted covariant has no Tschirnhaus form: its first component is not "
            "invariant under the stabilizer of x1, so it is not a polynomial in x1 "
            "over the symmetric functions")
    if cov.character != "trivial":
        raise TransformError(
            "a sign-type covariant has no Tschirnhaus form; multiply it by Delta first")
    if not cov.is_equivariant():
        raise TransformError("covariant is not equivariant")
    n = cov.n
    phi1 = cov[1]
    if phi1.domain != ZZ:
        raise TransformError("Tschirnhaus extraction works over the integers")
    names = ["X"] + a_names(n)
    gens = MultiPoly.gens(ZZ, n + 1, names)
    X, a = gens[0], gens[1:]
    one = MultiPoly.constant(ZZ, n + 1, 1, names)
    # b_k = sum_{i<=k} X^i a_{k-i}: elementary functions of x2..xn with the a-sign
    b = []
    for k in range(1, n):
        acc = X ** k
        for i in range(k):
            acc = acc + (X ** i) * a[k - i - 1]
        b.append(acc)
    total = MultiPoly.zero(ZZ, n + 1, names)
    for m, coef in sorted(_collect_in_x1(phi1).items()):
        if n > 1:
            if coef.is_constant():
                q_in_b = coef.constant_value() * one
            else:
                sym = symmetrize_to_elementary(coef, [f"b{k}" for k in range(1, n)])
                q_in_b = sym.substitute(dict(enumerate(b)))
        else:
            q_in_b = coef.constant_value() * one
        total = total + q_in_b * X ** m
    # reduce X^m for m >= n using X^n = -a1 X^(n-1) - ... - an
    by_x = {}
    for e, c in total.terms():
        by_x.setdefault(e[0], {})[e[1:]] = c
    coeffs = {m: MultiPoly(ZZ, n, t, a_names(n)) for m, t in by_x.items()}
    a_n = MultiPoly.gens(ZZ, n, a_names(n))
    for m in range(max(coeffs, default=0), n - 1, -1):
        c = coeffs.pop(m, None)
        if c is None or not c:
            continue
        for k in range(1, n + 1):
            j = m - k
            coeffs[j] = coeffs.get(j, MultiPoly.zero(ZZ, n, a_names(n))) - c * a_n[k - 1]
    if any(m >= n and c for m, c in coeffs.items()):
        raise ArithmeticError("reduction left X-degree >= n")
    pj = tuple(coeffs.get(j, MultiPoly.zero(ZZ, n, a_names(n))) for j in range(n))
    return TschirnhausForm(n, pj, cov.twist)


def elementary_a_values(x):
    """a_k = (-1)^k e_k(x) for a tuple of ring values."""
    n = len(x)
    e = [1] + [0] * n
    for v in x:
        for k in range(n, 0, -1):
            e[k] = e[k] + v * e[k - 1]
    return [e[k] if k % 2 == 0 else -e[k] for k in range(1, n + 1)]


# ---------------------------------------------------------------------------
# descended maps (twisted covariants)
# ---------------------------------------------------------------------------

def discriminant(f: UniPoly):
    """prod_{i<j} (xi_i - xi_j)^2 for monic f, as (-1)^(n(n-1)/2) Res(f, f')."""
    from .unipoly import resultant

    n = f.degree()
    r = resultant(f, f.derivative())
    return f.domain.normalize(r if (n * (n - 1) // 2) % 2 == 0 else -r)


@dataclass(frozen=True)
class JoubertImage:
    """The map f -> f_bar of the Joubert covariant, through symmetric functions.

    With phi = Delta * psi and D = Delta^2 = disc(f):
    a_bar_2 = D E2, a_bar_4 = D^2 E4, a_bar_5 = -e5_const D^3, a_bar_6 = D^3 E6,
    where E_k expresses e_k(psi) in a_1..a_6 and e5(psi) = e5_const * Delta.
    """

    E2: MultiPoly
    E4: MultiPoly
    E6: MultiPoly
    e5_const: int
    n: int = 6
    twist: str = "tau"

    def coefficients(self, f: UniPoly):
        dom = f.domain
        a = coefficient_vector(f)
        D = discriminant(f)
        norm = dom.normalize
        e2 = _evaluate_in(self.E2, dom, a)
        e4 = _evaluate_in(self.E4, dom, a)
        e6 = _evaluate_in(self.E6, dom, a)
        return [dom.zero, norm(D * e2), dom.zero, norm(D * D * e4),
                norm(-self.e5_const * D ** 3), norm(D ** 3 * e6)]

    def apply(self, f: UniPoly) -> UniPoly:
        abar = self.coefficients(f)
        return UniPoly(f.domain, list(reversed(abar)) + [1])


@lru_cache(maxsize=None)
def joubert_image() -> JoubertImage:
    from .fixtures import load_joubert_image

    return load_joubert_image()


def compute_joubert_image() -> JoubertImage:
    from .covariants import delta, joubert_psi

    psi = joubert_psi()
    E = {}
    for k in (2, 4, 6):
        E[k] = symmetrize_to_elementary(psi.elementary(k))
    e5 = psi.elementary(5)
    d6 = delta(6)
    lead, c = d6.leading_term()
    const = e5.coefficient(lead) // c
    if e5 != d6.scale(const):
        raise ArithmeticError("e5(psi) is not a multiple of Delta")
    return JoubertImage(E[2], E[4], E[6], const)


# ---------------------------------------------------------------------------
# resultants and the transformed polynomial
# ---------------------------------------------------------------------------

def _check_input(f: UniPoly, n: int):
    if not f.is_monic():
        raise TransformError("polynomial must be monic")
    if f.degree() != n:
        raise TransformError(f"expected degree {n}, got {f.degree()}")
    if not f.is_squarefree():
        raise TransformError("polynomial is not separable")


def bareiss_det(matrix, one_ring):
    """Fraction-free determinant over an integral domain with exact division.

    Entries are ring elements supporting +, -, * and ``exact_div``.
    """
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    prev = one_ring
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return one_ring * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester(f_coeffs, g_coeffs, zero):
    """Sylvester matrix of two coefficient lists given high to low."""
    m, n = len(f_coeffs) - 1, len(g_coeffs) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(f_coeffs) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(g_coeffs) + [zero] * (size - n - 1 - i))
    return rows


def image_by_bareiss(f: UniPoly, phi: UniPoly) -> UniPoly:
    """Res_X(f, Y - phi(X)) as a Sylvester determinant over K[Y]."""
    dom = f.domain
    Y = UniPoly.x(dom)
    if phi.degree() <= 0:
        return (Y - phi[0]) ** f.degree()
    fc = [UniPoly(dom, [c]) for c in reversed(f.coeffs)]
    gl = [UniPoly(dom, [-c]) for c in phi.coeffs]
    gl[0] = gl[0] + Y
    gc = list(reversed(gl))
    det = bareiss_det(sylvester(fc, gc, UniPoly(dom, [])), UniPoly(dom, [1]))
    return det.monic() if det else det


def image_by_interpolation(f: UniPoly, phi: UniPoly) -> UniPoly:
    """Res_X(f, y - phi(X)) at n + 1 points y, then Lagrange interpolation.

    The resultant is prod (y - phi(xi_i)), a monic polynomial of degree n in y.
    """
    from .unipoly import resultant

    dom = f.domain
    n = f.degree()
    nodes = _nodes(dom, n + 1)
    vals = [resultant(f, UniPoly(dom, [y]) - phi) for y in nodes]
    return interpolate(dom, nodes, vals)


def _nodes(dom, count):
    if dom == QQ:
        return [Fraction(i) for i in range(count)]
    elems = []
    for e in dom.elements():
        elems.append(e)
        if len(elems) == count:
            return elems
    raise ValueError(f"{dom} has fewer than {count} elements")


def image_by_charpoly(f: UniPoly, phi: UniPoly) -> UniPoly:
    """Characteristic polynomial of multiplication by phi(xi) on K[x]/(f)."""
    L = QuotientField(f)
    return L.charpoly(L.from_poly(phi))


def image_polynomial(f: UniPoly, phi: UniPoly, method="auto") -> UniPoly:
    """prod over roots xi of f of (Y - phi(xi)) for monic f."""
    if method == "auto":
        order = getattr(f.domain, "order", None)
        method = "interpolate" if order is not None and order > f.degree() else "bareiss"
    if method == "interpolate":
        return image_by_interpolation(f, phi)
    if method == "bareiss":
        return image_by_bareiss(f, phi)
    if method == "charpoly":
        return image_by_charpoly(f, phi)
    raise ValueError(f"unknown method {method!r}")


def transformed_polynomial(f: UniPoly, tf, method="auto") -> UniPoly:
    """f_bar for a Tschirnhaus form or a descended twisted map."""
    _check_input(f, tf.n)
    if isinstance(tf, TschirnhausForm):
        return image_polynomial(f, tf.specialize(f), method)
    return tf.apply(f)


# ---------------------------------------------------------------------------
# decomposition f_bar = h^m
# ---------------------------------------------------------------------------

_SMALL_PRIMES = [p for p in range(3, 400) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def power_of_irreducible_decompose(g: UniPoly, assume_image=False):
    """(h, m) with g = h^m and h irreducible.

    Raises ``NotPowerOfIrreducible`` when g is not of that form.  Over Q the
    irreducibility of h is decided by a rational root test and factorization
    patterns modulo primes; if neither settles it, ``assume_image=True``
    accepts h (an image of an irreducible polynomial under a covariant is
    always a power of an irreducible), otherwise ``IrreducibilityUndecided``.
    """
    if not g.is_monic():
        raise TransformError("polynomial must be monic")
    if g.degree() < 1:
        raise TransformError("polynomial must have positive degree")
    dom = g.domain
    if dom == QQ:
        return _decompose_rational(g, assume_image)
    if not hasattr(dom, "order"):
        raise TransformError(f"unsupported coefficient domain {dom}")
    q = dom.order
    x = UniPoly.x(dom)
    h = x % g
    for k in range(1, g.degree() + 1):
        h = h.powmod(q, g)
        common = (h - x).gcd(g)
        if common.degree() > 0:
            break
    if common.degree() != k:
        raise NotPowerOfIrreducible(f"{g} has several irreducible factors of degree {k}")
    m, r = divmod(g.degree(), k)
    if r or common ** m != g:
        raise NotPowerOfIrreducible(f"{g} is not a power of {common}")
    return common, m


def _squarefree_part_q(g: UniPoly) -> UniPoly:
    d = g.derivative()
    return g // g.gcd(d) if d else g


RATIONAL_ROOT_LIMIT = 10 ** 12


def irreducible_over_q(h: UniPoly):
    """True, False, or None when undecided by the available tests.

    Factorization patterns modulo small primes can prove irreducibility; a
    rational root (searched only for moderate coefficients) proves the
    opposite.
    """
    n = h.degree()
    if n <= 1:
        return n == 1
    den = 1
    for c in h.coeffs:
        d = Fraction(c).denominator
        den = den * d // gcd(den, d)
    ints = [int(c * den) for c in h.coeffs]
    possible = set(range(n + 1))
    for p in _SMALL_PRIMES:
        if ints[-1] % p == 0:
            continue
        hp = UniPoly(gf.GF(p), ints)
        if not hp.is_squarefree():
            continue
        degs = [d for d, part in gf.distinct_degree_factor(hp)
                for _ in range(part.degree() // d)]
        sums = {0}
        for d in degs:
            sums |= {s + d for s in sums}
        possible &= sums
        if possible == {0, n}:
            return True
    small = abs(ints[0]) <= RATIONAL_ROOT_LIMIT and abs(ints[-1]) <= RATIONAL_ROOT_LIMIT
    if small and rational_roots(h):
        return False
    if n <= 3 and small:
        return True
    return None


def _decompose_rational(g, assume_image):
    s = _squarefree_part_q(g).monic()
    m, r = divmod(g.degree(), s.degree())
    if r or s ** m != g:
        raise NotPowerOfIrreducible(f"{g} is not a power of one polynomial")
    verdict = irreducible_over_q(s)
    if verdict is False:
        raise NotPowerOfIrreducible(f"{s} is reducible over Q")
    if verdict is None and not assume_image:
        raise IrreducibilityUndecided(f"irreducibility of {s} over Q is not decided")
    return s, m


def is_irreducible_over(f: UniPoly, assume_image=False) -> bool:
    if f.domain == QQ:
        v = irreducible_over_q(f.monic())
        if v is None:
            if assume_image:
                return True
            raise IrreducibilityUndecided(f"irreducibility of {f} over Q is not decided")
        return v
    return gf.is_irreducible(f)


# ---------------------------------------------------------------------------
# scaling and the normalized equations
# ---------------------------------------------------------------------------

def scale_tail(f: UniPoly):
    """Rescale the root so that linear and constant coefficients agree.

    Returns ``(g, mu)``: g is the minimal polynomial of mu*xi, mu = c/d, where
    c and d are the linear and constant coefficients of f.
    """
    c, d = f[1], f[0]
    if not c or not d:
        raise TransformError("linear and constant coefficients must be nonzero")
    dom = f.domain
    mu = dom.normalize(c * dom.inv(d))
    # mu^n f(y / mu) = sum f_j mu^(n-j) y^j
    n = f.degree()
    out, pw = [], dom.one
    for j in range(n, -1, -1):
        out.append(dom.normalize(f[j] * pw))
        pw = dom.normalize(pw * mu)
    return UniPoly(dom, list(reversed(out))), mu


SHAPES = {
    "quintic_bcc": (5, lambda g: g[4] == 0 and g[2] == 0 and g[1] == g[0] and bool(g[1])),
    "quintic_exception": (5, lambda g: g == UniPoly(g.domain, [1, 0, 0, 1, 0, 1])),
    "sextic_bcdd": (6, lambda g: g[5] == 0 and g[3] == 0 and g[1] == g[0] and bool(g[1])),
    "cubic_aa": (3, lambda g: g[2] == 0 and g[1] == g[0]),
    "quartic_abb": (4, lambda g: g[3] == 0 and g[1] == g[0]),
    "trace_zero": (None, lambda g: g[g.degree() - 1] == 0),
}


def shape_ok(tag: str, g: UniPoly) -> bool:
    deg, pred = SHAPES[tag]
    return g.is_monic() and (deg is None or g.degree() == deg) and pred(g)


@dataclass
class NormalizedEquation:
    """A normalized equation together with the data needed to re-verify it.

    ``witness`` is the generator of K[x]/(f) (as a polynomial in x) whose
    minimal polynomial is ``transformed``.
    """

    original: UniPoly
    transformed: UniPoly
    shape: str
    scale: object
    witness: UniPoly
    notes: dict = field(default_factory=dict)

    def verify(self) -> dict:
        L = QuotientField(self.original)
        cp = L.charpoly(L.from_poly(self.witness))
        return {
            "shape_ok": shape_ok(self.shape, self.transformed),
            "irreducible": is_irreducible_over(self.transformed),
            "witness_charpoly_matches": cp == self.transformed,
        }

    def to_json(self) -> dict:
        dom = self.original.domain
        return {
            "field": dom.descriptor,
            "original": self.original.format("x"),
            "normalized": self.transformed.format("y"),
            "shape": self.shape,
            "scale": dom.format_coef(self.scale) if self.scale is not None else None,
            "witness": self.witness.format("x"),
            "notes": self.notes,
        }


def _require_irreducible(f: UniPoly, n: int) -> UniPoly:
    if f.degree() != n:
        raise TransformError(f"expected a polynomial of degree {n}, got degree {f.degree()}")
    f = f.monic()
    if not f.is_squarefree():
        raise TransformError(f"{f} is not separable")
    if f.domain == QQ:
        v = irreducible_over_q(f)
        if v is False:
            raise TransformError(f"{f} is reducible")
        if v is None:
            raise TransformError(f"cannot decide irreducibility of {f} over Q")
    elif not gf.is_irreducible(f):
        raise TransformError(f"{f} is reducible")
    return f


def _finish(f, g, witness_elem, L, shape, notes):
    """Apply scale_tail to g and return the normalized equation."""
    scaled, mu = scale_tail(g)
    w = witness_elem * mu
    return NormalizedEquation(f, scaled, shape, mu, w.as_poly(), notes)


# -- trace zero --------------------------------------------------------------

def trace_zero_generator(f: UniPoly):
    """A generator of K[x]/(f) of trace zero, as an element of the quotient field."""
    n = f.degree()
    if n <= 2:
        raise TransformError("needs degree > 2")
    f = f.monic()
    L = QuotientField(f)
    dom = f.domain
    char = getattr(dom, "characteristic", 0)
    x = L.gen
    if char == 0 or n % char:
        # Tr(x) = -a_1, so x + a_1/n has trace zero
        return x + dom.normalize(f[n - 1] * dom.inv(dom.normalize(n)))
    if not hasattr(dom, "order"):
        raise UnsupportedCase("UNSUPPORTED", f"trace-zero search over {dom}")
    for elem in L.elements():
        if L.trace(elem):
            continue
        if _generates(L, elem):
            return elem
    raise UnsupportedCase("NO_TRACE_ZERO_GENERATOR",
                          f"K[x]/({f.format()}) has no generator of trace zero")


def _generates(L, elem) -> bool:
    cp = L.charpoly(elem)
    if L.base == QQ:
        return cp.gcd(cp.derivative()).degree() == 0 and irreducible_over_q(cp) is not False
    try:
        h, m = power_of_irreducible_decompose(cp)
    except NotPowerOfIrreducible:
        return False
    return m == 1


def minimal_polynomial_in(L: QuotientField, elem) -> UniPoly:
    """Minimal polynomial over K of an element of K[x]/(f) (f irreducible)."""
    cp = L.charpoly(elem)
    if L.base == QQ:
        h, _ = _decompose_rational(cp, assume_image=True)
        return h
    h, _ = power_of_irreducible_decompose(cp)
    return h


# -- degree 3 and 4 ------------------------------------------------------------

def _char_divides(dom, n):
    char = getattr(dom, "characteristic", 0)
    return char != 0 and n % char == 0


def normalize_cubic(f: UniPoly) -> NormalizedEquation:
    """x^3 + a x + a for an irreducible separable cubic."""
    f = _require_irreducible(f, 3)
    dom = f.domain
    L = QuotientField(f)
    x0 = trace_zero_generator(f)
    g = L.charpoly(x0)
    notes = {"trace_zero_poly": g.format("y")}
    b, c = g[1], g[0]
    if b:
        return _finish(f, g, x0, L, "cubic_aa", notes)
    # b == 0 needs char != 3: y = x + x^2 satisfies y^3 + 3c y + c - c^2
    y = x0 + x0 * x0
    g2 = L.charpoly(y)
    notes["squared_shift_poly"] = g2.format("y")
    expected = UniPoly(dom, [c - c * c, 3 * c, 0, 1])
    if g2 != expected:
        raise ArithmeticError(f"y = x + x^2 gave {g2}, expected {expected}")
    return _finish(f, g2, y, L, "cubic_aa", notes)


def quartic_shift_linear_coefficient(b, d):
    """Linear coefficient of the minimal polynomial of b/2 + x + x^2 when x^4 + b x^2 + d = 0.

    It is 4d - b^2, nonzero because b^2 - 4d is not a square when the
    biquadratic is irreducible.
    """
    return 4 * d - b * b


def normalize_quartic(f: UniPoly) -> NormalizedEquation:
    """x^4 + a x^2 + b x + b for an irreducible separable quartic."""
    f = _require_irreducible(f, 4)
    dom = f.domain
    L = QuotientField(f)
    x0 = trace_zero_generator(f)
    g = L.charpoly(x0)
    notes = {"trace_zero_poly": g.format("y")}
    if g[1]:
        return _finish(f, g, x0, L, "quartic_abb", notes)
    if _char_divides(dom, 2):
        raise UnsupportedCase("UNSUPPORTED", "biquadratic trace-zero quartic in characteristic 2")
    b, d = g[2], g[0]
    half_b = dom.normalize(b * dom.inv(dom.normalize(2)))
    y = x0 + x0 * x0 + half_b
    g2 = L.charpoly(y)
    notes["squared_shift_poly"] = g2.format("y")
    lin = dom.normalize(quartic_shift_linear_coefficient(b, d))
    if g2[1] != lin or g2[3] != 0:
        raise ArithmeticError(f"y = b/2 + x + x^2 gave {g2}, expected linear coefficient {lin}")
    return _finish(f, g2, y, L, "quartic_abb", notes)


# -- degree 5 --------------------------------------------------------------------

@lru_cache(maxsize=None)
def hermite_form() -> TschirnhausForm:
    from .fixtures import load_hermite_form

    return load_hermite_form()


def _table_polynomial(K):
    """The tabulated quintic for small fields, embedded from a subfield if needed."""
    order = K.order
    entry = gf.quintic_table_entry(order)
    if entry is None:
        return None
    small_field, poly = entry
    if small_field == K:
        return poly
    emb = gf.embed_subfield(small_field, K)
    return UniPoly(K, [emb(c) for c in poly.coeffs])


def _root_in(L: QuotientField, g: UniPoly):
    """The root of g (over K) in L that is least in the coordinate order."""
    gl = UniPoly(L, [L.normalize(c) for c in g.coeffs])
    rts = gf.roots(gl)
    if not rts:
        raise ArithmeticError(f"{g} has no root in {L}")
    return min(rts, key=lambda r: _coord_key(r))


def _coord_key(elem):
    key = []
    for c in reversed(elem.c):
        key.append(tuple(c.c[::-1]) if hasattr(c, "c") else c)
    return key


QQ_SEARCH_NORM = 5


def generator_candidates(L: QuotientField):
    """Elements of L in the deterministic search order.

    Finite K: lexicographic in (c_{n-1}, ..., c_0).  K = Q: integer vectors
    by increasing sup-norm up to 5, then by number of nonzero entries, then
    lexicographically, so that x itself comes early.
    """
    if L.base == QQ:
        for bound in range(1, QQ_SEARCH_NORM + 1):
            level = [d for d in itertools.product(range(-bound, bound + 1), repeat=L.n)
                     if max(abs(v) for v in d) == bound]
            level.sort(key=lambda d: (sum(1 for v in d if v), d))
            for digits in level:
                yield L.normalize(UniPoly(QQ, list(reversed(digits))))
        return
    yield from L.elements()


def normalize_quintic(f: UniPoly, max_candidates=None) -> NormalizedEquation:
    """x^5 + b x^3 + c x + c (x^5 + x^3 + 1 over GF(2)) generating K[x]/(f)."""
    f = _require_irreducible(f, 5)
    K = f.domain
    L = QuotientField(f)
    if hasattr(K, "order") and K.order == 2:
        target = UniPoly(K, [1, 0, 0, 1, 0, 1])
        r = _root_in(L, target)
        return NormalizedEquation(f, target, "quintic_exception", None, r.as_poly(),
                                  {"source": "exception over GF(2)"})
    if hasattr(K, "order") and K.order < 41:
        table = _table_polynomial(K)
        if table is None:
            raise UnsupportedCase("UNSUPPORTED", f"no tabulated quintic for {K}")
        if not gf.is_irreducible(table):
            raise ArithmeticError(f"tabulated polynomial {table} is reducible over {K}")
        r = _root_in(L, table)
        if table[1] == table[0]:
            return NormalizedEquation(f, table, "quintic_bcc", K.one, r.as_poly(),
                                      {"source": "table"})
        return _finish(f, table, r, L, "quintic_bcc", {"source": "table"})
    tf = hermite_form()
    tried = 0
    for xi in generator_candidates(L):
        tried += 1
        if max_candidates is not None and tried > max_candidates:
            break
        g = L.charpoly(xi)
        if not g.is_squarefree():
            continue  # xi is not a generator
        phi = tf.specialize(g)
        gbar = image_polynomial(g, phi)
        if not gbar[1] or not gbar[0]:
            continue
        if not is_irreducible_over(gbar, assume_image=True):
            continue
        xbar = phi.compose(xi.as_poly()) % f
        notes = {"source": "hermite", "candidates_tried": tried,
                 "generator": xi.as_poly().format("x"), "hermite_image": gbar.format("y")}
        return _finish(f, gbar, L.from_poly(xbar), L, "quintic_bcc", notes)
    raise SearchExhausted(f"no suitable generator among {tried} candidates")


# -- degree 6 --------------------------------------------------------------------

def factor_degrees(g: UniPoly):
    """Degrees of the irreducible factors, with multiplicity, over a finite field."""
    return sorted((h.degree() for h, m in gf.factor(g) for _ in range(m)), reverse=True)


def normalize_sextic(f: UniPoly, fallback=None) -> NormalizedEquation:
    """x^6 + b x^4 + c x^2 + d x + d from the Joubert covariant.

    The Joubert image is used directly.  If it is not irreducible,
    ``TransformNotIrreducible`` is raised unless ``fallback="search"``, which
    scans generators of K[x]/(f) for a minimal polynomial with vanishing
    x^5 and x^3 coefficients and nonzero linear coefficient.
    """
    dom = f.domain
    if getattr(dom, "characteristic", 0) == 2:
        raise UnsupportedCase("CHAR2_UNSUPPORTED",
                              "the sextic normal form is not known to exist in characteristic 2")
    f = _require_irreducible(f, 6)
    L = QuotientField(f)
    fbar = joubert_image().apply(f)
    notes = {"source": "joubert", "joubert_image": fbar.format("y")}
    irreducible = fbar[1] and is_irreducible_over(fbar, assume_image=False)
    if irreducible:
        # the root phi_1(xi) lies in the twin sextic field, not in K[x]/(f),
        # so a witness exists only when fbar also has a root in L
        rts = gf.roots(UniPoly(L, [L.normalize(c) for c in fbar.coeffs])) \
            if hasattr(dom, "order") else []
        if rts:
            r = min(rts, key=_coord_key)
            return _finish(f, fbar, r, L, "sextic_bcdd", notes)
        scaled, mu = scale_tail(fbar)
        notes["witness"] = "none: the image root does not lie in K[x]/(f)"
        return NormalizedEquation(f, scaled, "sextic_bcdd", mu, UniPoly(dom, []), notes)
    degs = factor_degrees(fbar) if hasattr(dom, "order") else None
    if fallback != "search":
        raise TransformNotIrreducible(
            f"Joubert image {fbar.format('y')} is not irreducible (factor degrees {degs})",
            fbar, degs)
    for xi in generator_candidates(L):
        g = L.charpoly(xi)
        if g[5] or g[3] or not g[1] or not g[0]:
            continue
        if not g.is_squarefree():
            continue
        try:
            if not is_irreducible_over(g):
                continue
        except IrreducibilityUndecided:
            continue
        notes.update(source="search", joubert_factor_degrees=degs,
                     generator=xi.as_poly().format("x"))
        return _finish(f, g, xi, L, "sextic_bcdd", notes)
    raise SearchExhausted("no generator with vanishing x^5 and x^3 coefficients")
