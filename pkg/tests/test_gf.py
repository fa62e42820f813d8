import itertools

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from tforge import gf
from tforge.domains import GF, parse_field
from tforge.quotient import QuotientField
from tforge.unipoly import UniPoly


def field(q):
    return gf.field_of_order(q)


@pytest.mark.parametrize("q", [4, 8, 9, 25, 27, 32, 49, 121])
def test_frobenius_is_a_ring_map(q, rng):
    K = field(q)
    for _ in range(10_000 if q < 50 else 2000):
        a, b = K.random_element(rng), K.random_element(rng)
        assert (a + b).frobenius() == a.frobenius() + b.frobenius()
        assert (a * b).frobenius() == a.frobenius() * b.frobenius()


@pytest.mark.parametrize("q", [4, 8, 9, 16, 27, 25, 49, 125, 256, 243, 343, 2 ** 12])
def test_frobenius_fixes_exactly_the_prime_field(q):
    K = field(q)
    fixed = [x for x in K.elements() if x.frobenius() == x]
    assert len(fixed) == K.p
    assert all(x.is_prime_field() for x in fixed)


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 125, 243, 729, 1024, 2048])
def test_trace_is_linear_and_onto(q, rng):
    K = field(q)
    elems = list(K.elements())
    traces = {x: x.trace() for x in elems}
    assert set(traces.values()) == set(range(K.p))
    for _ in range(200):
        a, b = rng.choice(elems), rng.choice(elems)
        c = rng.randrange(K.p)
        assert traces[a * c + b] == (c * traces[a] + traces[b]) % K.p
    # each value is taken equally often
    counts = [sum(1 for v in traces.values() if v == t) for t in range(K.p)]
    assert len(set(counts)) == 1


def test_is_irreducible_examples():
    assert gf.is_irreducible(UniPoly.parse("x^2+1", GF(3)))
    assert not gf.is_irreducible(UniPoly.parse("x^2+1", GF(5)))
    K = field(32)
    assert gf.is_irreducible(UniPoly.parse("x^5 + c*x^3 + x + 1", K))


@pytest.mark.parametrize("q,max_deg", [(2, 8), (3, 6), (4, 4), (5, 4), (7, 4)])
def test_is_irreducible_matches_brute_force(q, max_deg, rng):
    K = field(q)
    for _ in range(60):
        n = rng.randrange(1, max_deg + 1)
        f = UniPoly(K, [K.random_element(rng) for _ in range(n)] + [K.one])
        assert gf.is_irreducible(f) == gf.is_irreducible_bruteforce(f)


@given(st.lists(st.integers(0, 12), min_size=2, max_size=9), st.sampled_from([2, 3, 5, 13]))
def test_is_irreducible_matches_sympy(coeffs, p):
    f = UniPoly(GF(p), coeffs + [1])
    x = sympy.symbols("x")
    ref = sympy.Poly(list(reversed(coeffs + [1])), x, modulus=p).is_irreducible
    assert gf.is_irreducible(f) == ref


@pytest.mark.parametrize("q", [2, 3, 4, 9, 11])
def test_factor_reconstructs(q, rng):
    K = field(q)
    for _ in range(25):
        n = rng.randrange(1, 9)
        f = UniPoly(K, [K.random_element(rng) for _ in range(n)] + [K.one])
        parts = gf.factor(f)
        prod_ = UniPoly(K, [K.one])
        for h, m in parts:
            assert gf.is_irreducible(h) and h.is_monic()
            prod_ = prod_ * h ** m
        assert prod_ == f


def test_roots_and_subfield_embedding():
    for small, big in [(4, 16), (8, 64), (9, 81), (4, 64), (3, 27)]:
        S, B = field(small), field(big)
        emb = gf.embed_subfield(S, B)
        elems = list(S.elements())
        images = {emb(e) for e in elems}
        assert len(images) == len(elems)
        for a, b in itertools.product(elems[:6], repeat=2):
            assert emb(a * b) == emb(a) * emb(b)
            assert emb(a + b) == emb(a) + emb(b)
    f = UniPoly.parse("x^3 - x", GF(5))
    assert sorted(gf.roots(f)) == [0, 1, 4]


def test_minimal_polynomial_examples():
    F4 = field(4)
    a = F4.gen
    assert gf.minimal_polynomial(a) == UniPoly.parse("x^2+x+1", GF(2))
    F16 = field(16)
    assert gf.minimal_polynomial(F16.one) == UniPoly.parse("x+1", GF(2))
    f = UniPoly.parse("x^5-x-1", GF(3))
    L = QuotientField(f)
    assert gf.minimal_polynomial(L.gen) == f


@pytest.mark.parametrize("q", [8, 16, 27, 81])
def test_minimal_polynomial_properties(q, rng):
    K = field(q)
    n = K.k
    x = UniPoly.x(GF(K.p))
    target = x ** (K.p ** n) - x
    for _ in range(30):
        a = K.random_element(rng)
        m = gf.minimal_polynomial(a)
        assert n % m.degree() == 0
        assert (target % m).is_zero()
        assert gf.is_irreducible(m)


def test_minimal_polynomial_over_intermediate_field():
    F4, F16 = field(4), field(16)
    emb = gf.embed_subfield(F4, F16)
    for a in list(F16.elements())[:40]:
        m = gf.minimal_polynomial(a, F4)
        assert m.degree() in (1, 2)
        assert UniPoly(F16, [emb(c) for c in m.coeffs])(a) == F16.zero


def test_field_descriptors():
    assert parse_field("GF(8)").modulus == gf.TABLE_MODULI[(2, 3)]
    assert parse_field("GF(32)").gen_name == "c"
    assert parse_field("GF(2^3)") == parse_field("GF(8)")
    K = parse_field("GF(9;modulus=t^2+1)")
    assert K.order == 9
    with pytest.raises(ValueError):
        parse_field("GF(9;modulus=t^2+t+1)")  # reducible over GF(3)
    with pytest.raises(ValueError):
        parse_field("GF(12)")


def test_quintic_table():
    rep = gf.verify_quintic_table()
    assert rep["ok"] and rep["passed"] == rep["total"] == 14
    assert rep["exception"]["irreducible"]
    by_field = {r["field"]: r for r in rep["entries"]}
    assert by_field["GF(7)"] == {"field": "GF(7)", "polynomial": "x^5 - 2*x - 2",
                                 "irreducible": True, "shape_ok": True}


def test_quintic_table_reports_corrupted_entries():
    entries = list(gf.QUINTIC_TABLE)
    entries[3] = (3, "x^5 + x^2 + 1")  # wrong shape
    entries[4] = (5, "x^5 + x + 1")  # (x^2 + x + 1)(x^3 - x^2 + 1)
    rep = gf.verify_quintic_table(entries)
    assert not rep["ok"] and rep["passed"] == 12
    rows = {r["field"]: r for r in rep["entries"]}
    assert not rows["GF(3)"]["shape_ok"]
    assert rows["GF(5)"]["shape_ok"] and not rows["GF(5)"]["irreducible"]


@pytest.mark.parametrize("q", [9, 16, 25, 27])
def test_table_entries_for_unlisted_fields(q):
    small, poly = gf.quintic_table_entry(q)
    assert small.order < q
    K = field(q)
    emb = gf.embed_subfield(small, K)
    lifted = UniPoly(K, [emb(c) for c in poly.coeffs])
    assert gf.is_irreducible(lifted) and gf.quintic_shape_ok(lifted)


@pytest.mark.parametrize("p,n,codim", [(2, 4, 2), (2, 6, 2), (3, 6, 2), (2, 10, 4), (5, 6, 2)])
def test_subfield_span(p, n, codim):
    rep = gf.subfield_span_report(p, n)
    assert rep["codim"] == rep["formula"] == codim
    assert rep["ok"]


def test_subfield_span_guard():
    with pytest.raises(ValueError):
        gf.subfield_span_codim(2, 25)


@pytest.mark.parametrize("q,m,d", [(2, 1, 1), (3, 1, 2), (3, 2, 2), (4, 1, 3), (5, 1, 4),
                                   (4, 2, 3), (7, 1, 6), (9, 1, 8)])
def test_vanishing_bound_below_q(q, m, d):
    rep = gf.vanishing_bound_witness(q, m, d)
    assert rep["full_rank"] and rep["counterexample"] is None
    assert rep["min_rank"] == rep["monomials"]


@pytest.mark.parametrize("q", [2, 3, 4])
def test_vanishing_bound_is_sharp(q):
    rep = gf.vanishing_bound_witness(q, 1, q)
    assert not rep["full_rank"]
    assert rep["counterexample"] is not None and rep["bound_respected"]


def test_vanishing_bound_boundary_example():
    rep = gf.vanishing_bound_witness(2, 1, 2)
    assert rep["counterexample"] == {"hyperplane": ["0", "1"], "form": "y0^2 + y0*y1"}


def test_first_irreducible():
    assert gf.first_irreducible(GF(2), 5) == UniPoly.parse("x^5+x^2+1", GF(2))
    assert gf.lex_least_irreducible(2, 5) == tuple(gf.first_irreducible(GF(2), 5).coeffs)
