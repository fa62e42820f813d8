import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from tforge import covariants as cov
from tforge import gf
from tforge import transform as T
from tforge.domains import GF, QQ, ZZ
from tforge.polyring import MultiPoly
from tforge.quotient import QuotientField
from tforge.unipoly import UniPoly


def brute_image(f_roots, phi_values, dom):
    """prod (Y - phi_i), straight from the values."""
    out = UniPoly(dom, [dom.one])
    for v in phi_values:
        out = out * UniPoly(dom, [dom.normalize(-v), dom.one])
    return out


def poly_from_roots(roots, dom):
    return brute_image(None, roots, dom)


# -- resultant paths ------------------------------------------------------------

@pytest.mark.parametrize("q", [7, 11, 25, 27])
def test_resultant_paths_agree_with_charpoly(q, rng):
    K = gf.field_of_order(q)
    for _ in range(15):
        n = rng.randrange(2, 6)
        f = gf.random_irreducible(K, n, rng)
        phi = UniPoly(K, [K.random_element(rng) for _ in range(n)])
        ref = T.image_by_charpoly(f, phi)
        assert T.image_by_bareiss(f, phi) == ref
        assert T.image_by_interpolation(f, phi) == ref


def test_resultant_paths_agree_over_q(rng):
    for _ in range(10):
        n = rng.randrange(2, 5)
        f = UniPoly(QQ, [Fraction(rng.randrange(-5, 6)) for _ in range(n)] + [1])
        if not f.is_squarefree():
            continue
        phi = UniPoly(QQ, [Fraction(rng.randrange(-4, 5), rng.randrange(1, 4)) for _ in range(n)])
        ref = T.image_by_charpoly(f, phi)
        assert T.image_by_bareiss(f, phi) == ref
        assert T.image_by_interpolation(f, phi) == ref


def test_image_from_known_roots():
    F = GF(13)
    roots = [1, 3, 4, 9]
    f = poly_from_roots(roots, F)
    phi = UniPoly.parse("x^2 + 2*x", F)
    expected = brute_image(None, [phi(r) for r in roots], F)
    for method in ("bareiss", "interpolate", "charpoly"):
        assert T.image_polynomial(f, phi, method) == expected


def test_resultant_against_sympy():
    x = sympy.symbols("x")
    f = UniPoly.parse("x^4 - 3*x + 1", QQ)
    g = UniPoly.parse("2*x^2 + x - 5", QQ)
    from tforge.unipoly import resultant

    ref = sympy.resultant(x ** 4 - 3 * x + 1, 2 * x ** 2 + x - 5, x)
    assert resultant(f, g) == ref


# -- Tschirnhaus forms -------------------------------------------------------------

def test_hermite_form_roundtrip(rng):
    c = cov.hermite_covariant()
    tf = T.hermite_form()
    assert tf.is_homogeneous_weight(25)
    for _ in range(40):
        p = rng.choice([101, 1009, 65537, 2 ** 31 - 1])
        x = [rng.randrange(p) for _ in range(5)]
        a = [v % p for v in T.elementary_a_values(x)]
        for i in range(5):
            assert tf(a, x[i]) % p == c[i + 1].evaluate_mod(x, p)


def test_trace_zero_form_extracts_exactly():
    x = MultiPoly.gens(ZZ, 4)
    c = cov.build_covariant(4 * x[0] - (x[0] + x[1] + x[2] + x[3]), 4)
    tf = T.tschirnhaus_extract(c)
    # phi_1 = 4 x1 - e1, so phi(a, X) = 4 X + a1
    a1 = MultiPoly.gens(ZZ, 4, T.a_names(4))[0]
    assert tf.pj[1] == MultiPoly.constant(ZZ, 4, 4, T.a_names(4))
    assert tf.pj[0] == a1


def test_extraction_refuses_twisted_and_sign_covariants():
    with pytest.raises(T.TransformError):
        T.tschirnhaus_extract(cov.joubert_covariant())
    with pytest.raises(T.TransformError):
        T.tschirnhaus_extract(cov.hermite_psi_tilde())


@pytest.mark.parametrize("p", [7, 11, 13, 101])
def test_joubert_image_matches_root_values(p, rng):
    """f_bar from the symmetric-function formulas equals prod (Y - phi_i(xi))."""
    F = GF(p)
    phi = cov.joubert_covariant()
    ji = T.joubert_image()
    for _ in range(10):
        roots = rng.sample(range(p), 6)
        f = poly_from_roots(roots, F)
        vals = [phi[i].evaluate_mod(roots, p) for i in range(1, 7)]
        assert ji.apply(f) == brute_image(None, vals, F)


def test_hermite_image_matches_root_values(rng):
    p = 1009
    F = GF(p)
    phi = cov.hermite_covariant()
    for _ in range(10):
        roots = rng.sample(range(p), 5)
        f = poly_from_roots(roots, F)
        vals = [phi[i].evaluate_mod(roots, p) for i in range(1, 6)]
        assert T.transformed_polynomial(f, T.hermite_form()) == brute_image(None, vals, F)


def test_hermite_image_has_no_x4_or_x2_term(rng):
    for q in (41, 49, 101):
        K = gf.field_of_order(q)
        for _ in range(5):
            f = gf.random_irreducible(K, 5, rng)
            g = T.transformed_polynomial(f, T.hermite_form())
            assert not g[4] and not g[2]


@pytest.mark.parametrize("field,a", [(QQ, 2), (QQ, 3), (GF(11), 2)])
def test_pure_quintic_goes_to_y5(field, a):
    f = UniPoly(field, [-a, 0, 0, 0, 0, 1])
    assert T.transformed_polynomial(f, T.hermite_form()) == UniPoly.x(field) ** 5


def test_hermite_psi_vanishes_at_fifth_roots_of_unity():
    p, z = 11, 3
    assert pow(z, 5, p) == 1 and z != 1
    pt = [pow(z, k, p) for k in range(5)]
    assert cov.hermite_psi1().evaluate_mod(pt, p) == 0


def test_transform_input_checks():
    tf = T.hermite_form()
    with pytest.raises(T.TransformError):
        T.transformed_polynomial(UniPoly.parse("2*x^5 + 1", GF(7)), tf)
    with pytest.raises(T.TransformError):
        T.transformed_polynomial(UniPoly.parse("x^4 + 1", GF(7)), tf)
    with pytest.raises(T.TransformError):
        T.transformed_polynomial(UniPoly.parse("(x+1)^2*(x^3+x+1)", GF(7)), tf)


# -- h^m decomposition ------------------------------------------------------------

def test_decomposition_over_finite_fields(rng):
    for q in (2, 5, 9):
        K = gf.field_of_order(q)
        for _ in range(10):
            d = rng.randrange(1, 4)
            m = rng.randrange(1, 4)
            h = gf.random_irreducible(K, d, rng)
            assert T.power_of_irreducible_decompose(h ** m) == (h, m)


def test_decomposition_rejects_mixed_products():
    F = GF(5)
    with pytest.raises(T.NotPowerOfIrreducible):
        T.power_of_irreducible_decompose(UniPoly.parse("(x^2+2)*(x^2+3)", F))
    with pytest.raises(T.NotPowerOfIrreducible):
        T.power_of_irreducible_decompose(UniPoly.parse("(x^2+2)*(x+1)", F))


def test_decomposition_over_q():
    h = UniPoly.parse("x^3 - 2", QQ)
    assert T.power_of_irreducible_decompose(h ** 2) == (h, 2)
    assert T.power_of_irreducible_decompose(UniPoly.parse("x^5", QQ)) == (UniPoly.x(QQ), 5)
    with pytest.raises(T.NotPowerOfIrreducible):
        T.power_of_irreducible_decompose(UniPoly.parse("x^2 - 1", QQ))


def test_irreducibility_over_q_is_honest():
    assert T.irreducible_over_q(UniPoly.parse("x^5 - x - 1", QQ)) is True
    assert T.irreducible_over_q(UniPoly.parse("x^3 - 8", QQ)) is False
    # x^4 + 1 factors mod every prime; without a root it stays undecided
    assert T.irreducible_over_q(UniPoly.parse("x^4 + 1", QQ)) is None
    with pytest.raises(T.IrreducibilityUndecided):
        T.power_of_irreducible_decompose(UniPoly.parse("x^4 + 1", QQ))


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=5))
def test_rational_irreducibility_agrees_with_sympy(coeffs):
    f = UniPoly(QQ, [Fraction(c) for c in coeffs] + [1])
    verdict = T.irreducible_over_q(f)
    x = sympy.symbols("x")
    ref = sympy.Poly(list(reversed(coeffs + [1])), x).is_irreducible
    assert verdict is None or verdict == ref


# -- scaling and normalizers --------------------------------------------------------

@given(st.lists(st.integers(1, 100), min_size=4, max_size=4))
def test_scale_tail_matches_last_coefficients(coeffs):
    F = GF(101)
    f = UniPoly(F, coeffs + [1])
    g, mu = T.scale_tail(f)
    assert g[1] == g[0] and g.is_monic()
    # mu * xi is a root of g whenever xi is a root of f
    L = QuotientField(f) if gf.is_irreducible(f) else None
    if L is not None:
        assert g(L.gen * mu) == L.zero


def test_scale_tail_requires_nonzero_tail():
    with pytest.raises(T.TransformError):
        T.scale_tail(UniPoly.parse("x^3 + x^2 + 1", GF(5)))


def check_normalized(ne):
    rep = ne.verify()
    assert rep == {"shape_ok": True, "irreducible": True, "witness_charpoly_matches": True}


@pytest.mark.parametrize("q", [5, 7, 11, 25, 49])
def test_cubic_normalizer(q, rng):
    K = gf.field_of_order(q)
    for _ in range(10):
        check_normalized(T.normalize_cubic(gf.random_irreducible(K, 3, rng)))


def test_cubic_squared_shift_formula():
    a, c, y = sympy.symbols("a c y")
    # x^3 + c = 0 (trace and linear coefficient zero); y = x + x^2
    x = sympy.symbols("x")
    field = sympy.Poly(x ** 3 + c, x)
    powers = [sympy.Poly(sympy.expand((x + x ** 2) ** k), x).rem(field) for k in range(4)]
    # y^3 + 3c y + c - c^2 must vanish in Q(c)[x]/(x^3 + c)
    combo = powers[3] + 3 * c * powers[1] + (c - c ** 2) * powers[0]
    assert combo.is_zero


def test_cubic_with_vanishing_linear_term():
    F = GF(7)
    f = UniPoly.parse("x^3 + 3", F)  # x^3 - 4, irreducible since 4 is not a cube mod 7
    ne = T.normalize_cubic(f)
    assert "squared_shift_poly" in ne.notes
    check_normalized(ne)


@pytest.mark.parametrize("q", [5, 7, 9, 13])
def test_quartic_normalizer(q, rng):
    K = gf.field_of_order(q)
    for _ in range(10):
        check_normalized(T.normalize_quartic(gf.random_irreducible(K, 4, rng)))


def test_quartic_linear_coefficient_formula():
    b, d, x = sympy.symbols("b d x")
    modulus = sympy.Poly(x ** 4 + b * x ** 2 + d, x)
    yv = b / 2 + x + x ** 2
    # charpoly of multiplication by y on the basis 1, x, x^2, x^3
    cols = []
    for k in range(4):
        r = sympy.Poly(sympy.expand(yv * x ** k), x).rem(modulus)
        cols.append([r.coeff_monomial(x ** i) for i in range(4)])
    m = sympy.Matrix(cols).T
    t = sympy.symbols("t")
    cp = sympy.Poly(m.charpoly(t).as_expr(), t)
    assert sympy.expand(cp.coeff_monomial(t) - T.quartic_shift_linear_coefficient(b, d)) == 0
    assert sympy.expand(cp.coeff_monomial(t ** 3)) == 0


def test_biquadratic_quartic():
    F = GF(7)
    f = UniPoly.parse("x^4 + 3*x^2 + 5", F)
    assert gf.is_irreducible(f)
    ne = T.normalize_quartic(f)
    assert "squared_shift_poly" in ne.notes
    check_normalized(ne)


def test_small_degree_over_q():
    check_normalized(T.normalize_cubic(UniPoly.parse("x^3 - 2", QQ)))
    check_normalized(T.normalize_quartic(UniPoly.parse("x^4 + x + 1", QQ)))


def test_cubic_in_characteristic_three():
    F = GF(3)
    ne = T.normalize_cubic(UniPoly.parse("x^3 + 2*x + 1", F))
    check_normalized(ne)


def test_normalizers_reject_reducible_input():
    with pytest.raises(T.TransformError):
        T.normalize_cubic(UniPoly.parse("x^3 - 1", GF(7)))
    with pytest.raises(T.TransformError):
        T.normalize_quintic(UniPoly.parse("x^4 + 1", GF(7)))


@pytest.mark.parametrize("q", [41, 43, 49, 53])
def test_quintic_normalizer_from_covariant(q, rng):
    K = gf.field_of_order(q)
    for _ in range(5):
        ne = T.normalize_quintic(gf.random_irreducible(K, 5, rng))
        assert ne.notes["source"] == "hermite"
        check_normalized(ne)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11, 16, 32])
def test_quintic_normalizer_from_table(q, rng):
    K = gf.field_of_order(q)
    for _ in range(3):
        ne = T.normalize_quintic(gf.random_irreducible(K, 5, rng))
        assert ne.notes["source"] == "table"
        check_normalized(ne)


def test_quintic_exception_over_gf2():
    ne = T.normalize_quintic(UniPoly.parse("x^5 + x^2 + 1", GF(2)))
    assert ne.transformed == UniPoly.parse("x^5 + x^3 + 1", GF(2))
    check_normalized(ne)


def test_quintic_over_q():
    ne = T.normalize_quintic(UniPoly.parse("x^5 - x - 1", QQ))
    assert ne.shape == "quintic_bcc"
    assert T.shape_ok("quintic_bcc", ne.transformed)
    L = QuotientField(ne.original)
    assert L.charpoly(L.from_poly(ne.witness)) == ne.transformed


def test_quintic_search_limit():
    with pytest.raises(T.SearchExhausted):
        T.normalize_quintic(gf.random_irreducible(GF(41), 5, random.Random(1)), max_candidates=3)


@given(st.integers(0, 10 ** 6))
def test_nonvanishing_s4_gives_irreducible_image(seed):
    """S4(xi) != 0 forces f_bar irreducible when f is irreducible."""
    rng = random.Random(seed)
    p = 41
    F = GF(p)
    f = gf.random_irreducible(F, 5, rng)
    g = T.transformed_polynomial(f, T.hermite_form())
    if g[1]:  # the linear coefficient of f_bar is a nonzero multiple of S4(f)
        assert T.power_of_irreducible_decompose(g)[1] == 1


# -- sextics ----------------------------------------------------------------------

def test_sextic_characteristic_two_is_unsupported():
    with pytest.raises(T.UnsupportedCase) as err:
        T.normalize_sextic(UniPoly.parse("x^6 + x + 1", GF(2)))
    assert err.value.code == "CHAR2_UNSUPPORTED"


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_joubert_image_factors_with_evidence(q, rng):
    K = gf.field_of_order(q)
    f = gf.random_irreducible(K, 6, rng)
    with pytest.raises(T.TransformNotIrreducible) as err:
        T.normalize_sextic(f)
    assert sum(err.value.factor_degrees) == 6
    assert err.value.image == T.joubert_image().apply(f)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_sextic_fallback_search(q, rng):
    K = gf.field_of_order(q)
    ne = T.normalize_sextic(gf.random_irreducible(K, 6, rng), fallback="search")
    assert ne.notes["source"] == "search"
    check_normalized(ne)


def test_joubert_image_shape(rng):
    F = GF(11)
    f = gf.random_irreducible(F, 6, rng)
    g = T.joubert_image().apply(f)
    assert g.degree() == 6 and not g[5] and not g[3]
    D = T.discriminant(f)
    assert g[1] == F.normalize(32 * D ** 3)


def test_discriminant_matches_sympy():
    x = sympy.symbols("x")
    f = UniPoly.parse("x^5 - 3*x^2 + x - 7", QQ)
    assert T.discriminant(f) == sympy.discriminant(x ** 5 - 3 * x ** 2 + x - 7, x)


def test_normalized_equation_json():
    ne = T.normalize_cubic(UniPoly.parse("x^3 + x + 1", GF(5)))
    out = ne.to_json()
    assert out["field"] == "GF(5)" and out["shape"] == "cubic_aa"
    assert out["normalized"].startswith("y^3")
