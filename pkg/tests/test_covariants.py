import itertools

import pytest

from tforge import covariants as cov
from tforge.domains import GF, ZZ
from tforge.polyring import MultiPoly
from tforge.symmetric import Permutation, apply_permutation, elem_sym_of


def test_degree_ledger():
    assert cov.hermite_psi1().degree() == 9
    assert cov.omega1(5).degree() == 6
    assert cov.delta(5).degree() == 10
    assert cov.hermite_phi1().degree() == 25
    assert max(cov.hermite_phi1().degrees()) == 10
    assert cov.joubert_psi1().degree() == 3
    assert cov.delta(6).degree() == 15
    assert cov.joubert_phi1().degree() == 18


def test_hermite_leading_term():
    e, c = cov.hermite_psi1().leading_term()
    assert (e, c) == ((6, 3, 0, 0, 0), -1)


def test_hermite_seed_symmetry():
    psi1 = cov.hermite_psi1()
    for g in cov.point_stabilizer(5, 1):
        assert apply_permutation(psi1, g) == psi1


def test_equivariance():
    assert cov.hermite_psi().is_equivariant()
    assert cov.hermite_omega().is_equivariant()
    assert cov.hermite_psi_tilde().is_equivariant()
    assert cov.hermite_covariant().is_equivariant()
    assert cov.joubert_psi().is_equivariant()
    assert cov.joubert_covariant().is_equivariant()


def test_equivariance_on_every_permutation_for_joubert_psi():
    psi = cov.joubert_psi()
    for p in itertools.permutations(range(1, 7)):
        s = Permutation(p)
        src = psi.source_permutation(s)
        for k in (1, 4):
            img = apply_permutation(psi[k], s)
            assert img == s.sign() * psi[src(k)]


def test_untwisted_check_rejects_joubert():
    psi = cov.joubert_psi()
    plain = cov.Covariant(6, psi.components, "none", "sign")
    assert not plain.is_equivariant()


@pytest.mark.parametrize("p", [None, 2, 3, 5, 7, 11])
def test_hermite_components_distinct(p):
    c = cov.hermite_covariant()
    assert (c if p is None else c.reduce(p)).pairwise_distinct()


@pytest.mark.parametrize("p", [None, 3, 5, 7, 11])
def test_joubert_components_distinct_in_odd_characteristic(p):
    c = cov.joubert_psi()
    assert (c if p is None else c.reduce(p)).pairwise_distinct()


def test_joubert_collapses_mod_2():
    # every component reduces to e3 in characteristic 2
    psi = cov.joubert_psi().reduce(2)
    e3 = elem_sym_of(MultiPoly.gens(GF(2), 6), 3)
    assert all(c == e3 for c in psi.components)
    assert not psi.pairwise_distinct()


def test_hermite_e2_e4_nonzero():
    pt = cov.hermite_psi_tilde()
    assert pt.elementary(2)
    assert pt.elementary(4)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_trace_zero_covariant(n):
    c = cov.trace_zero_covariant(n)
    assert not c.elementary(1)
    assert c.is_equivariant()


def test_build_covariant_rejects_non_invariant_seed():
    x = MultiPoly.gens(ZZ, 4)
    with pytest.raises(cov.InvarianceError):
        cov.build_covariant(x[0] * x[1], 4)
    with pytest.raises(cov.InvarianceError):
        cov.build_covariant((x[1] - x[2]) * (x[1] - x[3]) * (x[2] - x[3]), 4)
    c = cov.build_covariant((x[1] - x[2]) * (x[1] - x[3]) * (x[2] - x[3]), 4, character="sign")
    assert c.is_equivariant()


def test_joubert_seed_is_not_point_stabilizer_invariant():
    # the reason the Joubert covariant has no Tschirnhaus form in K[x]/(f)
    with pytest.raises(cov.InvarianceError):
        cov.build_covariant(cov.joubert_phi1(), 6)


def test_tau():
    tau = cov.outer_automorphism_tau()
    s6 = sorted(tau.table)
    assert len(s6) == 720
    assert tau.is_homomorphism_on(s6[::7])
    for s in s6[::11]:
        assert tau.preimage(tau(s)) == s
        assert tau(s).sign() == s.sign()
    for img in tau.transposition_images().values():
        assert img.cycle_type() == (2, 2, 2)
    # tau^2 preserves cycle types, so tau^2 is inner
    assert all(tau(tau(s)).cycle_type() == s.cycle_type() for s in s6)
    # the cycle type (6) goes to (3, 2, 1)
    six = Permutation.from_cycles(6, (1, 2, 3, 4, 5, 6))
    assert tau(six).cycle_type() == (3, 2, 1)


def test_pgl2_and_group_facts():
    H = cov.pgl2_f5()
    assert len(H) == 120
    assert cov.eta() == Permutation.from_cycles(6, (2, 3, 4, 5, 6))
    facts = cov.group_facts()
    assert facts == {
        "order_H": 120, "order_N": 48, "order_N0": 24, "rho_image_order": 6,
        "kernel_order": 4, "cosets_disjoint": True, "H_is_union_of_eta_cosets": True,
        "N0_isomorphic_S4": True,
    }


def test_joubert_orbit_sum_divisible_by_three():
    s = cov.joubert_orbit_sum()
    assert {abs(c) for _, c in s.terms()} == {3}


def test_joubert_label_wiring():
    assert [cov.label_index(z) for z in cov.P1_LABELS] == [1, 2, 3, 4, 5, 6]


def test_verification_suites():
    assert cov.verify_hermite()["ok"]
    rep = cov.verify_joubert()
    assert rep["ok"] and rep["s5(phi) = c * Delta^6"] == -32
    assert cov.verify_conditions_tr()["ok"]
    assert cov.verify_group_facts()["ok"]


def test_t_substitution():
    x = MultiPoly.gens(ZZ, 5)
    t = cov.t_substitution(x[0] * x[3] + x[4])
    assert t == MultiPoly(ZZ, 1, {(5,): 1, (0,): 1}, ["t"])


def test_s4_fixture_checks(seed):
    from tforge.fixtures import load_s4

    s4 = load_s4()
    assert cov.s4_pointwise_check(s4, seed=seed)
    broken = s4 + MultiPoly.constant(ZZ, 5, 1) * cov.delta(5) ** 4
    assert not cov.s4_pointwise_check(broken, seed=seed)
    rep = cov.verify_s4(seed=seed)
    assert rep["ok"] and rep["terms"] == len(s4)


def test_s4_relation_mod_small_prime():
    """Delta^2 * S4 == s4(psi~) reduced mod 101, an independent check of the fixture."""
    from tforge.fixtures import load_s4

    F = GF(101)
    s4 = load_s4().change_domain(F)
    e4 = cov.hermite_psi_tilde().reduce(101).elementary(4)
    assert s4 * cov.delta(5).change_domain(F) ** 2 == e4
