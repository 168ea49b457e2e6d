"""Automorphism actions: mixed commutators, the descending series and its
independent enumeration oracle, induced and restricted actions."""

import pytest

from pcentral.actions import (
    ActionPair,
    aut_as_perm_group,
    aut_perm_realization,
    commutator_group_of_pair,
    gamma_term,
    induced_quotient_action,
    inner_action,
    is_p_central_action,
    mixed_commutator,
    mixed_lower_central_series,
    mixed_series_definitional,
    order_matches_quotient_triviality,
    restrict_action,
    trivial_action,
)
from pcentral.catalog import build_action, build_group, paper_sigma_pair
from pcentral.errors import BudgetExceeded, NotInvariant
from pcentral.groups import conjugation_aut, subgroup_generated
from pcentral.series import lower_central_series


@pytest.fixture(scope="module")
def sigma3():
    return paper_sigma_pair(3)


def test_sigma_moves_second_basis_vector_to_first(sigma3):
    E = sigma3.G
    sigma = sigma3.A_generators[0]
    e1, e2 = E.generators[0], E.generators[1]
    assert mixed_commutator(e2, sigma) == e1
    assert mixed_commutator(e1, sigma) == E.identity
    # the commutator is literally x^{-1} sigma(x)
    for x in list(E.elements)[:20]:
        assert mixed_commutator(x, sigma) == E.mul(x.inverse(), sigma(x))


def test_sigma_series_orders(sigma3):
    assert mixed_lower_central_series(sigma3).orders()[:5] == [81, 27, 9, 3, 1]


def test_sigma_p_centrality_on_both_readings(sigma3):
    term_def = gamma_term(sigma3, 3)
    term_deep = gamma_term(sigma3, 4)
    assert term_def.order == 9 and not is_p_central_action(sigma3, term_def)
    assert term_deep.order == 3 and is_p_central_action(sigma3, term_deep)
    assert sigma3.A_generators[0].order() == 9
    assert commutator_group_of_pair(sigma3).exponent() == 3


def test_inner_mixed_series_equals_lower_central_series():
    for spec in ("dihedral(16)", "heisenberg(3)", "ut(4,2)"):
        G = build_group(spec)
        pair = inner_action(G)
        got = mixed_lower_central_series(pair).orders()
        want = lower_central_series(G).orders()
        assert got[:len(want)] == want


def test_trivial_action_series_collapses_immediately():
    G = build_group("heisenberg(3)")
    pair = trivial_action(G)
    assert gamma_term(pair, 2).order == 1
    assert is_p_central_action(pair)


@pytest.mark.parametrize("gspec,aspec", [
    ("heisenberg(3)", "inner"),
    ("dihedral(8)", "inner"),
    ("elementary_abelian(2,3)", "jordan"),
    ("wreath_cp_cp(2)", "inner"),
])
def test_definitional_enumeration_agrees_with_recursion(gspec, aspec):
    pair = build_action(build_group(gspec), aspec)
    for entries in ("generators", "all"):
        terms = mixed_series_definitional(pair, 5, entries=entries)
        for k in range(1, 6):
            assert terms[k - 1].keys == gamma_term(pair, k).keys, (entries, k)


def test_definitional_budget_exhausts():
    pair = build_action(build_group("ut(4,2)"), "inner")
    with pytest.raises(BudgetExceeded):
        mixed_series_definitional(pair, 5, budget=50)


def test_semidirect_consistency_of_conjugation():
    G = build_group("sym(4)")
    for g in G.generators:
        a = conjugation_aut(G, g)
        for x in G.elements:
            assert mixed_commutator(x, a) == G.comm(x, g)


def test_induced_quotient_action_on_central_quotient():
    G = build_group("heisenberg(3)")
    pair = inner_action(G)
    Z = gamma_term(pair, 2)  # the center, here also [G, Inn G]
    qpair = induced_quotient_action(pair, Z)
    assert qpair.G.order == 9
    assert gamma_term(qpair, 2).order == 1  # quotient is abelian


def test_induced_quotient_requires_invariant_subgroup():
    pair = build_action(build_group("elementary_abelian(2,3)"), "jordan")
    E = pair.G
    e3 = E.generators[2]  # sigma sends e3 to e2 + e3: not invariant
    N = subgroup_generated(E, [e3])
    with pytest.raises(NotInvariant):
        induced_quotient_action(pair, N)


def test_restrict_action_to_commutator_subgroup(sigma3):
    H = gamma_term(sigma3, 2)
    rpair = restrict_action(sigma3, H)
    assert rpair.G.order == H.order
    assert mixed_lower_central_series(rpair).orders()[:4] == [27, 9, 3, 1]


def test_restrict_action_requires_invariance():
    pair = build_action(build_group("elementary_abelian(2,3)"), "jordan")
    E = pair.G
    N = subgroup_generated(E, [E.generators[2]])
    with pytest.raises(NotInvariant):
        restrict_action(pair, N)


def test_perm_realization_is_faithful_and_isomorphic():
    G = build_group("quaternion(8)")
    pair = inner_action(G)
    P = aut_as_perm_group(pair)
    assert P.order == 4  # inner automorphisms of the quaternion group
    assert P.exponent() == 2
    real = aut_perm_realization(pair)
    for perm in P.elements:
        a = real.aut_of(perm)
        assert a in pair.A_elements or a.is_identity()


def test_action_pair_closes_generators():
    G = build_group("elementary_abelian(3,2)")
    pair = build_action(G, "full_aut")
    assert pair.A_order == 48
    assert aut_as_perm_group(pair).order == 48


def test_order_matches_quotient_triviality_consistency(sigma3):
    sigma = sigma3.A_generators[0]
    v2 = order_matches_quotient_triviality(sigma3, sigma, 2)
    v1 = order_matches_quotient_triviality(sigma3, sigma, 1)
    # order 9 divides 3^2 and sigma acts trivially mod Omega_2(H) = H
    assert v2.conclusion == "pass"
    assert v2.witnesses["power_is_trivial"] is True
    # at n = 1 the equivalence genuinely breaks on this pair: sigma^3 != 1
    # yet sigma is trivial mod Omega_1(H) = H.  This pair does not satisfy
    # the small-element-triviality hypothesis on its third term, so the
    # gated checker records it as skipped rather than failed.
    assert v1.conclusion == "fail"
    assert v1.witnesses["power_is_trivial"] is False
    assert v1.witnesses["trivial_mod_omega"] is True
    assert not is_p_central_action(sigma3, gamma_term(sigma3, 3))
