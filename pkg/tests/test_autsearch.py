"""Automorphism group search and Sylow subgroup extraction."""

import pytest

from pcentral.autsearch import brute_force_aut, normalizer, sylow_p_subgroup
from pcentral.catalog import build_group
from pcentral.errors import BudgetExceeded
from pcentral.groups import subgroup_generated

# Classical automorphism group orders, used as enumeration oracles.
AUT_ORDERS = {
    "elementary_abelian(2,2)": 6,     # GL(2,2)
    "elementary_abelian(3,2)": 48,    # GL(2,3)
    "cyclic(2,3)": 4,                 # (Z/8)*
    "cyclic(3,2)": 6,                 # (Z/9)*
    "quaternion(8)": 24,
    "dihedral(8)": 8,
    "heisenberg(3)": 432,
    "sym(3)": 6,
}


@pytest.mark.parametrize("spec,order", sorted(AUT_ORDERS.items()))
def test_aut_group_orders(spec, order):
    result = brute_force_aut(build_group(spec))
    assert result.order == order
    assert len(result.automorphisms) == order
    assert result.perm_group.order == order


def test_aut_search_respects_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_aut(build_group("elementary_abelian(3,3)"), budget=50)


def test_aut_permutations_compose_like_automorphisms():
    result = brute_force_aut(build_group("quaternion(8)"))
    P = result.perm_group
    # closure: product of any two realized permutations is again realized
    for a in P.elements[:6]:
        for b in P.elements[:6]:
            assert P.canon(a * b).key in P._bykey


def test_sylow_subgroup_of_sym4():
    S4 = build_group("sym(4)")
    P2 = sylow_p_subgroup(S4, 2)
    assert P2.order == 8
    assert P2.to_group().order_stats() == {1: 1, 2: 5, 4: 2}  # dihedral shape
    P3 = sylow_p_subgroup(S4, 3)
    assert P3.order == 3


def test_sylow_of_p_group_is_whole_group():
    G = build_group("heisenberg(3)")
    assert sylow_p_subgroup(G, 3).order == 27
    assert sylow_p_subgroup(G, 2).order == 1


def test_sylow_order_is_full_p_part():
    G = build_group("direct_product(quaternion(8), cyclic(3,1))")
    assert sylow_p_subgroup(G, 2).order == 8
    assert sylow_p_subgroup(G, 3).order == 3


def test_normalizer_contains_subgroup_and_is_closed():
    S4 = build_group("sym(4)")
    P = sylow_p_subgroup(S4, 3)
    N = normalizer(S4, P)
    assert P.keys <= N.keys
    assert N.order == 6  # N_{S4}(C3) is the symmetric group on the 3-cycle
    closed = subgroup_generated(S4, N.elements)
    assert closed.keys == N.keys


def test_aut_of_heisenberg_sylow_exponent():
    result = brute_force_aut(build_group("heisenberg(3)"))
    S = sylow_p_subgroup(result.perm_group, 3)
    assert S.order == 27
    assert max(x.order() for x in S.elements) == 3
