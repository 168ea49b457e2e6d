"""Group tables: closure, subgroups, quotients, automorphisms."""

import pytest

from pcentral.catalog import build_group
from pcentral.errors import CapExceeded, NotAHomomorphism, NotBijective, NotNormal
from pcentral.groups import (
    automorphism_from_images,
    center,
    close,
    commutator_subgroup,
    conjugation_aut,
    minimal_generating_sequence,
    normal_closure,
    quotient,
    subgroup_generated,
)


@pytest.fixture(scope="module")
def q8():
    return build_group("quaternion(8)")


@pytest.fixture(scope="module")
def d4():
    return build_group("dihedral(8)")


def test_closure_of_unitriangular_2(d4):
    G = build_group("ut(3,2)")
    assert G.order == 8
    assert G.order_stats() == {1: 1, 2: 5, 4: 2}
    # same order profile as the dihedral group of order 8
    assert G.order_stats() == d4.order_stats()


def test_closure_cap_enforced():
    with pytest.raises(CapExceeded):
        build_group("ut(4,3)", cap=100)


@pytest.mark.parametrize("spec", ["dihedral(8)", "quaternion(8)", "sym(4)",
                                  "heisenberg(3)", "dic3()"])
def test_commutator_subgroup_matches_all_pairs_oracle(spec):
    G = build_group(spec)
    brute = subgroup_generated(
        G, (G.comm(x, y) for x in G.elements for y in G.elements))
    fast = commutator_subgroup(G, G.top, G.top)
    assert fast.keys == brute.keys


@pytest.mark.parametrize("spec", ["dihedral(16)", "sym(3)", "heisenberg(3)",
                                  "direct_product(quaternion(8), cyclic(3,1))"])
def test_center_matches_commuting_oracle(spec):
    G = build_group(spec)
    brute = {x.key for x in G.elements
             if all(G.mul(x, y) == G.mul(y, x) for y in G.elements)}
    assert center(G).keys == brute


def test_subgroup_generated_thins_redundant_seeds(d4):
    # seeding with every element must still reproduce the group, with a
    # generator list far smaller than the seed list
    sub = subgroup_generated(d4, d4.elements)
    assert sub.order == 8
    assert len(sub.gens) <= 3


def test_lagrange_on_standard_subgroups():
    for spec in ("dihedral(16)", "sym(4)", "wreath_cp_cp(3)"):
        G = build_group(spec)
        for sub in (center(G), commutator_subgroup(G, G.top, G.top)):
            assert G.order % sub.order == 0


def test_quotient_is_a_homomorphic_image(q8):
    Z = center(q8)
    Q = quotient(q8, Z)
    assert Q.order == 4
    assert Q.exponent() == 2  # Q8 over its center is elementary abelian
    for x in q8.elements:
        for y in q8.elements:
            assert Q.project(q8.mul(x, y)) == Q.canon(
                Q.mul(Q.project(x), Q.project(y)))


def test_quotient_preimage_roundtrip(q8):
    Z = center(q8)
    Q = quotient(q8, Z)
    full = Q.preimage(Q.top)
    assert full.keys == {x.key for x in q8.elements}
    back = Q.preimage(subgroup_generated(Q, [Q.identity]))
    assert back.keys == Z.keys


def test_quotient_requires_normal_subgroup():
    S4 = build_group("sym(4)")
    # a point stabilizer is not normal in sym(4)
    H = subgroup_generated(
        S4, [x for x in S4.elements if x(3) == 3])
    with pytest.raises(NotNormal):
        quotient(S4, H)


def test_automorphism_validation_rejects_non_homomorphism(q8):
    i, j = q8.generators[0], q8.generators[1]
    with pytest.raises((NotAHomomorphism, NotBijective)):
        automorphism_from_images(q8, (i, j), (i, q8.identity))


def test_conjugation_is_an_automorphism(d4):
    for g in d4.elements:
        a = conjugation_aut(d4, g)
        for x in d4.elements:
            assert a(x) == d4.conj(x, g)


def test_minimal_generating_sequence_regenerates():
    for spec in ("dihedral(16)", "heisenberg(3)", "sym(4)"):
        G = build_group(spec)
        gens = minimal_generating_sequence(G)
        assert subgroup_generated(G, gens).order == G.order
        assert len(gens) <= len(G.generators) + 2


def test_normal_closure_is_normal():
    S4 = build_group("sym(4)")
    double = next(x for x in S4.elements if x.order() == 2
                  and all(x(i) != i for i in range(4)))
    N = normal_closure(S4, [double])
    assert N.order == 4  # the Klein four-group of double transpositions
    for g in S4.generators:
        assert all(S4.conj(h, g).key in N.keys for h in N.elements)


def test_close_rejects_empty_generators():
    with pytest.raises(ValueError):
        close([])
