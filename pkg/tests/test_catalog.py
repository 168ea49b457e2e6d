"""Family catalog: construction facts, determinism, spec parsing."""

import pytest

from pcentral.catalog import (
    build_action,
    build_group,
    parse_family,
    paper_sigma_pair,
    sigma_matrix,
    sigma_power_closed_form,
)
from pcentral.corpus import _DEFAULT_FACTS
from pcentral.errors import CapExceeded, ConfigError, UnknownFamily
from pcentral.series import nilpotency_class


@pytest.mark.parametrize("spec", sorted(_DEFAULT_FACTS))
def test_frozen_facts_rederived_by_enumeration(spec):
    """The frozen expectations must match a fresh enumeration, field by field."""
    G = build_group(spec)
    facts = _DEFAULT_FACTS[spec]
    assert G.order == facts["order"]
    assert G.exponent() == facts["exponent"]
    assert nilpotency_class(G) == facts["nilpotency_class"]
    assert {str(k): v for k, v in G.order_stats().items()} == facts["order_stats"]


def test_build_is_deterministic():
    a = build_group("ut(4,3)")
    b = build_group("ut(4,3)")
    assert [x.key for x in a.elements] == [x.key for x in b.elements]
    assert [g.key for g in a.generators] == [g.key for g in b.generators]


def test_wreath_2_has_dihedral_shape():
    W = build_group("wreath_cp_cp(2)")
    D = build_group("dihedral(8)")
    assert W.order_stats() == D.order_stats()


def test_parser_roundtrip_nested():
    spec = parse_family("direct_product(quaternion(8), cyclic(3,1))")
    assert spec.name == "direct_product"
    assert str(spec) == "direct_product(quaternion(8),cyclic(3,1))"
    assert parse_family(str(spec)) == spec
    assert build_group(spec).order == 24


def test_parser_reports_position():
    with pytest.raises(ConfigError, match="position"):
        parse_family("ut(4,,3)")
    with pytest.raises(ConfigError, match="position"):
        parse_family("ut(4,3) trailing")


def test_unknown_family_rejected():
    with pytest.raises(UnknownFamily):
        build_group("frobnicate(3)")


def test_bad_family_arguments_rejected():
    with pytest.raises(ConfigError):
        build_group("dihedral(7)")   # odd order
    with pytest.raises(ConfigError):
        build_group("cyclic(4,1)")   # 4 is not prime
    with pytest.raises(ConfigError):
        build_group("ut(4)")         # wrong arity
    with pytest.raises(ConfigError):
        build_group("quaternion(16)")  # only the order-8 group is provided


def test_cap_propagates():
    with pytest.raises(CapExceeded):
        build_group("elementary_abelian(3,6)", cap=50)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_sigma_closed_form_matches_matrix_powers(p):
    sig = sigma_matrix(p)
    for n in range(0, p * p + 1):
        assert sigma_power_closed_form(p, n) == sig ** n


def test_sigma_power_periodicity():
    sig = sigma_matrix(3)
    one = sig ** 0
    assert sig ** 3 != one
    assert sig ** 9 == one


def test_paper_sigma_pair_shape():
    pair = paper_sigma_pair(3)
    assert pair.G.order == 81
    assert pair.A_order == 9


def test_unknown_action_rejected():
    G = build_group("quaternion(8)")
    with pytest.raises(UnknownFamily):
        build_action(G, "transpose")


def test_full_aut_action_on_klein_four():
    G = build_group("elementary_abelian(2,2)")
    pair = build_action(G, "full_aut")
    assert pair.A_order == 6


def test_direct_product_backend_mismatch_rejected():
    with pytest.raises(ConfigError):
        # matrix group over p=2 with a matrix group over p=3
        build_group("direct_product(elementary_abelian(2,2), elementary_abelian(3,2))")


def test_direct_product_order_and_p():
    G = build_group("direct_product(quaternion(8), cyclic(2,1))")
    assert G.order == 16
    assert G.p == 2
    H = build_group("direct_product(quaternion(8), cyclic(3,1))")
    assert H.order == 24
    assert H.p is None
