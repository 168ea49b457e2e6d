"""Central series, omega/agemo subgroups and regularity predicates.

The "order dividing p, or 4 when p = 2" convention that threads through all
p-centrality notions lives in exactly one place here: central_order_bound().
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .elements import _require_prime
from .errors import NotPGroup, OddPrimeRequired
from .groups import (
    GroupTable,
    Subgroup,
    center,
    commutator_subgroup,
    quotient,
    subgroup_generated,
)
from .verdict import Verdict, conclude

__all__ = [
    "SeriesRecord",
    "central_order_bound",
    "lower_central_series",
    "nilpotency_class",
    "upper_central_series",
    "omega_set",
    "omega_subgroup",
    "omega_conv",
    "agemo",
    "is_omega_regular",
    "xu_inequality",
    "is_p_central_of_height",
]


def central_order_bound(p: int) -> int:
    """Order bound defining "small" elements: p for odd primes, 4 for p = 2."""
    return 4 if p == 2 else p


@dataclass
class SeriesRecord:
    """A descending or ascending subgroup series with its stabilization point."""

    label: str
    terms: Tuple[Subgroup, ...]
    stabilized_at: int  # index of the first term equal to its successor

    def orders(self) -> List[int]:
        return [t.order for t in self.terms]

    def term(self, k: int, *, one_based: bool = True) -> Subgroup:
        """k-th term; indices beyond the recorded tail return the stable term."""
        i = k - 1 if one_based else k
        if i < 0:
            raise IndexError(f"series index {k} out of range")
        return self.terms[min(i, len(self.terms) - 1)]


def lower_central_series(G: GroupTable) -> SeriesRecord:
    """G = γ_1 ≥ γ_2 = [G,G] ≥ [γ_2,G] ≥ ..., recorded up to stabilization."""
    if "lcs" not in G._cache:
        terms = [G.top]
        while True:
            nxt = commutator_subgroup(G, terms[-1], G.top)
            if nxt.order == terms[-1].order:
                break
            terms.append(nxt)
        terms.append(terms[-1])  # show the repeat so stabilization is visible
        G._cache["lcs"] = SeriesRecord("lower_central", tuple(terms), len(terms) - 2)
    return G._cache["lcs"]


def nilpotency_class(G: GroupTable) -> Optional[int]:
    """Nilpotency class, or None for a non-nilpotent group."""
    s = lower_central_series(G)
    if s.terms[-1].order != 1:
        return None
    return s.stabilized_at


def upper_central_series(G: GroupTable) -> SeriesRecord:
    """1 = Z_0 ≤ Z_1 = Z(G) ≤ ..., via centers of successive quotients."""
    if "ucs" not in G._cache:
        terms = [G.trivial_subgroup]
        while True:
            Q = quotient(G, terms[-1])
            Znext = Q.preimage(center(Q))
            if Znext.order == terms[-1].order:
                break
            terms.append(Znext)
        terms.append(terms[-1])
        G._cache["ucs"] = SeriesRecord("upper_central", tuple(terms), len(terms) - 2)
    return G._cache["ucs"]


def omega_set(G: GroupTable, i: int) -> Tuple:
    """All elements of order dividing p^i (as a sorted tuple, not a subgroup)."""
    p = G.require_p_group()
    bound = p ** i
    return tuple(x for x in G.elements if bound % x.order() == 0)


def omega_subgroup(G: GroupTable, i: int) -> Subgroup:
    """Ω_i(G) = subgroup generated by the elements of order dividing p^i."""
    G.require_p_group()
    key = ("omega", i)
    if key not in G._cache:
        G._cache[key] = subgroup_generated(G, omega_set(G, i))
    return G._cache[key]


def omega_conv(G: GroupTable) -> Subgroup:
    """Ω(G): Ω_1 for odd p, Ω_2 for p = 2 (matching central_order_bound)."""
    p = G.require_p_group()
    return omega_subgroup(G, 2 if p == 2 else 1)


def agemo(G: GroupTable, n: int) -> Subgroup:
    """G^{p^n} = subgroup generated by all p^n-th powers."""
    p = G.require_p_group()
    key = ("agemo", n)
    if key not in G._cache:
        q = p ** n
        G._cache[key] = subgroup_generated(G, {x ** q for x in G.elements})
    return G._cache[key]


def is_omega_regular(G: GroupTable, i: int) -> bool:
    """Do the elements of order dividing p^i form a subgroup?"""
    p = G.require_p_group()
    if p ** i >= G.exponent():
        return True  # the set is all of G
    members = omega_set(G, i)
    keys = {x.key for x in members}
    bound = p ** i
    return all(G.mul(x, y).key in keys for x in members for y in members)


def xu_inequality(G: GroupTable, n: int) -> Verdict:
    """Compare |G : G^{p^n}| against |Ω_n(G)| (odd p only)."""
    p = G.require_p_group()
    if p == 2:
        raise OddPrimeRequired("the index inequality is stated for odd p")
    index = G.order // agemo(G, n).order
    om = omega_subgroup(G, n).order
    return conclude("xu_index_inequality", True, index <= om,
                    {"n": n, "index": index, "omega_order": om})


def is_p_central_of_height(G: GroupTable, k: int, p: Optional[int] = None) -> bool:
    """Does every element of order dividing p (4 if p = 2) lie in Z_k(G)?

    The prime defaults to the group's designated one; passing it explicitly
    supports general finite groups that carry no prime tag.
    """
    if p is None:
        p = G.p
    if p is None:
        raise NotPGroup("no designated prime on this group and none supplied")
    _require_prime(p)
    bound = central_order_bound(p)
    small = [x for x in G.elements if bound % x.order() == 0]
    Zk = upper_central_series(G).term(k, one_based=False)
    return all(x.key in Zk.keys for x in small)
