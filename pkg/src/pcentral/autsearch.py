"""Brute-force automorphism groups and Sylow subgroups.

No classification shortcuts: Aut(G) is found by trying generator images (order
matching plus partial-homomorphism pruning), and Sylow subgroups by repeatedly
extending a p-subgroup inside its normalizer.  Classical order formulas appear
only in tests, as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .elements import Element, Permutation, _require_prime
from .errors import BudgetExceeded
from .groups import (
    Automorphism,
    GroupTable,
    Subgroup,
    minimal_generating_sequence,
    subgroup_generated,
)

__all__ = ["AutGroupResult", "brute_force_aut", "sylow_p_subgroup", "normalizer"]

DEFAULT_AUT_BUDGET = 10_000_000


@dataclass
class AutGroupResult:
    domain: GroupTable
    automorphisms: Tuple[Automorphism, ...]
    perm_group: GroupTable
    aut_by_perm_key: Dict[bytes, Automorphism]

    @property
    def order(self) -> int:
        return len(self.automorphisms)


def _partial_hom(G: GroupTable, gens: Sequence[Element], images: Sequence[Element],
                 expected: int) -> Optional[Dict[bytes, Element]]:
    """Extend gens -> images over <gens>; None on conflict or non-injectivity."""
    full: Dict[bytes, Element] = {G.identity.key: G.identity}
    frontier: List[Element] = [G.identity]
    while frontier:
        new: List[Element] = []
        for x in frontier:
            fx = full[x.key]
            for g, fg in zip(gens, images):
                y = G.mul(x, g)
                fy = G.mul(fx, fg)
                known = full.get(y.key)
                if known is None:
                    full[y.key] = fy
                    new.append(y)
                elif known != fy:
                    return None
        frontier = new
    if len(full) != expected:
        raise AssertionError("partial closure disagrees with the subgroup chain")
    if len({v.key for v in full.values()}) != expected:
        return None
    return full


def brute_force_aut(G: GroupTable, *, budget: int = DEFAULT_AUT_BUDGET) -> AutGroupResult:
    """All automorphisms of G by depth-first image search over a minimal
    generating sequence, with order matching and partial-map pruning."""
    gens = minimal_generating_sequence(G)
    if not gens:  # trivial group
        ident = Automorphism(G, {G.identity.key: G.identity})
        perm = Permutation.identity(1)
        table = GroupTable([perm], [perm])
        return AutGroupResult(G, (ident,), table, {perm.key: ident})
    chain = [subgroup_generated(G, gens[:i + 1]).order for i in range(len(gens))]
    by_order: Dict[int, List[Element]] = {}
    for x in G.elements:
        by_order.setdefault(x.order(), []).append(x)
    found: List[Automorphism] = []
    tuples_tried = 0

    def descend(depth: int, images: List[Element]) -> None:
        nonlocal tuples_tried
        for cand in by_order.get(gens[depth].order(), ()):
            tuples_tried += 1
            if tuples_tried > budget:
                raise BudgetExceeded(
                    f"automorphism search exceeded {budget} candidate tuples")
            trial = images + [cand]
            full = _partial_hom(G, gens[:depth + 1], trial, chain[depth])
            if full is None:
                continue
            if depth + 1 == len(gens):
                found.append(Automorphism(G, full))
            else:
                descend(depth + 1, trial)

    descend(0, [])
    found.sort(key=lambda a: a.signature)

    index = G._index
    perms: List[Permutation] = []
    back: Dict[bytes, Automorphism] = {}
    for a in found:
        perm = Permutation([index[a._map[x.key].key] for x in G.elements])
        perms.append(perm)
        back[perm.key] = a
    if len(back) != len(found):
        raise AssertionError("automorphism search produced duplicate maps")
    staging = GroupTable(perms, perms)
    perm_gens = minimal_generating_sequence(staging)
    table = GroupTable(perms, perm_gens)
    return AutGroupResult(G, tuple(found), table, back)


def _p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def normalizer(G: GroupTable, P: Subgroup) -> Subgroup:
    """N_G(P); conjugating P's generators into P suffices by finiteness."""
    pgens = P.gens if P.gens else tuple(x for x in P.elements if not x.is_identity())
    members = [g for g in G.elements
               if all(G.conj(h, g).key in P.keys for h in pgens)]
    return Subgroup(G, members, ())


def sylow_p_subgroup(G: GroupTable, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown inside successive normalizers."""
    _require_prime(p)
    target = _p_part(G.order, p)
    if target == 1:
        return G.trivial_subgroup
    seed = next(x for x in G.elements
                if x.order() > 1 and _is_p_power(x.order(), p))
    P = subgroup_generated(G, [seed])
    while P.order < target:
        N = normalizer(G, P)
        for y in N.elements:
            if y.key in P.keys or not (y.order() > 1 and _is_p_power(y.order(), p)):
                continue
            cand = subgroup_generated(G, tuple(P.gens) + (y,))
            if _is_p_power(cand.order, p):
                P = cand
                break
        else:
            raise AssertionError("Sylow extension stalled below the p-part")
    return P
