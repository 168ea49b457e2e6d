"""Automorphism actions on groups and the mixed commutator machinery.

An ActionPair bundles a group G with a finite automorphism group A (closed
under composition, identity included).  The mixed commutator [g, a] = g^-1 a(g)
matches the semidirect-product commutator, so with A = Inn(G) everything here
degenerates to the ordinary commutator calculus — that consistency is pinned
by tests.

The mixed lower central series is computed by the recursion
    term_{i+1} = <[term_i, A]> closed under G-conjugation and A-images,
and independently by a raw-definition breadth-first search over left-normed
commutator values (mixed_series_definitional), so the two can be played
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .elements import Element, Permutation
from .errors import BudgetExceeded, CapExceeded, NotInvariant, NotPGroup
from .groups import (
    Automorphism,
    GroupTable,
    QuotientGroup,
    Subgroup,
    automorphism_from_images,
    conjugation_aut,
    identity_automorphism,
    quotient,
    restrict_automorphism,
    subgroup_generated,
)
from .series import SeriesRecord, central_order_bound, omega_subgroup
from .verdict import Verdict, conclude

__all__ = [
    "ActionPair",
    "trivial_action",
    "inner_action",
    "mixed_commutator",
    "mixed_commutator_subgroup",
    "mixed_lower_central_series",
    "mixed_series_definitional",
    "is_p_central_action",
    "induced_quotient_action",
    "restrict_action",
    "PermRealization",
    "aut_perm_realization",
    "aut_as_perm_group",
    "order_matches_quotient_triviality",
]

DEFAULT_ACTION_CAP = 10_000
DEFAULT_DEFINITIONAL_BUDGET = 5_000_000


class ActionPair:
    """A group together with a closed group of automorphisms acting on it."""

    def __init__(self, G: GroupTable, A_generators: Sequence[Automorphism],
                 A_elements: Sequence[Automorphism]):
        self.G = G
        self.A_generators = tuple(A_generators)
        self.A_elements = tuple(A_elements)
        self._cache: dict = {}

    @classmethod
    def build(cls, G: GroupTable, A_generators: Sequence[Automorphism],
              *, cap: int = DEFAULT_ACTION_CAP) -> "ActionPair":
        for a in A_generators:
            if a.domain is not G:
                raise ValueError("acting automorphism is not defined on the given group")
        ident = identity_automorphism(G)
        closed: Dict[tuple, Automorphism] = {ident.signature: ident}
        frontier = [ident]
        gens = list(A_generators) or [ident]
        while frontier:
            new = []
            for a in frontier:
                for b in gens:
                    c = a * b
                    if c.signature not in closed:
                        closed[c.signature] = c
                        new.append(c)
                        if len(closed) > cap:
                            raise CapExceeded(f"action closure exceeded cap of {cap}")
            frontier = new
        elements = sorted(closed.values(), key=lambda a: a.signature)
        return cls(G, A_generators, elements)

    @property
    def A_order(self) -> int:
        return len(self.A_elements)

    def __repr__(self) -> str:
        return f"ActionPair(|G|={self.G.order}, |A|={self.A_order})"


def trivial_action(G: GroupTable) -> ActionPair:
    return ActionPair.build(G, [identity_automorphism(G)])


def inner_action(G: GroupTable) -> ActionPair:
    return ActionPair.build(G, [conjugation_aut(G, g) for g in G.generators],
                            cap=max(DEFAULT_ACTION_CAP, G.order))


def mixed_commutator(g: Element, a: Automorphism) -> Element:
    """[g, a] = g^-1 * a(g)."""
    return a.domain.canon(g.inverse() * a(g))


def _closed_under_action(pair: ActionPair, seeds: Iterable[Element]) -> Subgroup:
    """<seeds> closed under conjugation by G and images under A's generators.

    The fixpoint condition is exactly normality in G plus A-invariance, so the
    returned subgroup carries both properties by construction.
    """
    G = pair.G
    H = subgroup_generated(G, seeds)
    while True:
        grown: List[Element] = []
        for h in H.elements:
            for g in G.generators:
                c = G.conj(h, g)
                if c.key not in H.keys:
                    grown.append(c)
            for a in pair.A_generators:
                c = a(h)
                if c.key not in H.keys:
                    grown.append(c)
        if not grown:
            return H
        H = subgroup_generated(G, tuple(H.gens) + tuple(grown))


def mixed_commutator_subgroup(pair: ActionPair) -> Subgroup:
    """[G, A]: generated by generator commutators, closed under G and A."""
    if "H" not in pair._cache:
        seeds = {mixed_commutator(g, a)
                 for g in pair.G.generators for a in pair.A_generators}
        pair._cache["H"] = _closed_under_action(pair, seeds)
    return pair._cache["H"]


def commutator_group_of_pair(pair: ActionPair) -> GroupTable:
    """[G, A] as a standalone table (cached)."""
    if "H_group" not in pair._cache:
        pair._cache["H_group"] = mixed_commutator_subgroup(pair).to_group()
    return pair._cache["H_group"]


def mixed_lower_central_series(pair: ActionPair) -> SeriesRecord:
    """Mixed lower central series of the pair, computed to stabilization."""
    if "mixed_series" not in pair._cache:
        G = pair.G
        terms: List[Subgroup] = [G.top]
        while True:
            prev = terms[-1]
            seeds = {mixed_commutator(c, a)
                     for c in prev.elements for a in pair.A_generators}
            nxt = _closed_under_action(pair, seeds)
            if nxt.order == prev.order:
                break
            terms.append(nxt)
        terms.append(terms[-1])
        pair._cache["mixed_series"] = SeriesRecord(
            "mixed_lower_central", tuple(terms), len(terms) - 2)
    return pair._cache["mixed_series"]


def gamma_term(pair: ActionPair, k: int) -> Subgroup:
    """k-th mixed lower central term (k >= 1); stable past stabilization."""
    return mixed_lower_central_series(pair).term(k)


def mixed_series_definitional(pair: ActionPair, k_max: int, *,
                              entries: str = "generators",
                              budget: int = DEFAULT_DEFINITIONAL_BUDGET,
                              ) -> List[Subgroup]:
    """Mixed series terms straight from the left-normed commutator definition.

    States are pairs (value, number of A-entries so far, capped at k_max - 1);
    extending a left-normed commutator only depends on its current value, so
    this BFS enumerates every reachable commutator value exactly, with no word
    length truncation.  A value with c A-entries qualifies as a generator of
    the k-th term for every k <= c + 1 (its word length is automatically >= k).

    entries="all" sweeps every element of G and A as the next entry (the
    literal definition; affordable only on small pairs).  The default
    "generators" alphabet uses G's generators and A's generators with their
    inverses, which generates the same subgroups by the standard commutator
    expansions [x, uv] = [x,v]*([x,u] conj v) and a([x,b]) = [x,b]*[[x,b],a].
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    G = pair.G
    cap = k_max - 1
    if entries == "all":
        g_alphabet: List[Element] = [g for g in G.elements if not g.is_identity()]
        a_alphabet: List[Automorphism] = [a for a in pair.A_elements if not a.is_identity()]
    elif entries == "generators":
        g_letters: Dict[bytes, Element] = {}
        for g in G.generators:
            g_letters[g.key] = g
            g_letters[g.inverse().key] = G.canon(g.inverse())
        g_alphabet = [g for g in g_letters.values() if not g.is_identity()]
        a_letters: Dict[tuple, Automorphism] = {}
        for a in pair.A_generators:
            a_letters[a.signature] = a
            a_letters[a.inverse().signature] = a.inverse()
        a_alphabet = [a for a in a_letters.values() if not a.is_identity()]
    else:
        raise ValueError(f"unknown entry mode {entries!r}")

    buckets: List[Set[Element]] = [set() for _ in range(cap + 1)]
    seen: Set[Tuple[bytes, int]] = set()
    frontier: List[Tuple[Element, int]] = []
    for x in G.elements:
        seen.add((x.key, 0))
        buckets[0].add(x)
        frontier.append((x, 0))
    steps = 0
    while frontier:
        new: List[Tuple[Element, int]] = []
        for v, c in frontier:
            for g in g_alphabet:
                steps += 1
                w = G.comm(v, g)
                state = (w.key, c)
                if state not in seen:
                    seen.add(state)
                    buckets[c].add(w)
                    new.append((w, c))
            c2 = min(c + 1, cap)
            for a in a_alphabet:
                steps += 1
                w = mixed_commutator(v, a)
                state = (w.key, c2)
                if state not in seen:
                    seen.add(state)
                    buckets[c2].add(w)
                    new.append((w, c2))
            if steps > budget:
                raise BudgetExceeded(
                    f"definitional sweep exceeded {budget} commutator steps")
        frontier = new

    terms: List[Subgroup] = [G.top]
    tail: Set[Element] = set()
    collected: List[Set[Element]] = [set() for _ in range(cap + 1)]
    for c in range(cap, -1, -1):
        tail = tail | buckets[c]
        collected[c] = set(tail)
    for k in range(2, k_max + 1):
        terms.append(subgroup_generated(G, collected[k - 1]))
    return terms


def is_p_central_action(pair: ActionPair, X: Optional[Subgroup] = None) -> bool:
    """Does A fix every element of X of order dividing p (4 if p = 2)?"""
    G = pair.G
    if G.p is None:
        raise NotPGroup("no designated prime on the acted-on group")
    bound = central_order_bound(G.p)
    X = X if X is not None else G.top
    for x in X.elements:
        if bound % x.order() == 0:
            for a in pair.A_generators:
                if a(x) != x:
                    return False
    return True


def induced_quotient_action(pair: ActionPair, N: Subgroup) -> ActionPair:
    """The action induced on G/N; N must be normal and A-invariant."""
    for a in pair.A_generators:
        for n in N.elements:
            if a(n).key not in N.keys:
                raise NotInvariant("kernel subgroup is not invariant under the action")
    Q = quotient(pair.G, N)
    induced = []
    for a in pair.A_generators:
        images = [Q.project(a(c.rep)) for c in Q.generators]
        induced.append(automorphism_from_images(Q, Q.generators, images))
    return ActionPair.build(Q, induced)


def restrict_action(pair: ActionPair, H: Subgroup) -> ActionPair:
    """The action restricted to an A-invariant subgroup, on H.to_group()."""
    dom = H.to_group()
    restricted = [restrict_automorphism(a, H, dom) for a in pair.A_generators]
    return ActionPair.build(dom, restricted)


@dataclass
class PermRealization:
    """A as permutations of G's canonical element list, with the back-map."""

    group: GroupTable
    aut_by_perm_key: Dict[bytes, Automorphism]

    def aut_of(self, perm: Element) -> Automorphism:
        return self.aut_by_perm_key[perm.key]


def aut_perm_realization(pair: ActionPair) -> PermRealization:
    if "perm_realization" not in pair._cache:
        G = pair.G
        index = G._index
        perms = []
        back: Dict[bytes, Automorphism] = {}
        for a in pair.A_elements:
            images = [index[a._map[x.key].key] for x in G.elements]
            perm = Permutation(images)
            perms.append(perm)
            back[perm.key] = a
        if len(back) != len(pair.A_elements):
            raise AssertionError("distinct automorphisms produced equal permutations")
        gen_perms = []
        for a in pair.A_generators:
            images = [index[a._map[x.key].key] for x in G.elements]
            gen_perms.append(Permutation(images))
        table = GroupTable(perms, gen_perms, p=G.p)
        pair._cache["perm_realization"] = PermRealization(table, back)
    return pair._cache["perm_realization"]


def aut_as_perm_group(pair: ActionPair) -> GroupTable:
    """A itself, realized faithfully on the index set of G's element list."""
    return aut_perm_realization(pair).group


def order_matches_quotient_triviality(pair: ActionPair, sigma: Automorphism,
                                      n: int) -> Verdict:
    """Compare "sigma^(p^n) = 1" with "sigma trivial modulo the n-th omega
    term of [G,A]" and report the biconditional."""
    G = pair.G
    p = G.require_p_group()
    Hgrp = commutator_group_of_pair(pair)
    left = (p ** n) % sigma.order() == 0
    key = ("mc_image", sigma.signature)
    if key not in pair._cache:
        pair._cache[key] = {mixed_commutator(g, sigma).key for g in G.elements}
    image_keys = pair._cache[key]
    om = omega_subgroup(Hgrp, n) if Hgrp.order > 1 else Hgrp.top
    right = image_keys <= om.keys
    return conclude("order_matches_quotient_triviality", True, left == right,
                    {"n": n, "sigma_order": sigma.order(),
                     "power_is_trivial": left, "trivial_mod_omega": right})
