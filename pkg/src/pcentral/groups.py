"""Fully enumerated finite groups and their basic machinery.

Everything is desk scale: groups are closed by breadth-first multiplication
from their generators and stored as sorted element tables (sorted by canonical
byte key), so all downstream iteration is deterministic.  Subgroups are views
into a parent table; quotients get their own element type (cosets keyed by
their canonically minimal representative); automorphisms store a full map and
are validated on construction.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .elements import Element, _require_prime
from .errors import (
    BackendMismatch,
    CapExceeded,
    NotAHomomorphism,
    NotBijective,
    NotInvariant,
    NotNormal,
    NotPGroup,
)

__all__ = [
    "GroupTable",
    "Subgroup",
    "QuotientGroup",
    "Coset",
    "Automorphism",
    "close",
    "subgroup_generated",
    "is_normal",
    "normal_closure",
    "quotient",
    "commutator",
    "commutator_subgroup",
    "center",
    "centralizer",
    "element_order",
    "exponent",
    "automorphism_from_images",
    "identity_automorphism",
    "conjugation_aut",
    "restrict_automorphism",
    "minimal_generating_sequence",
]

DEFAULT_CLOSURE_CAP = 200_000


class GroupTable:
    """A finite group, fully enumerated, with a canonical element order."""

    def __init__(self, elements: Iterable[Element], generators: Sequence[Element],
                 p: Optional[int] = None):
        els = sorted(set(elements))
        if not els:
            raise ValueError("a group needs at least the identity element")
        self.elements: Tuple[Element, ...] = tuple(els)
        self._bykey: Dict[bytes, Element] = {x.key: x for x in self.elements}
        self._index: Dict[bytes, int] = {x.key: i for i, x in enumerate(self.elements)}
        probe = (generators[0] if generators else els[0]).identity_like()
        if probe.key not in self._bykey:
            raise ValueError("element table does not contain the identity")
        self.identity: Element = self._bykey[probe.key]
        self.generators: Tuple[Element, ...] = tuple(self._bykey[g.key] for g in generators)
        if p is not None:
            _require_prime(p)
        self.p = p
        self._cache: dict = {}

    # -- basic queries ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Element) -> bool:
        return isinstance(x, Element) and x.key in self._bykey

    def __iter__(self):
        return iter(self.elements)

    def canon(self, x: Element) -> Element:
        """The stored copy of x (so per-element caches accumulate in one place)."""
        c = self._bykey.get(x.key)
        if c is None:
            raise ValueError("element does not belong to this group")
        return c

    def index_of(self, x: Element) -> int:
        return self._index[x.key]

    def mul(self, x: Element, y: Element) -> Element:
        return self.canon(x * y)

    def conj(self, x: Element, g: Element) -> Element:
        """g^-1 x g, canonicalized."""
        return self.canon(g.inverse() * x * g)

    def comm(self, x: Element, y: Element) -> Element:
        """[x, y] = x^-1 y^-1 x y, canonicalized."""
        return self.canon(x.inverse() * y.inverse() * x * y)

    @property
    def is_p_group(self) -> bool:
        if self.p is None:
            return False
        n = self.order
        while n % self.p == 0:
            n //= self.p
        return n == 1

    def require_p_group(self) -> int:
        if self.p is None:
            raise NotPGroup("no prime designated for this group")
        if not self.is_p_group:
            raise NotPGroup(f"|G| = {self.order} is not a power of p = {self.p}")
        return self.p

    def with_p(self, p: int) -> "GroupTable":
        """Same table with a (re)designated prime; element caches carry over."""
        return GroupTable(self.elements, self.generators, p=p)

    def exponent(self) -> int:
        if "exponent" not in self._cache:
            self._cache["exponent"] = math.lcm(*(x.order() for x in self.elements))
        return self._cache["exponent"]

    def order_stats(self) -> Dict[int, int]:
        stats: Dict[int, int] = {}
        for x in self.elements:
            k = x.order()
            stats[k] = stats.get(k, 0) + 1
        return stats

    # -- subgroup views --------------------------------------------------

    def subgroup(self, elements: Iterable[Element], gens: Sequence[Element] = ()) -> "Subgroup":
        return Subgroup(self, elements, gens)

    @property
    def top(self) -> "Subgroup":
        if "top" not in self._cache:
            self._cache["top"] = Subgroup(self, self.elements, self.generators)
        return self._cache["top"]

    @property
    def trivial_subgroup(self) -> "Subgroup":
        if "trivial" not in self._cache:
            self._cache["trivial"] = Subgroup(self, (self.identity,), ())
        return self._cache["trivial"]

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order}, p={self.p})"


class Subgroup:
    """A subgroup of a GroupTable, stored as a sorted element view."""

    def __init__(self, parent: GroupTable, elements: Iterable[Element],
                 gens: Sequence[Element] = ()):
        self.parent = parent
        els = sorted({parent.canon(x) for x in elements})
        self.elements: Tuple[Element, ...] = tuple(els)
        self.keys = frozenset(x.key for x in els)
        self.gens: Tuple[Element, ...] = tuple(parent.canon(g) for g in gens)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Element) -> bool:
        return isinstance(x, Element) and x.key in self.keys

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subgroup) and self.keys == other.keys

    def __hash__(self) -> int:
        return hash(self.keys)

    def issubset(self, other: "Subgroup") -> bool:
        return self.keys <= other.keys

    def to_group(self) -> GroupTable:
        """The subgroup as a standalone table (same element objects)."""
        gens = self.gens if self.gens else tuple(
            x for x in self.elements if not x.is_identity())
        return GroupTable(self.elements, gens, p=self.parent.p)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent!r})"


def close(generators: Sequence[Element], *, cap: int = DEFAULT_CLOSURE_CAP,
          p: Optional[int] = None) -> GroupTable:
    """Enumerate the group generated by `generators` (BFS over right products)."""
    if not generators:
        raise ValueError("need at least one generator")
    identity = generators[0].identity_like()
    els: Dict[bytes, Element] = {identity.key: identity}
    frontier: List[Element] = [identity]
    while frontier:
        new: List[Element] = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y.key not in els:
                    els[y.key] = y
                    new.append(y)
                    if len(els) > cap:
                        raise CapExceeded(f"closure exceeded cap of {cap} elements")
        frontier = new
    return GroupTable(els.values(), generators, p=p)


def subgroup_generated(G: GroupTable, seeds: Iterable[Element]) -> Subgroup:
    """⟨seeds⟩ inside G (all seeds must already lie in G).

    Seeds already inside the running closure are dropped instead of kept as
    generators, so a seed set as large as the subgroup itself still closes in
    O(|H| * rank) products rather than O(|H| * |seeds|).  Seeds are processed
    in key order, making the retained generator list deterministic.
    """
    pool = sorted({s.key: s for s in (G.canon(x) for x in seeds)}.values(),
                  key=lambda e: e.key)
    gens: List[Element] = []
    els: Dict[bytes, Element] = {G.identity.key: G.identity}
    for s in pool:
        if s.key in els:
            continue
        gens.append(s)
        els = {G.identity.key: G.identity}
        frontier: List[Element] = [G.identity]
        while frontier:
            new: List[Element] = []
            for x in frontier:
                for g in gens:
                    y = G.mul(x, g)
                    if y.key not in els:
                        els[y.key] = y
                        new.append(y)
            frontier = new
    return Subgroup(G, els.values(), gens)


def is_normal(G: GroupTable, H: Subgroup) -> bool:
    return all(G.conj(h, g).key in H.keys for g in G.generators for h in H.elements)


def normal_closure(G: GroupTable, seeds: Iterable[Element]) -> Subgroup:
    """Smallest normal subgroup of G containing the seeds."""
    H = subgroup_generated(G, seeds)
    while True:
        grown = [c for h in H.elements for g in G.generators
                 if (c := G.conj(h, g)).key not in H.keys]
        if not grown:
            return H
        H = subgroup_generated(G, tuple(H.gens) + tuple(grown))


def commutator(x: Element, y: Element) -> Element:
    """[x, y] = x^-1 y^-1 x y."""
    return x.inverse() * y.inverse() * x * y


def commutator_subgroup(G: GroupTable, X: Subgroup, Y: Subgroup) -> Subgroup:
    """Normal closure in G of the subgroup generated by commutators [X, Y].

    Seeds run over all of X against Y's generating set; the identity
    [x, t1*t2] = [x,t2] * ([x,t1] conjugated by t2) makes this agree with the
    all-pairs sweep once the normal closure is taken (the all-pairs version is
    the test oracle).  When X and Y are both normal the closure pass must be a
    no-op, and that is asserted.
    """
    ygens = Y.gens if Y.gens else tuple(y for y in Y.elements if not y.is_identity())
    seeds = {G.comm(x, t) for x in X.elements for t in ygens}
    H0 = subgroup_generated(G, seeds)
    H = normal_closure(G, H0.elements)
    if H.order != H0.order and is_normal(G, X) and is_normal(G, Y):
        raise AssertionError("normal-closure pass grew [X,Y] for normal X, Y")
    return H


def center(G: GroupTable) -> Subgroup:
    if "center" not in G._cache:
        members = [x for x in G.elements
                   if all(G.mul(x, g) == G.mul(g, x) for g in G.generators)]
        G._cache["center"] = Subgroup(G, members, ())
    return G._cache["center"]


def centralizer(G: GroupTable, S: Iterable[Element]) -> Subgroup:
    S = [G.canon(s) for s in S]
    members = [x for x in G.elements if all(G.mul(x, s) == G.mul(s, x) for s in S)]
    return Subgroup(G, members, ())


def element_order(x: Element) -> int:
    return x.order()


def exponent(G: GroupTable) -> int:
    return G.exponent()


class Automorphism:
    """A bijective homomorphism G -> G, stored as a full element map."""

    __slots__ = ("domain", "_map", "signature", "_ord")

    def __init__(self, domain: GroupTable, full_map: Dict[bytes, Element]):
        self.domain = domain
        self._map = full_map
        self.signature = tuple(full_map[g.key].key for g in domain.generators)
        self._ord: Optional[int] = None

    def __call__(self, x: Element) -> Element:
        try:
            return self._map[x.key]
        except KeyError:
            raise ValueError("element does not belong to the automorphism's domain") from None

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        """(a * b)(x) = a(b(x)): apply b first, then a."""
        if other.domain is not self.domain:
            raise BackendMismatch("automorphisms act on different groups")
        amap = self._map
        return Automorphism(self.domain, {k: amap[v.key] for k, v in other._map.items()})

    def inverse(self) -> "Automorphism":
        byk = self.domain._bykey
        return Automorphism(self.domain, {v.key: byk[k] for k, v in self._map.items()})

    def is_identity(self) -> bool:
        return all(g.key == img for g, img in zip(self.domain.generators, self.signature))

    def order(self) -> int:
        if self._ord is None:
            k, a = 1, self
            while not a.is_identity():
                a = a * self
                k += 1
            self._ord = k
        return self._ord

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Automorphism) and other.domain is self.domain
                and other.signature == self.signature)

    def __hash__(self) -> int:
        return hash(self.signature)

    def __repr__(self) -> str:
        return f"Automorphism(on order-{self.domain.order} group)"


def automorphism_from_images(G: GroupTable, gens: Sequence[Element],
                             images: Sequence[Element]) -> Automorphism:
    """Extend generator images over the Cayley graph, verifying both
    well-definedness (every edge consistent) and bijectivity."""
    if len(gens) != len(images):
        raise ValueError(f"{len(gens)} generators but {len(images)} images")
    gens = [G.canon(g) for g in gens]
    images = [G.canon(m) for m in images]
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
                    raise NotAHomomorphism(
                        "generator images are inconsistent on the Cayley graph")
        frontier = new
    if len(full) != G.order:
        raise ValueError("the given elements do not generate the group")
    if len({v.key for v in full.values()}) != G.order:
        raise NotBijective("generator images define a non-bijective endomorphism")
    return Automorphism(G, full)


def identity_automorphism(G: GroupTable) -> Automorphism:
    return Automorphism(G, {x.key: x for x in G.elements})


def conjugation_aut(G: GroupTable, g: Element) -> Automorphism:
    g = G.canon(g)
    return Automorphism(G, {x.key: G.conj(x, g) for x in G.elements})


def restrict_automorphism(a: Automorphism, H: Subgroup,
                          H_group: Optional[GroupTable] = None) -> Automorphism:
    """Restrict a to an A-invariant subgroup, as an automorphism of H.to_group()."""
    for h in H.elements:
        if a(h).key not in H.keys:
            raise NotInvariant("subgroup is not invariant under the automorphism")
    dom = H_group if H_group is not None else H.to_group()
    return Automorphism(dom, {h.key: dom.canon(a(h)) for h in H.elements})


def minimal_generating_sequence(G: GroupTable) -> Tuple[Element, ...]:
    """Greedy generating sequence: highest order first, ties by canonical key."""
    if G.order == 1:
        return ()
    candidates = sorted(G.elements, key=lambda x: (-x.order(), x.key))
    seq: List[Element] = []
    H = G.trivial_subgroup
    while H.order < G.order:
        nxt = next(x for x in candidates if x.key not in H.keys)
        seq.append(nxt)
        H = subgroup_generated(G, seq)
    return tuple(seq)


# -- quotients -----------------------------------------------------------


class Coset(Element):
    """An element of a quotient group: a coset keyed by its minimal representative."""

    __slots__ = ("rep", "ctx")

    def __init__(self, rep: Element, ctx: "CosetContext"):
        self.rep = rep
        self.ctx = ctx
        self.key = rep.key
        self._inv = None
        self._ord = None

    def __mul__(self, other: Element) -> "Coset":
        if not isinstance(other, Coset) or other.ctx is not self.ctx:
            raise BackendMismatch("cosets belong to different quotients")
        return self.ctx.canon(self.rep * other.rep)

    def _compute_inverse(self) -> "Coset":
        return self.ctx.canon(self.rep.inverse())

    def identity_like(self) -> "Coset":
        return self.ctx.identity_coset

    def is_identity(self) -> bool:
        return self.key == self.ctx.identity_coset.key

    __hash__ = Element.__hash__

    def __repr__(self) -> str:
        return f"Coset({self.rep!r})"


class CosetContext:
    """Shared coset lookup for one quotient: parent element key -> Coset."""

    def __init__(self, parent: GroupTable):
        self.parent = parent
        self.by_member_key: Dict[bytes, Coset] = {}
        self.identity_coset: Optional[Coset] = None

    def canon(self, x: Element) -> Coset:
        return self.by_member_key[x.key]


class QuotientGroup(GroupTable):
    """G/N with canonically minimal coset representatives as element keys."""

    def __init__(self, parent: GroupTable, N: Subgroup, ctx: CosetContext,
                 cosets: Sequence[Coset]):
        self.parent = parent
        self.normal_subgroup = N
        self.ctx = ctx
        gens = [ctx.canon(g) for g in parent.generators]
        super().__init__(cosets, gens, p=parent.p)

    def project(self, x: Element) -> Coset:
        """The coset of a parent element."""
        return self.canon(self.ctx.canon(self.parent.canon(x)))

    def preimage(self, S: Subgroup) -> Subgroup:
        """The full preimage in the parent of a subgroup of this quotient."""
        if S.parent is not self:
            raise ValueError("subgroup does not live in this quotient")
        return Subgroup(self.parent,
                        [x for x in self.parent.elements if self.ctx.canon(x).key in S.keys])

    def __repr__(self) -> str:
        return f"QuotientGroup(order={self.order} = {self.parent.order}/{self.normal_subgroup.order})"


def quotient(G: GroupTable, N: Subgroup) -> QuotientGroup:
    """G/N; raises NotNormal unless N is normal in G.

    Scanning G in canonical order makes the first unvisited member of each
    coset its minimal one, which becomes the coset's representative and key.
    """
    if N.parent is not G:
        raise ValueError("subgroup does not live in the given group")
    if not is_normal(G, N):
        raise NotNormal(f"subgroup of order {N.order} is not normal")
    ctx = CosetContext(G)
    cosets: List[Coset] = []
    rep_of: Dict[bytes, Element] = {}
    for x in G.elements:
        if x.key in rep_of:
            continue
        members = [G.mul(x, n) for n in N.elements]
        for m in members:
            rep_of[m.key] = x
    made: Dict[bytes, Coset] = {}
    for member_key, rep in rep_of.items():
        c = made.get(rep.key)
        if c is None:
            c = Coset(rep, ctx)
            made[rep.key] = c
            cosets.append(c)
        ctx.by_member_key[member_key] = c
    ctx.identity_coset = ctx.by_member_key[G.identity.key]
    return QuotientGroup(G, N, ctx, cosets)
