"""Deterministic constructors for the group and action corpus.

Family specs are little expressions like ``heisenberg(3)`` or
``direct_product(quaternion(8), cyclic(3,1))``; the same grammar also names
actions (``inner``, ``jordan_power(3)``).  Building the same spec twice yields
byte-identical element key sets, so specs can serve as cache keys and as the
reproducer-bundle vocabulary.

Matrix-backed families: elementary abelian groups (as affine row matrices),
unitriangular groups and the Heisenberg group.  Everything else rides the
permutation backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from .actions import ActionPair, inner_action, trivial_action
from .autsearch import DEFAULT_AUT_BUDGET, brute_force_aut
from .elements import Element, FpMatrix, Permutation, _is_prime
from .errors import CapExceeded, ConfigError, UnknownFamily
from .groups import DEFAULT_CLOSURE_CAP, GroupTable, automorphism_from_images, close

__all__ = [
    "FamilySpec",
    "parse_family",
    "build_group",
    "build_action",
    "paper_sigma_pair",
    "sigma_matrix",
    "sigma_power_closed_form",
    "FAMILY_NAMES",
    "ACTION_NAMES",
]


# -- spec grammar --------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Parsed spec: a name plus integer or nested-spec arguments."""

    name: str
    args: Tuple[Union[int, "FamilySpec"], ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({','.join(str(a) for a in self.args)})"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ConfigError:
        return ConfigError(f"spec {self.text!r}: {message} at position {self.pos}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse_spec(self) -> FamilySpec:
        self.skip_ws()
        start = self.pos
        while self.peek().isalnum() or self.peek() == "_":
            self.pos += 1
        name = self.text[start:self.pos].lower()
        if not name or name[0].isdigit():
            raise self.error("expected a family name")
        args: List[Union[int, FamilySpec]] = []
        self.skip_ws()
        if self.peek() == "(":
            self.pos += 1
            self.skip_ws()
            if self.peek() == ")":
                self.pos += 1
            else:
                while True:
                    args.append(self.parse_arg())
                    self.skip_ws()
                    if self.peek() == ",":
                        self.pos += 1
                        continue
                    if self.peek() == ")":
                        self.pos += 1
                        break
                    raise self.error("expected ',' or ')'")
        return FamilySpec(name, tuple(args))

    def parse_arg(self) -> Union[int, FamilySpec]:
        self.skip_ws()
        if self.peek().isdigit():
            start = self.pos
            while self.peek().isdigit():
                self.pos += 1
            return int(self.text[start:self.pos])
        return self.parse_spec()


def parse_family(text: str) -> FamilySpec:
    parser = _Parser(text)
    spec = parser.parse_spec()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("unexpected trailing input")
    return spec


def _int_args(spec: FamilySpec, count: int) -> List[int]:
    if len(spec.args) != count or not all(isinstance(a, int) for a in spec.args):
        raise ConfigError(
            f"{spec.name} takes {count} integer argument(s), got {spec}")
    return list(spec.args)  # type: ignore[arg-type]


def _prime_power_base(n: int):
    """The prime p with n = p^k (k >= 1), or None."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 and _is_prime(p) else None
    return None


# -- matrix-backed families ----------------------------------------------


def _affine_row(p: int, vector: Sequence[int]) -> FpMatrix:
    """(n+1)x(n+1) matrix [[1, v], [0, I]]; these multiply by adding rows."""
    n = len(vector)
    arr = np.eye(n + 1, dtype=np.int64)
    arr[0, 1:] = np.asarray(vector, dtype=np.int64) % p
    return FpMatrix(p, arr)


def _elementary_abelian(p: int, n: int, cap: int) -> GroupTable:
    if not _is_prime(p) or n < 1:
        raise ConfigError(f"elementary_abelian needs a prime and a rank >= 1, got ({p},{n})")
    if p ** n > cap:
        raise CapExceeded(f"|G| = {p}^{n} exceeds cap {cap}")
    vectors = [[]]
    for _ in range(n):
        vectors = [v + [c] for v in vectors for c in range(p)]
    elements = [_affine_row(p, v) for v in vectors]
    gens = [_affine_row(p, [1 if j == i else 0 for j in range(n)]) for i in range(n)]
    return GroupTable(elements, gens, p=p)


def _unitriangular(n: int, p: int, cap: int) -> GroupTable:
    if n < 2 or not _is_prime(p):
        raise ConfigError(f"ut needs a size >= 2 and a prime, got ({n},{p})")
    gens = []
    for i in range(n - 1):
        arr = np.eye(n, dtype=np.int64)
        arr[i, i + 1] = 1
        gens.append(FpMatrix(p, arr))
    return close(gens, cap=cap, p=p)


# -- permutation-backed families -----------------------------------------


def _cyclic(p: int, n: int, cap: int) -> GroupTable:
    if not _is_prime(p) or n < 1:
        raise ConfigError(f"cyclic needs a prime and an exponent >= 1, got ({p},{n})")
    m = p ** n
    if m > cap:
        raise CapExceeded(f"|G| = {p}^{n} exceeds cap {cap}")
    shift = Permutation([(i + 1) % m for i in range(m)])
    elements = [Permutation([(i + k) % m for i in range(m)]) for k in range(m)]
    return GroupTable(elements, [shift], p=p)


def _dihedral(order: int, cap: int) -> GroupTable:
    if order == 4:
        a = Permutation.from_cycles(4, [(0, 1)])
        b = Permutation.from_cycles(4, [(2, 3)])
        return close([a, b], cap=cap, p=2)
    if order < 6 or order % 2:
        raise ConfigError(f"dihedral takes an even order >= 4, got {order}")
    k = order // 2
    rot = Permutation([(i + 1) % k for i in range(k)])
    flip = Permutation([(k - i) % k for i in range(k)])
    return close([rot, flip], cap=cap, p=_prime_power_base(order))


_QUATERNION_UNITS = ("1", "i", "j", "k")
_QUATERNION_MUL = {  # (sign, unit) of the product of two units
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _quaternion(order: int, cap: int) -> GroupTable:
    if order != 8:
        raise ConfigError(f"quaternion is catalogued only at order 8, got {order}")
    basis = [(s, u) for u in _QUATERNION_UNITS for s in (1, -1)]
    index = {q: i for i, q in enumerate(basis)}

    def mul(a, b):
        sign, unit = _QUATERNION_MUL[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    def left_mult(g) -> Permutation:
        return Permutation([index[mul(g, x)] for x in basis])

    return close([left_mult((1, "i")), left_mult((1, "j"))], cap=cap, p=2)


def _wreath_cp_cp(p: int, cap: int) -> GroupTable:
    if not _is_prime(p):
        raise ConfigError(f"wreath_cp_cp needs a prime, got {p}")
    m = p * p
    if p ** (p + 1) > cap:
        raise CapExceeded(f"|G| = {p}^{p + 1} exceeds cap {cap}")
    base = Permutation.from_cycles(m, [tuple(range(p))])  # cycle the first block
    top = Permutation([(i + p) % m for i in range(m)])    # rotate the blocks
    return close([base, top], cap=cap, p=p)


def _sym(n: int, cap: int) -> GroupTable:
    if n < 2:
        raise ConfigError(f"sym needs n >= 2, got {n}")
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return close(gens, cap=cap, p=_prime_power_base(math.factorial(n)))


def _alt(n: int, cap: int) -> GroupTable:
    if n < 3:
        raise ConfigError(f"alt needs n >= 3, got {n}")
    gens = [Permutation.from_cycles(n, [(i, i + 1, i + 2)]) for i in range(n - 2)]
    return close(gens, cap=cap, p=_prime_power_base(math.factorial(n) // 2))


def _sl2_3(cap: int) -> GroupTable:
    vectors = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    def as_perm(m) -> Permutation:
        return Permutation([index[((m[0][0] * a + m[0][1] * b) % 3,
                                   (m[1][0] * a + m[1][1] * b) % 3)]
                            for (a, b) in vectors])

    s = as_perm(((0, 2), (1, 0)))   # [[0,-1],[1,0]]
    t = as_perm(((1, 1), (0, 1)))   # [[1,1],[0,1]]
    return close([s, t], cap=cap)


def _dic3(cap: int) -> GroupTable:
    a = Permutation.from_cycles(7, [(0, 1, 2)])
    x = Permutation.from_cycles(7, [(1, 2), (3, 4, 5, 6)])
    return close([a, x], cap=cap)


def _direct_product(g1: GroupTable, g2: GroupTable, cap: int) -> GroupTable:
    if g1.order * g2.order > cap:
        raise CapExceeded(f"|G| = {g1.order}*{g2.order} exceeds cap {cap}")
    e1, e2 = g1.elements[0], g2.elements[0]
    if isinstance(e1, Permutation) and isinstance(e2, Permutation):
        d1 = e1.degree

        def pair(x: Permutation, y: Permutation) -> Permutation:
            return Permutation(list(x.images) + [d1 + i for i in y.images])
    elif isinstance(e1, FpMatrix) and isinstance(e2, FpMatrix) and e1.p == e2.p:
        n1 = e1.n

        def pair(x: FpMatrix, y: FpMatrix) -> FpMatrix:
            arr = np.zeros((n1 + y.n, n1 + y.n), dtype=np.int64)
            arr[:n1, :n1] = x.arr
            arr[n1:, n1:] = y.arr
            return FpMatrix(e1.p, arr)
    else:
        raise ConfigError(
            "direct_product needs two permutation groups or two matrix groups over the same prime")
    elements = [pair(x, y) for x in g1.elements for y in g2.elements]
    id1, id2 = g1.identity, g2.identity
    gens = [pair(g, id2) for g in g1.generators] + [pair(id1, g) for g in g2.generators]
    return GroupTable(elements, gens, p=_prime_power_base(g1.order * g2.order))


# -- dispatch ------------------------------------------------------------


FAMILY_NAMES = (
    "elementary_abelian", "cyclic", "heisenberg", "ut", "dihedral",
    "quaternion", "direct_product", "wreath_cp_cp", "sym", "alt",
    "sl2_3", "dic3",
)


def build_group(spec: Union[str, FamilySpec], *,
                cap: int = DEFAULT_CLOSURE_CAP) -> GroupTable:
    if isinstance(spec, str):
        spec = parse_family(spec)
    name = spec.name
    if name == "elementary_abelian":
        p, n = _int_args(spec, 2)
        return _elementary_abelian(p, n, cap)
    if name == "cyclic":
        p, n = _int_args(spec, 2)
        return _cyclic(p, n, cap)
    if name == "heisenberg":
        (p,) = _int_args(spec, 1)
        return _unitriangular(3, p, cap)
    if name == "ut":
        n, p = _int_args(spec, 2)
        return _unitriangular(n, p, cap)
    if name == "dihedral":
        (order,) = _int_args(spec, 1)
        return _dihedral(order, cap)
    if name == "quaternion":
        (order,) = _int_args(spec, 1)
        return _quaternion(order, cap)
    if name == "wreath_cp_cp":
        (p,) = _int_args(spec, 1)
        return _wreath_cp_cp(p, cap)
    if name == "sym":
        (n,) = _int_args(spec, 1)
        return _sym(n, cap)
    if name == "alt":
        (n,) = _int_args(spec, 1)
        return _alt(n, cap)
    if name == "sl2_3":
        _int_args(spec, 0)
        return _sl2_3(cap)
    if name == "dic3":
        _int_args(spec, 0)
        return _dic3(cap)
    if name == "direct_product":
        if len(spec.args) != 2 or not all(isinstance(a, FamilySpec) for a in spec.args):
            raise ConfigError(f"direct_product takes two nested specs, got {spec}")
        g1 = build_group(spec.args[0], cap=cap)
        g2 = build_group(spec.args[1], cap=cap)
        return _direct_product(g1, g2, cap)
    raise UnknownFamily(f"unknown family {name!r}")


# -- the Jordan-block action and the explicit sigma matrix ----------------


def sigma_matrix(p: int, size: int = 0) -> FpMatrix:
    """Unitriangular single Jordan block (1s on the superdiagonal); the
    default size p+1 is the one the rank-(p+1) construction wants."""
    n = size or p + 1
    arr = np.eye(n, dtype=np.int64)
    for i in range(n - 1):
        arr[i, i + 1] = 1
    return FpMatrix(p, arr)


def sigma_power_closed_form(p: int, n: int, size: int = 0) -> FpMatrix:
    """The n-th power of the Jordan block, entry (i, i+j) = binom(n, j) mod p
    (binom(n, j) = 0 for j > n), computed without any matrix multiplication."""
    if n < 0:
        raise ValueError("the closed form covers non-negative powers")
    dim = size or p + 1
    arr = np.zeros((dim, dim), dtype=np.int64)
    for i in range(dim):
        for j in range(dim - i):
            arr[i, i + j] = math.comb(n, j) % p
    return FpMatrix(p, arr)


def _jordan_images(G: GroupTable, m: int) -> List[Element]:
    """Generator images under the m-th power of the Jordan automorphism.

    Writing the generators as an ordered basis e_1..e_r of an elementary
    abelian group, the map sends e_i to sum_d binom(m,d) e_{i-d} (the i-th
    column of the Jordan block's m-th power).  Validity on the actual group is
    left to automorphism_from_images.
    """
    p = G.p
    if p is None:
        raise ConfigError("the jordan action needs a group with a designated prime")
    gens = G.generators
    images: List[Element] = []
    for i, g in enumerate(gens):
        img = G.identity
        for d in range(i + 1):
            e = math.comb(m, d) % p
            if e:
                img = G.mul(img, gens[i - d] ** e)
        images.append(img)
    return images


ACTION_NAMES = ("trivial", "inner", "jordan", "jordan_power", "full_aut")


def build_action(G: GroupTable, spec: Union[str, FamilySpec], *,
                 action_cap: int = 10_000,
                 aut_budget: int = DEFAULT_AUT_BUDGET) -> ActionPair:
    if isinstance(spec, str):
        spec = parse_family(spec)
    name = spec.name
    if name == "trivial":
        _int_args(spec, 0)
        return trivial_action(G)
    if name == "inner":
        _int_args(spec, 0)
        return inner_action(G)
    if name == "jordan":
        _int_args(spec, 0)
        m = 1
    elif name == "jordan_power":
        (m,) = _int_args(spec, 1)
    elif name == "full_aut":
        _int_args(spec, 0)
        result = brute_force_aut(G, budget=aut_budget)
        return ActionPair.build(G, result.automorphisms,
                                cap=max(len(result.automorphisms), 1))
    else:
        raise UnknownFamily(f"unknown action {name!r}")
    sigma = automorphism_from_images(G, G.generators, _jordan_images(G, m))
    return ActionPair.build(G, [sigma], cap=action_cap)


def paper_sigma_pair(p: int, *, cap: int = DEFAULT_CLOSURE_CAP) -> ActionPair:
    """Rank-(p+1) elementary abelian group under its Jordan-block cyclic
    action: the explicit tightness example."""
    E = _elementary_abelian(p, p + 1, cap)
    return build_action(E, FamilySpec("jordan"))
