"""Exact group elements: square matrices over GF(p) and finite permutations.

Every element carries a canonical byte key.  Keys decide equality and hashing,
and their lexicographic order is the total order used to make every enumeration
in the package deterministic.  Key layout:

  matrix:       0x00 | p (2 bytes LE) | n (1 byte) | n*n entries, row-major, 1 byte each
  permutation:  0x01 | degree (2 bytes LE) | images, 2 bytes LE each

Arithmetic is exact: matrix entries are residues mod p (numpy int64 under the
hood), permutations are image tuples with composition (a*b)(i) = a(b(i)).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import BackendMismatch, CapExceeded, SingularMatrix

__all__ = [
    "Element",
    "FpMatrix",
    "Permutation",
    "multiply",
    "invert",
    "power",
    "decode_element",
]

_TAG_MATRIX = 0
_TAG_PERM = 1


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not _is_prime(p):
        raise ValueError(f"p must be a prime, got {p!r}")
    if p >= 1 << 16:
        raise CapExceeded(f"p={p} exceeds the 16-bit residue limit")


class Element:
    """Shared behaviour: key-based identity and square-and-multiply powers."""

    __slots__ = ("key", "_inv", "_ord")

    def __mul__(self, other: "Element") -> "Element":
        raise NotImplementedError

    def _compute_inverse(self) -> "Element":
        raise NotImplementedError

    def identity_like(self) -> "Element":
        raise NotImplementedError

    def is_identity(self) -> bool:
        raise NotImplementedError

    def inverse(self) -> "Element":
        inv = self._inv
        if inv is None:
            inv = self._compute_inverse()
            self._inv = inv
        return inv

    def order(self) -> int:
        """Multiplicative order, by repeated multiplication."""
        k = self._ord
        if k is None:
            k = 1
            y = self
            while not y.is_identity():
                y = y * self
                k += 1
            self._ord = k
        return k

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.identity_like()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Element) and self.key == other.key

    def __ne__(self, other: object) -> bool:
        return not self.__eq__(other)

    def __lt__(self, other: "Element") -> bool:
        return self.key < other.key

    def __le__(self, other: "Element") -> bool:
        return self.key <= other.key

    def __hash__(self) -> int:
        return hash(self.key)


class FpMatrix(Element):
    """n-by-n matrix over GF(p), entries stored reduced mod p."""

    __slots__ = ("p", "n", "arr")

    def __init__(self, p: int, rows: Sequence[Sequence[int]] | np.ndarray):
        _require_prime(p)
        arr = np.asarray(rows, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"matrix must be square, got shape {arr.shape}")
        arr = np.mod(arr, p)
        arr.setflags(write=False)
        self._init(p, arr)

    def _init(self, p: int, arr: np.ndarray) -> None:
        self.p = p
        self.n = arr.shape[0]
        self.arr = arr
        if self.n > 255:
            raise CapExceeded(f"matrix size {self.n} exceeds the 1-byte encoding limit")
        if p <= 256:
            self.key = (
                bytes((_TAG_MATRIX,))
                + p.to_bytes(2, "little")
                + bytes((self.n,))
                + arr.astype(np.uint8).tobytes()
            )
        else:
            # arithmetic still works; anything needing a key refuses first
            self.key = None
        self._inv = None
        self._ord = None

    @classmethod
    def _wrap(cls, p: int, arr: np.ndarray) -> "FpMatrix":
        m = cls.__new__(cls)
        arr.setflags(write=False)
        m._init(p, arr)
        return m

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        _require_prime(p)
        return cls._wrap(p, np.eye(n, dtype=np.int64))

    def rows(self) -> tuple:
        return tuple(tuple(int(v) for v in row) for row in self.arr)

    def __mul__(self, other: Element) -> "FpMatrix":
        if not isinstance(other, FpMatrix):
            raise BackendMismatch(f"cannot multiply FpMatrix by {type(other).__name__}")
        if other.p != self.p or other.n != self.n:
            raise BackendMismatch(
                f"matrix universes differ: GF({self.p})^{self.n} vs GF({other.p})^{other.n}"
            )
        return FpMatrix._wrap(self.p, (self.arr @ other.arr) % self.p)

    def _compute_inverse(self) -> "FpMatrix":
        """Gauss-Jordan elimination mod p."""
        p, n = self.p, self.n
        aug = [list(map(int, row)) + [1 if i == j else 0 for j in range(n)]
               for i, row in enumerate(self.arr)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] % p), None)
            if pivot is None:
                raise SingularMatrix(f"matrix is singular mod {p}")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = pow(aug[col][col], -1, p)
            aug[col] = [(v * inv) % p for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[col])]
        return FpMatrix._wrap(p, np.array([row[n:] for row in aug], dtype=np.int64))

    def identity_like(self) -> "FpMatrix":
        return FpMatrix.identity(self.p, self.n)

    def is_identity(self) -> bool:
        return bool((self.arr == np.eye(self.n, dtype=np.int64)).all())

    def __hash__(self) -> int:
        if self.key is None:
            raise CapExceeded(f"entries mod {self.p} do not fit the 1-byte encoding")
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, {[list(r) for r in self.rows()]})"


class Permutation(Element):
    """Permutation of {0, ..., degree-1}; (a*b)(i) = a(b(i))."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        arr = np.asarray(list(images), dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("images must be a flat sequence")
        d = arr.shape[0]
        if d >= 1 << 16:
            raise CapExceeded(f"degree {d} exceeds the 2-byte encoding limit")
        if sorted(int(v) for v in arr) != list(range(d)):
            raise ValueError(f"images are not a permutation of 0..{d - 1}")
        arr.setflags(write=False)
        self._init(arr)

    def _init(self, arr: np.ndarray) -> None:
        self.images = arr
        d = arr.shape[0]
        self.key = (
            bytes((_TAG_PERM,))
            + d.to_bytes(2, "little")
            + arr.astype("<u2").tobytes()
        )
        self._inv = None
        self._ord = None

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Permutation":
        s = cls.__new__(cls)
        arr.setflags(write=False)
        s._init(arr)
        return s

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._wrap(np.arange(degree, dtype=np.int64))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return self.images.shape[0]

    def __call__(self, i: int) -> int:
        return int(self.images[i])

    def __mul__(self, other: Element) -> "Permutation":
        if not isinstance(other, Permutation):
            raise BackendMismatch(f"cannot multiply Permutation by {type(other).__name__}")
        if other.degree != self.degree:
            raise BackendMismatch(f"degrees differ: {self.degree} vs {other.degree}")
        return Permutation._wrap(self.images[other.images])

    def _compute_inverse(self) -> "Permutation":
        inv = np.empty(self.degree, dtype=np.int64)
        inv[self.images] = np.arange(self.degree, dtype=np.int64)
        return Permutation._wrap(inv)

    def identity_like(self) -> "Permutation":
        return Permutation.identity(self.degree)

    def is_identity(self) -> bool:
        return bool((self.images == np.arange(self.degree, dtype=np.int64)).all())

    __hash__ = Element.__hash__

    def __repr__(self) -> str:
        return f"Permutation({list(map(int, self.images))})"


def multiply(a: Element, b: Element) -> Element:
    return a * b


def invert(a: Element) -> Element:
    return a.inverse()


def power(a: Element, k: int) -> Element:
    return a ** k


def decode_element(key: bytes) -> Element:
    """Rebuild an element from its canonical byte key."""
    if not key:
        raise ValueError("empty element key")
    tag = key[0]
    if tag == _TAG_MATRIX:
        if len(key) < 4:
            raise ValueError("truncated matrix key")
        p = int.from_bytes(key[1:3], "little")
        n = key[3]
        body = key[4:]
        if len(body) != n * n:
            raise ValueError(f"matrix key body has {len(body)} bytes, expected {n * n}")
        entries = np.frombuffer(body, dtype=np.uint8).astype(np.int64).reshape(n, n)
        if entries.size and int(entries.max()) >= p:
            raise ValueError(f"matrix key entry out of range mod {p}")
        return FpMatrix(p, entries)
    if tag == _TAG_PERM:
        if len(key) < 3:
            raise ValueError("truncated permutation key")
        d = int.from_bytes(key[1:3], "little")
        body = key[3:]
        if len(body) != 2 * d:
            raise ValueError(f"permutation key body has {len(body)} bytes, expected {2 * d}")
        images = np.frombuffer(body, dtype="<u2").astype(np.int64)
        return Permutation(images)
    raise ValueError(f"unknown element tag {tag}")
