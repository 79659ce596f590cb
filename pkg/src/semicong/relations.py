"""Green's relations of the additive reduct and a small boolean relation algebra."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import numpy as np

from .core import FiniteSemiring, Partition
from .elements import reg_index

__all__ = [
    "NotAdditivelyQuasiRegular",
    "BinRelation",
    "left_ideal",
    "right_ideal",
    "two_sided_ideal",
    "green_l",
    "green_r",
    "green_j",
    "green_h",
    "green_d",
    "green_d_reversed",
    "star_l",
    "star_r",
    "star_j",
    "star_h",
    "star_d",
    "compose",
    "intersect",
    "transitive_closure",
    "is_equivalence",
]


class NotAdditivelyQuasiRegular(ValueError):
    pass


class BinRelation:
    """Relation on ``0..n-1`` as an ``n x n`` boolean matrix (read only)."""

    __slots__ = ("bits",)

    def __init__(self, bits):
        bits = np.array(bits, dtype=bool)
        if bits.ndim != 2 or bits.shape[0] != bits.shape[1]:
            raise ValueError(f"relation matrix must be square, got shape {bits.shape}")
        bits.setflags(write=False)
        self.bits = bits

    @property
    def n(self) -> int:
        return self.bits.shape[0]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> BinRelation:
        bits = np.zeros((n, n), dtype=bool)
        for a, b in pairs:
            bits[a, b] = True
        return cls(bits)

    @classmethod
    def from_partition(cls, theta: Partition) -> BinRelation:
        lab = np.array(theta.class_of)
        return cls(lab[:, None] == lab[None, :])

    @classmethod
    def from_predicate(cls, n: int, pred) -> BinRelation:
        return cls([[bool(pred(a, b)) for b in range(n)] for a in range(n)])

    @classmethod
    def identity(cls, n: int) -> BinRelation:
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def universal(cls, n: int) -> BinRelation:
        return cls(np.ones((n, n), dtype=bool))

    def __call__(self, a: int, b: int) -> bool:
        return bool(self.bits[a, b])

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in zip(*np.nonzero(self.bits))]

    def __eq__(self, other):
        if not isinstance(other, BinRelation):
            return NotImplemented
        return self.bits.shape == other.bits.shape and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self):
        return hash(self.bits.tobytes())

    def __le__(self, other: BinRelation) -> bool:
        _check(self, other)
        return not bool(np.any(self.bits & ~other.bits))

    def __ge__(self, other: BinRelation) -> bool:
        return other <= self

    def __and__(self, other):
        return intersect(self, other)

    def __or__(self, other):
        _check(self, other)
        return BinRelation(self.bits | other.bits)

    def __matmul__(self, other):
        return compose(self, other)

    def inverse(self) -> BinRelation:
        return BinRelation(self.bits.T)

    def is_reflexive(self) -> bool:
        return bool(self.bits.diagonal().all())

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.bits, self.bits.T))

    def is_transitive(self) -> bool:
        return compose(self, self) <= self

    def is_universal(self) -> bool:
        return bool(self.bits.all())

    def to_partition(self) -> Partition:
        if not is_equivalence(self):
            raise ValueError("relation is not an equivalence")
        return Partition(tuple(int(np.argmax(row)) for row in self.bits))

    def __repr__(self):
        return f"BinRelation(n={self.n}, pairs={self.pairs()})"


def _check(r1: BinRelation, r2: BinRelation):
    if r1.n != r2.n:
        raise ValueError(f"relations on sets of different size: {r1.n} vs {r2.n}")


def compose(r1: BinRelation, r2: BinRelation) -> BinRelation:
    """``a (r1 o r2) b`` iff ``a r1 c`` and ``c r2 b`` for some ``c``."""
    _check(r1, r2)
    return BinRelation((r1.bits.astype(np.int64) @ r2.bits.astype(np.int64)) > 0)


def intersect(r1: BinRelation, r2: BinRelation) -> BinRelation:
    _check(r1, r2)
    return BinRelation(r1.bits & r2.bits)


def transitive_closure(r: BinRelation) -> BinRelation:
    bits = r.bits.copy()
    while True:
        nxt = bits | ((bits.astype(np.int64) @ bits.astype(np.int64)) > 0)
        if np.array_equal(nxt, bits):
            return BinRelation(bits)
        bits = nxt


def is_equivalence(r: BinRelation) -> bool:
    return r.is_reflexive() and r.is_symmetric() and r.is_transitive()


# principal ideals of (S, +), taken in S^1 without adjoining an identity

def left_ideal(S: FiniteSemiring, a: int) -> frozenset[int]:
    return frozenset([a] + [S.add[s][a] for s in S.elements])


def right_ideal(S: FiniteSemiring, a: int) -> frozenset[int]:
    return frozenset([a] + [S.add[a][s] for s in S.elements])


def two_sided_ideal(S: FiniteSemiring, a: int) -> frozenset[int]:
    add = S.add
    out = set(left_ideal(S, a)) | right_ideal(S, a)
    out.update(add[add[s][a]][t] for s in S.elements for t in S.elements)
    return frozenset(out)


def _kernel_relation(S, key) -> BinRelation:
    keys = [key(S, a) for a in S.elements]
    return BinRelation.from_predicate(S.order, lambda a, b: keys[a] == keys[b])


@lru_cache(maxsize=None)
def green_l(S: FiniteSemiring) -> BinRelation:
    return _kernel_relation(S, left_ideal)


@lru_cache(maxsize=None)
def green_r(S: FiniteSemiring) -> BinRelation:
    return _kernel_relation(S, right_ideal)


@lru_cache(maxsize=None)
def green_j(S: FiniteSemiring) -> BinRelation:
    return _kernel_relation(S, two_sided_ideal)


@lru_cache(maxsize=None)
def green_h(S: FiniteSemiring) -> BinRelation:
    return intersect(green_l(S), green_r(S))


@lru_cache(maxsize=None)
def green_d(S: FiniteSemiring) -> BinRelation:
    """``L+ o R+``; compare with :func:`green_d_reversed`."""
    return compose(green_l(S), green_r(S))


def green_d_reversed(S: FiniteSemiring) -> BinRelation:
    return compose(green_r(S), green_l(S))


def _regular_multiples(S):
    out = []
    for a in S.elements:
        p = reg_index(S, a)
        if p is None:
            raise NotAdditivelyQuasiRegular(f"no multiple of {a} is additively regular")
        out.append(S.multiple(p, a))
    return out


def _starred(S, base: BinRelation) -> BinRelation:
    m = _regular_multiples(S)
    return BinRelation.from_predicate(S.order, lambda a, b: base(m[a], m[b]))


@lru_cache(maxsize=None)
def star_l(S: FiniteSemiring) -> BinRelation:
    """``a *L+ b`` iff ``pa L+ qb`` with p, q the least regularity indices."""
    return _starred(S, green_l(S))


@lru_cache(maxsize=None)
def star_r(S: FiniteSemiring) -> BinRelation:
    return _starred(S, green_r(S))


@lru_cache(maxsize=None)
def star_j(S: FiniteSemiring) -> BinRelation:
    return _starred(S, green_j(S))


@lru_cache(maxsize=None)
def star_h(S: FiniteSemiring) -> BinRelation:
    return intersect(star_l(S), star_r(S))


@lru_cache(maxsize=None)
def star_d(S: FiniteSemiring) -> BinRelation:
    return compose(star_l(S), star_r(S))
