"""Element-level classification on the additive reduct.

Multiples are summed left to right: ``1a = a``, ``(k+1)a = ka + a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import FiniteSemiring

__all__ = [
    "NotQuasiCompletelyRegular",
    "ElementProfile",
    "additive_orbit",
    "additive_idempotents",
    "additive_inverses",
    "is_additively_regular",
    "completely_regular_witness",
    "is_completely_regular_element",
    "reg_index",
    "cr_index",
    "zero_of",
    "zeros",
    "is_quasi_completely_regular",
    "is_additively_quasi_regular",
    "profile",
    "has_period_one",
]


class NotQuasiCompletelyRegular(ValueError):
    pass


@dataclass(frozen=True)
class ElementProfile:
    index: int
    reg_index: Optional[int]
    cr_index: Optional[int]
    zero_of: Optional[int]


@lru_cache(maxsize=None)
def additive_orbit(S: FiniteSemiring, a: int) -> tuple[tuple[int, ...], int]:
    """Distinct multiples ``(a, 2a, ..., ma)`` and the position where the cycle starts.

    ``orbit[k]`` is ``(k+1)a``; the next multiple after the last one is
    ``orbit[start]``.
    """
    orbit = [a]
    seen = {a: 0}
    while True:
        nxt = S.add[orbit[-1]][a]
        if nxt in seen:
            return tuple(orbit), seen[nxt]
        seen[nxt] = len(orbit)
        orbit.append(nxt)


def has_period_one(S: FiniteSemiring, a: int) -> bool:
    """Whether ``na = (n+1)a`` for some ``n >= 1``."""
    orbit, start = additive_orbit(S, a)
    return start == len(orbit) - 1


@lru_cache(maxsize=None)
def additive_idempotents(S: FiniteSemiring) -> frozenset[int]:
    return frozenset(e for e in S.elements if S.add[e][e] == e)


def additive_inverses(S: FiniteSemiring, a: int) -> frozenset[int]:
    """``{x : a + x + a = a and x + a + x = x}``."""
    add = S.add
    return frozenset(
        x for x in S.elements if add[add[a][x]][a] == a and add[add[x][a]][x] == x
    )


def is_additively_regular(S: FiniteSemiring, a: int) -> bool:
    add = S.add
    return any(add[add[a][x]][a] == a for x in S.elements)


def completely_regular_witness(S: FiniteSemiring, a: int) -> Optional[int]:
    """Least ``x`` with ``a = a+x+a``, ``a+x = x+a`` and ``a(a+x) = a+x``, if any."""
    add, mul = S.add, S.mul
    for x in S.elements:
        ax = add[a][x]
        if add[ax][a] == a and ax == add[x][a] and mul[a][ax] == ax:
            return x
    return None


def is_completely_regular_element(S: FiniteSemiring, a: int) -> bool:
    return completely_regular_witness(S, a) is not None


def _first_multiple(S, a, pred):
    # every multiple of a appears among the distinct orbit members
    for k, m in enumerate(additive_orbit(S, a)[0]):
        if pred(S, m):
            return k + 1
    return None


@lru_cache(maxsize=None)
def reg_index(S: FiniteSemiring, a: int) -> Optional[int]:
    """Least ``p`` with ``pa`` additively regular."""
    return _first_multiple(S, a, is_additively_regular)


@lru_cache(maxsize=None)
def cr_index(S: FiniteSemiring, a: int) -> Optional[int]:
    """Least ``n`` with ``na`` completely regular, or None if no multiple is."""
    return _first_multiple(S, a, is_completely_regular_element)


@lru_cache(maxsize=None)
def zero_of(S: FiniteSemiring, a: int) -> int:
    """The additive idempotent ``0_a`` of the group H+-class holding ``n a``, ``n`` = cr_index."""
    n = cr_index(S, a)
    if n is None:
        raise NotQuasiCompletelyRegular(f"no multiple of {a} is completely regular")
    na = S.multiple(n, a)
    x = completely_regular_witness(S, na)
    e = S.add[na][x]
    # an H+-class holds at most one idempotent; the idempotent multiple of a must agree
    idem = [m for m in additive_orbit(S, a)[0] if S.add[m][m] == m]
    if idem != [e]:
        raise RuntimeError(
            f"inconsistent 0_{a}: witness gives {e}, idempotent multiples {idem}"
        )
    return e


@lru_cache(maxsize=None)
def zeros(S: FiniteSemiring) -> tuple[int, ...]:
    """``0_a`` for every element; raises if S is not quasi completely regular."""
    return tuple(zero_of(S, a) for a in S.elements)


@lru_cache(maxsize=None)
def is_quasi_completely_regular(S: FiniteSemiring) -> bool:
    return all(cr_index(S, a) is not None for a in S.elements)


def is_additively_quasi_regular(S: FiniteSemiring) -> bool:
    return all(reg_index(S, a) is not None for a in S.elements)


def profile(S: FiniteSemiring, a: int) -> ElementProfile:
    n = cr_index(S, a)
    return ElementProfile(a, reg_index(S, a), n, zero_of(S, a) if n is not None else None)
