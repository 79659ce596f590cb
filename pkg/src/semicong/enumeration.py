"""Exhaustive enumeration of small semirings from raw operation tables."""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterable, Iterator

import numpy as np

from .core import FiniteSemiring
from .elements import is_quasi_completely_regular
from .structures import is_completely_archimedean, is_quasi_orthodox

__all__ = [
    "MAX_EXHAUSTIVE_ORDER",
    "FILTERS",
    "associative_tables",
    "enumerate_semirings",
    "canonical_form",
]

MAX_EXHAUSTIVE_ORDER = 3

FILTERS: dict[str, Callable[[FiniteSemiring], bool]] = {
    "qcr": is_quasi_completely_regular,
    "ca": is_completely_archimedean,
    "qo": lambda S: is_quasi_completely_regular(S) and is_quasi_orthodox(S),
}


@lru_cache(maxsize=None)
def associative_tables(n: int) -> np.ndarray:
    """Every associative ``n x n`` table, shape ``(count, n, n)``, in lexicographic order."""
    cells = n * n
    codes = np.arange(n**cells, dtype=np.int64)
    digits = np.empty((codes.size, cells), dtype=np.int8)
    for k in range(cells - 1, -1, -1):
        digits[:, k] = codes % n
        codes //= n
    tabs = digits.reshape(-1, n, n)
    ok = np.ones(len(tabs), dtype=bool)
    idx = np.arange(len(tabs))
    for i, j, k in product(range(n), repeat=3):
        left = tabs[idx, tabs[:, i, j], k]
        right = tabs[idx, i, tabs[:, j, k]]
        ok &= left == right
    return tabs[ok]


def _distributive_pairs(adds: np.ndarray, muls: np.ndarray) -> np.ndarray:
    """Boolean matrix ``[a, m]``: multiplication ``m`` distributes over addition ``a``."""
    n = adds.shape[1]
    ok = np.ones((len(adds), len(muls)), dtype=bool)
    A = adds[:, None]  # (na, 1, n, n)
    M = muls[None, :]  # (1, nm, n, n)
    A = np.broadcast_to(A, (len(adds), len(muls), n, n))
    M = np.broadcast_to(M, (len(adds), len(muls), n, n))
    ia, im = np.indices(ok.shape)
    for i, j, k in product(range(n), repeat=3):
        jk = A[:, :, j, k]
        lhs = M[ia, im, i, jk]
        rhs = A[ia, im, M[:, :, i, j], M[:, :, i, k]]
        ok &= lhs == rhs
        lhs = M[ia, im, jk, i]
        rhs = A[ia, im, M[:, :, j, i], M[:, :, k, i]]
        ok &= lhs == rhs
    return ok


def canonical_form(S: FiniteSemiring) -> tuple:
    """Lexicographically least relabelling of both tables; equal iff isomorphic."""
    n = S.order
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for x, y in enumerate(perm):
            inv[y] = x
        key = tuple(
            tuple(perm[t[inv[a]][inv[b]]] for b in range(n))
            for t in (S.add, S.mul)
            for a in range(n)
        )
        if best is None or key < best:
            best = key
    return best


def enumerate_semirings(
    n: int, filters: Iterable[str] = (), upto_iso: bool = False
) -> Iterator[FiniteSemiring]:
    """All semirings on ``0..n-1`` (raw tables), optionally filtered and deduplicated.

    Instances are yielded in lexicographic order of ``(add, mul)``; with
    ``upto_iso`` the first member of each isomorphism class is kept.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_EXHAUSTIVE_ORDER:
        raise ValueError(
            f"exhaustive mode supports order <= {MAX_EXHAUSTIVE_ORDER}; "
            "build larger instances with the constructive corpus (semicong.corpus)"
        )
    preds = []
    for name in filters:
        if name not in FILTERS:
            raise ValueError(f"unknown filter {name!r}; choose from {sorted(FILTERS)}")
        preds.append(FILTERS[name])
    tabs = associative_tables(n)
    ok = _distributive_pairs(tabs, tabs)
    seen = set()
    for a, m in zip(*np.nonzero(ok)):
        S = FiniteSemiring(
            tuple(tuple(int(x) for x in row) for row in tabs[a]),
            tuple(tuple(int(x) for x in row) for row in tabs[m]),
        )
        if not all(p(S) for p in preds):
            continue
        if upto_iso:
            key = canonical_form(S)
            if key in seen:
                continue
            seen.add(key)
        yield S
