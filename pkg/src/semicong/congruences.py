"""Congruences: testing, generation, exhaustive enumeration and the named ones.

Every "least X congruence" formula here has a brute-force counterpart,
:func:`least_congruence`, that scans :func:`all_congruences`.
"""
from __future__ import annotations

import enum
import os
from collections import deque
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Optional

from .core import FiniteSemiring, NotACongruence, Partition, quotient, subsemiring
from .elements import (
    NotQuasiCompletelyRegular,
    additive_idempotents,
    additive_inverses,
    has_period_one,
    is_completely_regular_element,
    is_quasi_completely_regular,
    zeros,
)
from .relations import BinRelation, green_h, star_d

__all__ = [
    "CongruenceKind",
    "OracleBoundExceeded",
    "oracle_max_order",
    "congruence_violation",
    "is_congruence",
    "generated_congruence",
    "tau_e",
    "tau_natural",
    "set_partitions",
    "all_congruences",
    "congruences_by_partitions",
    "congruences_by_joins",
    "least_congruence",
    "rho",
    "nu_seed",
    "nu",
    "nu_tau",
    "y_relation",
    "y_star",
    "gaip_violation",
    "is_gaip_congruence",
    "sigma_archimedean",
    "group_identity",
    "is_skew_ring",
    "is_b_lattice",
    "is_idempotent_semiring",
    "is_completely_regular_semiring",
    "is_b_lattice_of_skew_rings",
    "is_b_lattice_of_skew_rings_brute",
    "named_congruence",
]


class CongruenceKind(enum.Enum):
    EQUALITY = "epsilon"
    UNIVERSAL = "omega"
    RHO = "rho"
    SIGMA = "sigma"
    NU = "nu"
    Y = "y"
    YSTAR = "ystar"


class OracleBoundExceeded(ValueError):
    pass


def oracle_max_order() -> int:
    return int(os.environ.get("ORACLE_MAX_ORDER", "8"))


def _require_qcr(S):
    if not is_quasi_completely_regular(S):
        raise NotQuasiCompletelyRegular("semiring is not quasi completely regular")


def congruence_violation(S: FiniteSemiring, theta: Partition) -> Optional[tuple]:
    """``(a, b, c, op)`` with ``a theta b`` but the ``op``-translate by ``c`` unrelated, or None."""
    lab = theta.class_of
    add, mul = S.add, S.mul
    for block in theta.classes:
        a = block[0]
        for b in block[1:]:
            for c in S.elements:
                if lab[add[a][c]] != lab[add[b][c]]:
                    return (a, b, c, "x+c")
                if lab[add[c][a]] != lab[add[c][b]]:
                    return (a, b, c, "c+x")
                if lab[mul[a][c]] != lab[mul[b][c]]:
                    return (a, b, c, "x*c")
                if lab[mul[c][a]] != lab[mul[c][b]]:
                    return (a, b, c, "c*x")
    return None


def is_congruence(S: FiniteSemiring, theta: Partition) -> bool:
    return congruence_violation(S, theta) is None


def generated_congruence(S: FiniteSemiring, pairs: Iterable[tuple[int, int]]) -> Partition:
    """Least semiring congruence containing ``pairs`` (union-find plus work queue)."""
    if isinstance(pairs, (BinRelation, Partition)):
        pairs = pairs.pairs()
    n = S.order
    parent = list(range(n))
    add, mul = S.add, S.mul

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = deque()

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
            queue.append((a, b))

    for a, b in pairs:
        union(a, b)
    while queue:
        a, b = queue.popleft()
        for c in range(n):
            union(add[a][c], add[b][c])
            union(add[c][a], add[c][b])
            union(mul[a][c], mul[b][c])
            union(mul[c][a], mul[c][b])
    return Partition(tuple(find(x) for x in range(n)))


def tau_e(S: FiniteSemiring, tau: BinRelation) -> BinRelation:
    """``{(x+c+y, x+d+y) : c tau d}`` with each translator ``x``, ``y`` optional."""
    add = S.add
    left = [[c] + [add[x][c] for x in S.elements] for c in S.elements]
    bits = [[False] * S.order for _ in S.elements]
    for c, d in tau.pairs():
        # translators run over S^0: absent or any element, on each side
        for xc, xd in zip(left[c], left[d]):
            bits[xc][xd] = True
            for y in S.elements:
                bits[add[xc][y]][add[xd][y]] = True
    return BinRelation(bits)


def tau_natural(S: FiniteSemiring, pairs) -> Partition:
    """``((tau u tau^-1 u eps)^e)^t``, an equivalence but not necessarily a congruence."""
    if not isinstance(pairs, BinRelation):
        pairs = BinRelation.from_pairs(S.order, pairs)
    base = pairs | pairs.inverse() | BinRelation.identity(S.order)
    return Partition.from_pairs(S.order, tau_e(S, base).pairs())


def set_partitions(n: int):
    """All partitions of ``0..n-1`` as restricted growth label tuples."""
    labels = [0] * n

    def rec(i, m):
        if i == n:
            yield tuple(labels)
            return
        for c in range(m + 1):
            labels[i] = c
            yield from rec(i + 1, max(m, c + 1))

    if n == 0:
        yield ()
        return
    yield from rec(1, 1)


def congruences_by_partitions(S: FiniteSemiring) -> list[Partition]:
    out = []
    for labels in set_partitions(S.order):
        theta = Partition(labels)
        if is_congruence(S, theta):
            out.append(theta)
    return _sorted(out)


def congruences_by_joins(S: FiniteSemiring) -> list[Partition]:
    """Every congruence is a join of principal ones; close the principal set under joins."""
    n = S.order
    found = {Partition.identity(n)}
    principal = {generated_congruence(S, [(a, b)]) for a, b in combinations(range(n), 2)}
    found |= principal
    frontier = set(principal)
    while frontier:
        new = set()
        for theta in frontier:
            for p in principal:
                j = theta | p
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    return _sorted(found)


def _sorted(parts):
    return sorted(parts, key=lambda t: (-t.num_classes, t.class_of))


@lru_cache(maxsize=None)
def _all_congruences(S: FiniteSemiring) -> tuple[Partition, ...]:
    if S.order < 6:
        return tuple(congruences_by_partitions(S))
    return tuple(congruences_by_joins(S))


def all_congruences(S: FiniteSemiring, bound: Optional[int] = None) -> list[Partition]:
    """Every congruence of ``S``, finest first.

    Refuses orders above ``bound`` (default: ``ORACLE_MAX_ORDER`` env var, 8).
    """
    bound = oracle_max_order() if bound is None else bound
    if S.order > bound:
        raise OracleBoundExceeded(
            f"order {S.order} exceeds oracle bound {bound}; raise ORACLE_MAX_ORDER if the budget allows"
        )
    return list(_all_congruences(S))


def least_congruence(
    S: FiniteSemiring, quotient_pred: Callable[[FiniteSemiring], bool]
) -> Optional[Partition]:
    """Least congruence whose quotient satisfies ``quotient_pred``.

    Returns None when the qualifying congruences have no least member.
    """
    good = [t for t in all_congruences(S) if quotient_pred(quotient(S, t))]
    if not good:
        return None
    meet = good[0]
    for t in good[1:]:
        meet = meet & t
    return meet if meet in good else None


# -- quotient-shape predicates ---------------------------------------------

def group_identity(T: FiniteSemiring) -> Optional[int]:
    """Identity of ``(T, +)`` if it is a group, else None."""
    add = T.add
    for e in T.elements:
        if all(add[e][x] == x == add[x][e] for x in T.elements):
            if all(any(add[x][y] == e for y in T.elements) for x in T.elements):
                return e
            return None
    return None


def is_skew_ring(T: FiniteSemiring) -> bool:
    return group_identity(T) is not None


def is_idempotent_semiring(T: FiniteSemiring) -> bool:
    return all(T.add[x][x] == x and T.mul[x][x] == x for x in T.elements)


def is_b_lattice(T: FiniteSemiring) -> bool:
    add = T.add
    if not is_idempotent_semiring(T):
        return False
    return all(add[x][y] == add[y][x] for x in T.elements for y in T.elements)


def is_completely_regular_semiring(T: FiniteSemiring) -> bool:
    return all(is_completely_regular_element(T, a) for a in T.elements)


def _additively_completely_regular(T, a):
    add = T.add
    return any(add[add[a][x]][a] == a and add[a][x] == add[x][a] for x in T.elements)


def _classes_are_skew_rings(T, theta):
    for block in theta.classes:
        try:
            sub, _ = subsemiring(T, block)
        except ValueError:
            return False
        if not is_skew_ring(sub):
            return False
    return True


def is_b_lattice_of_skew_rings(T: FiniteSemiring) -> bool:
    """H+ is a congruence with b-lattice quotient and skew-ring classes."""
    if not all(_additively_completely_regular(T, a) for a in T.elements):
        return False
    h = green_h(T).to_partition()
    if not is_congruence(T, h):
        return False
    if not is_b_lattice(quotient(T, h)):
        return False
    return _classes_are_skew_rings(T, h)


def is_b_lattice_of_skew_rings_brute(T: FiniteSemiring) -> bool:
    """Some congruence has a b-lattice quotient and skew-ring classes."""
    for theta in all_congruences(T):
        if is_b_lattice(quotient(T, theta)) and _classes_are_skew_rings(T, theta):
            return True
    return False


# -- named congruences -----------------------------------------------------

def rho(S: FiniteSemiring) -> Partition:
    """Kernel of ``a -> a + 0_a``."""
    _require_qcr(S)
    z = zeros(S)
    return Partition(tuple(S.add[a][z[a]] for a in S.elements))


def nu_seed(S: FiniteSemiring) -> list[tuple[int, int]]:
    """Pairs of additive idempotents related by starred D+."""
    _require_qcr(S)
    d = star_d(S)
    idem = sorted(additive_idempotents(S))
    return [(e, f) for e in idem for f in idem if d(e, f)]


def nu_tau(S: FiniteSemiring) -> Partition:
    """Closure of the idempotent starred-D+ pairs under additive translation only."""
    return tau_natural(S, nu_seed(S))


@lru_cache(maxsize=None)
def nu(S: FiniteSemiring) -> Partition:
    """Least b-lattice of skew-rings congruence.

    Generated by the idempotent starred-D+ pairs together with ``rho``:
    the idempotent pairs alone leave non-regular elements separated (for
    the nil semiring ``{a, e}`` they generate equality), while every
    b-lattice of skew-rings congruence contains ``rho``.
    """
    theta = generated_congruence(S, nu_seed(S) + list(rho(S).pairs()))
    if not is_b_lattice_of_skew_rings(quotient(S, theta)):
        raise RuntimeError(f"quotient by {theta} is not a b-lattice of skew-rings")
    return theta


@lru_cache(maxsize=None)
def y_relation(S: FiniteSemiring) -> BinRelation:
    """``a Y b`` iff ``V+(a + 0_a) = V+(b + 0_b)``."""
    _require_qcr(S)
    z = zeros(S)
    inv = [additive_inverses(S, S.add[a][z[a]]) for a in S.elements]
    return BinRelation.from_predicate(S.order, lambda a, b: inv[a] == inv[b])


def y_star(S: FiniteSemiring) -> Partition:
    return generated_congruence(S, y_relation(S).pairs())


def gaip_violation(S: FiniteSemiring, theta) -> Optional[tuple[int, int]]:
    """``(a, e)`` with ``a theta e``, ``e`` additively idempotent, and no ``na = (n+1)a``."""
    rel = theta if isinstance(theta, BinRelation) else BinRelation.from_partition(theta)
    for e in sorted(additive_idempotents(S)):
        for a in S.elements:
            if rel(a, e) and not has_period_one(S, a):
                return (a, e)
    return None


def is_gaip_congruence(S: FiniteSemiring, theta) -> bool:
    return gaip_violation(S, theta) is None


def sigma_archimedean(S: FiniteSemiring, coords=None) -> Partition:
    """Least skew-ring congruence of a completely Archimedean ``S``.

    ``a sigma b`` iff ``g - h`` lies in the skew-ideal generated by the
    sandwich entries, where ``(i, g, l)`` and ``(j, h, m)`` are the Rees
    coordinates of ``a + 0_a`` and ``b + 0_b`` in the kernel.
    """
    from .structures import coordinatize, is_completely_archimedean, kernel, skew_ideal_generated

    if coords is None:
        if not is_completely_archimedean(S):
            raise ValueError("semiring is not completely Archimedean")
        coords = coordinatize(S, kernel(S))
    R = coords.spec.ring
    ideal = skew_ideal_generated(R, set(coords.spec.P_entries()))
    neg = coords.ring_negation()
    z = zeros(S)
    g = [coords.coords_of[S.add[a][z[a]]][1] for a in S.elements]
    # classes of the normal subgroup: g ~ h iff g + (-h) in ideal
    theta = Partition.from_pairs(
        S.order,
        [(a, b) for a in S.elements for b in S.elements if R.add[g[a]][neg[g[b]]] in ideal],
    )
    return theta


def named_congruence(S: FiniteSemiring, kind: CongruenceKind) -> Partition:
    kind = CongruenceKind(kind)
    if kind is CongruenceKind.EQUALITY:
        return Partition.identity(S.order)
    if kind is CongruenceKind.UNIVERSAL:
        return Partition.universal(S.order)
    if kind is CongruenceKind.RHO:
        return rho(S)
    if kind is CongruenceKind.SIGMA:
        return sigma_archimedean(S)
    if kind is CongruenceKind.NU:
        return nu(S)
    if kind is CongruenceKind.Y:
        y = y_relation(S)
        return y.to_partition()
    return y_star(S)
