"""Rees matrix semirings, skew-ideals and structural decomposition.

A Rees matrix semiring is built on ``I x R x L`` from two bands sharing a
distinguished element ``o``, a skew-ring ``R`` and a sandwich matrix ``P``
indexed ``P[l][i]``:

    (i, a, l) + (j, b, m) = (i, a + P[l][j] + b, m)
    (i, a, l) * (j, b, m) = (ij, -P[lm][ij] + ab, lm)
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .congruences import (
    group_identity,
    is_b_lattice,
    is_congruence,
    is_skew_ring,
)
from .core import (
    FiniteSemiring,
    Partition,
    axiom_violations,
    quotient,
    subsemiring,
)
from .elements import (
    additive_idempotents,
    additive_orbit,
    has_period_one,
    is_completely_regular_element,
    is_quasi_completely_regular,
    zeros,
)
from .relations import green_j, green_l, green_r, star_j

__all__ = [
    "ReesSpecError",
    "StructureFinding",
    "Band",
    "ReesSpec",
    "ReesCoordinates",
    "Decomposition",
    "ring_negation",
    "validate_p",
    "rees_elements",
    "rees_matrix",
    "skew_ideal_generated",
    "is_completely_simple",
    "is_completely_archimedean",
    "kernel",
    "coordinatize",
    "decompose",
    "quasi_orthodox_violation",
    "is_quasi_orthodox",
    "zero_identity_violation",
    "zero_identity_check",
]


class ReesSpecError(ValueError):
    """Structurally malformed Rees data (shapes, bands, distinguished element)."""


class StructureFinding(RuntimeError):
    """A structural fact expected to hold on this instance was observed to fail."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Band:
    table: tuple[tuple[int, ...], ...]
    o: int = 0

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0 or any(len(r) != n for r in table):
            raise ReesSpecError("band table must be square and nonempty")
        if not 0 <= self.o < n:
            raise ReesSpecError(f"distinguished element {self.o} out of range")
        for x, y, z in product(range(n), repeat=3):
            if table[table[x][y]][z] != table[x][table[y][z]]:
                raise ReesSpecError(f"band not associative at {(x, y, z)}")
        for x in range(n):
            if table[x][x] != x:
                raise ReesSpecError(f"band element {x} not idempotent")

    @property
    def order(self) -> int:
        return len(self.table)

    def __call__(self, x, y):
        return self.table[x][y]


def ring_negation(R: FiniteSemiring) -> tuple[int, ...]:
    zero = group_identity(R)
    if zero is None:
        raise ReesSpecError("ring is not a skew-ring")
    return tuple(next(y for y in R.elements if R.add[x][y] == zero) for x in R.elements)


@dataclass(frozen=True)
class ReesSpec:
    band_i: Band
    band_l: Band
    ring: FiniteSemiring
    P: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        P = tuple(tuple(int(x) for x in row) for row in self.P)
        object.__setattr__(self, "P", P)
        if not is_skew_ring(self.ring):
            raise ReesSpecError("ring is not a skew-ring")
        if len(P) != self.band_l.order or any(len(r) != self.band_i.order for r in P):
            raise ReesSpecError(
                f"P must be |L| x |I| = {self.band_l.order} x {self.band_i.order}"
            )
        if any(not 0 <= x < self.ring.order for r in P for x in r):
            raise ReesSpecError("P entry outside the ring")

    @property
    def order(self) -> int:
        return self.band_i.order * self.ring.order * self.band_l.order

    def P_entries(self) -> list[int]:
        return [x for row in self.P for x in row]


def validate_p(spec: ReesSpec) -> list[tuple]:
    """All violated sandwich conditions as ``(condition, indices)``; empty means valid."""
    R, I, L, P = spec.ring, spec.band_i, spec.band_l, spec.P
    zero = group_identity(R)
    neg = ring_negation(R)
    add, mul = R.add, R.mul

    def sub_add(x, y, z):  # x - y + z
        return add[add[x][neg[y]]][z]

    out = []
    oi, ol = I.o, L.o
    for lam in range(L.order):
        if P[lam][oi] != zero:
            out.append(("i", ("p[l,o]", lam)))
    for i in range(I.order):
        if P[ol][i] != zero:
            out.append(("i", ("p[o,i]", i)))
    nI, nL = range(I.order), range(L.order)
    for i, j, k in product(nI, repeat=3):
        for lam, mu, nu in product(nL, repeat=3):
            lm, nm = L(lam, mu), L(nu, mu)
            if P[lm][I(k, j)] != sub_add(P[lm][I(i, j)], P[nm][I(i, j)], P[nm][I(k, j)]):
                out.append(("ii", (i, j, k, lam, mu, nu)))
            ml, mn = L(mu, lam), L(mu, nu)
            if P[ml][I(j, k)] != sub_add(P[ml][I(j, i)], P[mn][I(j, i)], P[mn][I(j, k)]):
                out.append(("iii", (i, j, k, lam, mu, nu)))
    for lam, i in product(nL, nI):
        p = P[lam][i]
        for a in R.elements:
            if mul[a][p] != zero or mul[p][a] != zero:
                out.append(("iv", (lam, i, a)))
                break
    for a, b in product(R.elements, repeat=2):
        ab = mul[a][b]
        for i, mu in product(nI, nL):
            p = P[L(ol, mu)][I(i, oi)]
            if add[ab][p] != add[p][ab]:
                out.append(("v", (a, b, i, mu)))
        for j, lam in product(nI, nL):
            p = P[L(lam, ol)][I(oi, j)]
            if add[ab][p] != add[p][ab]:
                out.append(("vi", (a, b, j, lam)))
    return out


def rees_elements(spec: ReesSpec) -> list[tuple[int, int, int]]:
    """Carrier ``I x R x L`` in lexicographic order (element index = list position)."""
    return list(product(range(spec.band_i.order), spec.ring.elements, range(spec.band_l.order)))


def rees_matrix(spec: ReesSpec) -> FiniteSemiring:
    bad = validate_p(spec)
    if bad:
        raise ReesSpecError(f"sandwich conditions violated: {bad[:3]}")
    R, I, L, P = spec.ring, spec.band_i, spec.band_l, spec.P
    neg = ring_negation(R)
    elems = rees_elements(spec)
    index = {t: k for k, t in enumerate(elems)}

    def plus(x, y):
        i, a, lam = x
        j, b, mu = y
        return (i, R.add[R.add[a][P[lam][j]]][b], mu)

    def times(x, y):
        i, a, lam = x
        j, b, mu = y
        ij, lm = I(i, j), L(lam, mu)
        return (ij, R.add[neg[P[lm][ij]]][R.mul[a][b]], lm)

    add = tuple(tuple(index[plus(x, y)] for y in elems) for x in elems)
    mul = tuple(tuple(index[times(x, y)] for y in elems) for x in elems)
    bad = axiom_violations(add, mul)
    if bad:
        raise StructureFinding("Rees matrix tables violate semiring axioms", bad[0])
    return FiniteSemiring(add, mul)


def skew_ideal_generated(R: FiniteSemiring, gens) -> frozenset[int]:
    """Least normal additive subgroup containing ``gens`` and absorbing two-sided products."""
    zero = group_identity(R)
    if zero is None:
        raise ReesSpecError("not a skew-ring")
    neg = ring_negation(R)
    add, mul = R.add, R.mul
    ideal: set[int] = set()
    todo = [zero, *gens]
    while todo:
        x = todo.pop()
        if x in ideal:
            continue
        ideal.add(x)
        cand = [neg[x]]
        for c in R.elements:
            cand += [add[add[c][x]][neg[c]], mul[c][x], mul[x][c]]
        for y in list(ideal):
            cand += [add[x][y], add[y][x]]
        todo.extend(v for v in cand if v not in ideal)
    return frozenset(ideal)


def is_completely_simple(S: FiniteSemiring) -> bool:
    """J+ universal and every element completely regular.

    Being additively completely simple is not enough: a left-zero additive
    band with zero multiplication passes that test but fails
    ``a(a+x) = a+x`` and is not a Rees matrix semiring.
    """
    return green_j(S).is_universal() and all(
        is_completely_regular_element(S, a) for a in S.elements
    )


def is_completely_archimedean(S: FiniteSemiring) -> bool:
    return is_quasi_completely_regular(S) and star_j(S).is_universal()


def kernel(S: FiniteSemiring) -> frozenset[int]:
    """Completely simple ideal of which a completely Archimedean ``S`` is a nil-extension."""
    if not is_completely_archimedean(S):
        raise ValueError("semiring is not completely Archimedean")
    K = frozenset(a for a in S.elements if is_completely_regular_element(S, a))
    add, mul = S.add, S.mul
    for k in K:
        for s in S.elements:
            for v in (add[k][s], add[s][k], mul[k][s], mul[s][k]):
                if v not in K:
                    raise StructureFinding("kernel is not an ideal", (k, s, v))
    sub, _ = subsemiring(S, K)
    if not is_completely_simple(sub):
        raise StructureFinding("kernel is not completely simple", tuple(sorted(K)))
    for a in S.elements:
        if not set(additive_orbit(S, a)[0]) & K:
            raise StructureFinding("element has no multiple in the kernel", (a,))
    return K


@dataclass(frozen=True)
class ReesCoordinates:
    """An explicit isomorphism from a kernel ``K`` of ``S`` onto ``rees_matrix(spec)``.

    ``coords_of[k] = (i, g, l)`` for each kernel element ``k`` of ``S``;
    ``g`` indexes ``spec.ring``; ``ring_carrier[g]`` is the element of ``S``
    in the base H+-class that ``g`` stands for.
    """

    spec: ReesSpec
    coords_of: dict
    ring_carrier: tuple[int, ...]
    base: int

    def ring_negation(self) -> tuple[int, ...]:
        return ring_negation(self.spec.ring)

    def index_in_rees(self, k: int) -> int:
        i, g, lam = self.coords_of[k]
        nR, nL = self.spec.ring.order, self.spec.band_l.order
        return (i * nR + g) * nL + lam


def _class_band(T, part: Partition, base_elem):
    lab = part.class_of
    m = part.num_classes
    table = [[None] * m for _ in range(m)]
    for x in T.elements:
        for y in T.elements:
            v = lab[T.mul[x][y]]
            cur = table[lab[x]][lab[y]]
            if cur is None:
                table[lab[x]][lab[y]] = v
            elif cur != v:
                raise StructureFinding("Green class partition not multiplicatively compatible", (x, y))
    try:
        return Band(table, lab[base_elem])
    except ReesSpecError as exc:
        raise StructureFinding(f"Green class quotient is not a band: {exc}") from None


def coordinatize(S: FiniteSemiring, K=None) -> ReesCoordinates:
    """Rees coordinates of the completely simple kernel ``K``.

    Base point is the least additive idempotent ``e`` of ``K``; the ring is the
    H+-class of ``e``; ``I`` and ``L`` index the R+- and L+-classes of ``K``;
    ``P[l][i] = q_l + r_i`` with ``r_i``, ``q_l`` the idempotents of the
    H+-classes meeting the L+-class, respectively R+-class, of ``e``.
    Raises StructureFinding if the resulting map is not an isomorphism.
    """
    if K is None:
        K = frozenset(S.elements)
    T, carrier = subsemiring(S, K)
    if not is_completely_simple(T):
        raise ValueError("kernel is not completely simple")
    e = min(additive_idempotents(T))
    r_part = green_r(T).to_partition()
    l_part = green_l(T).to_partition()
    band_i = _class_band(T, r_part, e)
    band_l = _class_band(T, l_part, e)
    h_e = [x for x in T.elements if r_part.related(x, e) and l_part.related(x, e)]
    ring, ring_carrier = subsemiring(T, h_e)
    if not is_skew_ring(ring):
        raise StructureFinding("base H+-class is not a skew-ring", tuple(h_e))
    ring_index = {x: g for g, x in enumerate(ring_carrier)}
    idem = additive_idempotents(T)

    def idempotent_in(rc, lc):
        return next(
            x for x in idem if r_part.class_of[x] == rc and l_part.class_of[x] == lc
        )

    oi, ol = r_part.class_of[e], l_part.class_of[e]
    r_rep = [idempotent_in(i, ol) for i in range(band_i.order)]
    q_rep = [idempotent_in(oi, lam) for lam in range(band_l.order)]
    P = tuple(
        tuple(ring_index[T.add[q_rep[lam]][r_rep[i]]] for i in range(band_i.order))
        for lam in range(band_l.order)
    )
    spec = ReesSpec(band_i, band_l, ring, P)
    bad = validate_p(spec)
    if bad:
        raise StructureFinding("recovered sandwich matrix violates conditions", bad[0])
    M = rees_matrix(spec)
    local = {
        x: (r_part.class_of[x], ring_index[T.add[T.add[e][x]][e]], l_part.class_of[x])
        for x in T.elements
    }
    coords_of = {carrier[x]: c for x, c in local.items()}
    coords = ReesCoordinates(spec, coords_of, tuple(carrier[x] for x in ring_carrier), carrier[e])
    f = [coords.index_in_rees(carrier[x]) for x in T.elements]
    if len(set(f)) != T.order or T.order != M.order:
        raise StructureFinding("coordinate map is not a bijection")
    for x in T.elements:
        for y in T.elements:
            if f[T.add[x][y]] != M.add[f[x]][f[y]] or f[T.mul[x][y]] != M.mul[f[x]][f[y]]:
                raise StructureFinding("coordinate map does not preserve operations", (carrier[x], carrier[y]))
    return coords


@dataclass(frozen=True)
class Decomposition:
    """``S`` as a b-lattice of completely Archimedean components (starred J+-classes)."""

    semiring: FiniteSemiring
    partition: Partition
    blattice: FiniteSemiring
    components: tuple[tuple[int, ...], ...]
    subsemirings: tuple[FiniteSemiring, ...]
    kernels: tuple[frozenset, ...]
    coords: tuple[Optional[ReesCoordinates], ...] = field(repr=False)

    def component_of(self, a: int) -> int:
        return self.partition.class_of[a]

    def below(self, beta: int, alpha: int) -> bool:
        """``beta <= alpha`` in the additive order of the b-lattice: ``alpha + beta = alpha``."""
        return self.blattice.add[alpha][beta] == alpha


def decompose(S: FiniteSemiring, with_coords: bool = True) -> Decomposition:
    if not is_quasi_completely_regular(S):
        raise ValueError("semiring is not quasi completely regular")
    part = star_j(S).to_partition()
    if not is_congruence(S, part):
        raise StructureFinding("starred J+ is not a congruence", part)
    Y = quotient(S, part)
    if not is_b_lattice(Y):
        raise StructureFinding("starred J+ quotient is not a b-lattice", part)
    subs, kernels, coords = [], [], []
    for block in part.classes:
        try:
            T, _ = subsemiring(S, block)
        except ValueError:
            raise StructureFinding("component not closed", block) from None
        if not is_completely_archimedean(T):
            raise StructureFinding("component not completely Archimedean", block)
        Kt = kernel(T)
        subs.append(T)
        kernels.append(frozenset(block[k] for k in Kt))
        coords.append(coordinatize(S, kernels[-1]) if with_coords else None)
    return Decomposition(S, part, Y, part.classes, tuple(subs), tuple(kernels), tuple(coords))


def quasi_orthodox_violation(S: FiniteSemiring) -> Optional[tuple[int, int]]:
    """A pair of additive idempotents ``(e, f)`` with no ``n(e+f) = (n+1)(e+f)``."""
    idem = sorted(additive_idempotents(S))
    for e in idem:
        for f in idem:
            if not has_period_one(S, S.add[e][f]):
                return (e, f)
    return None


def is_quasi_orthodox(S: FiniteSemiring) -> bool:
    return quasi_orthodox_violation(S) is None


def zero_identity_violation(S: FiniteSemiring) -> Optional[tuple[int, int]]:
    """``(a, b)`` with ``0_a + 0_b + 0_(a+b) != 0_(a+b)``."""
    z = zeros(S)
    for a in S.elements:
        for b in S.elements:
            zab = z[S.add[a][b]]
            if S.plus(z[a], z[b], zab) != zab:
                return (a, b)
    return None


def zero_identity_check(S: FiniteSemiring) -> bool:
    return zero_identity_violation(S) is None
