"""Finite semirings given by operation tables.

Elements are the integers ``0..n-1``. Neither reduct is assumed commutative
and no element is assumed to be a zero or an identity.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "TableError",
    "AxiomError",
    "NotACongruence",
    "Violation",
    "FiniteSemiring",
    "Partition",
    "HomomorphismWitness",
    "axiom_violations",
    "validate",
    "quotient",
    "direct_product",
    "spined_pairs",
    "spined_product",
    "subsemiring",
    "find_isomorphism",
    "is_isomorphic",
    "trivial_semiring",
]

Table = tuple[tuple[int, ...], ...]


class TableError(ValueError):
    """Table is ragged, non-square or has out-of-range entries."""


class AxiomError(ValueError):
    """Tables are well formed but violate a semiring axiom."""

    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0]
        super().__init__(
            f"{len(self.violations)} axiom violation(s); first: {first.axiom} at {first.witness}"
        )


class NotACongruence(ValueError):
    pass


class Violation(NamedTuple):
    axiom: str
    witness: tuple


def _freeze(table, n=None) -> Table:
    try:
        rows = tuple(tuple(int(x) for x in row) for row in table)
    except (TypeError, ValueError) as exc:
        raise TableError(f"table is not a matrix of integers: {exc}") from None
    if n is None:
        n = len(rows)
    if n < 1:
        raise TableError("order must be positive")
    if len(rows) != n:
        raise TableError(f"expected {n} rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise TableError(f"row {i} has {len(row)} entries, expected {n}")
        for x in row:
            if not 0 <= x < n:
                raise TableError(f"entry {x} in row {i} out of range [0, {n})")
    return rows


@dataclass(frozen=True, eq=True)
class FiniteSemiring:
    """A pair of ``n x n`` tables; ``add[i][j]`` is ``i + j``.

    Construct through :func:`validate` unless the axioms are already known
    to hold (e.g. tables produced by a construction that is checked later).
    """

    add: Table
    mul: Table
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.add, self.mul)))

    def __hash__(self):
        return self._hash

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(len(self.add))

    def plus(self, *xs: int) -> int:
        """Left-to-right sum of one or more elements."""
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.add[acc][x]
        return acc

    def times(self, *xs: int) -> int:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.mul[acc][x]
        return acc

    def multiple(self, n: int, a: int) -> int:
        """``n*a = a + a + ... + a`` (n >= 1 terms)."""
        if n < 1:
            raise ValueError("multiples start at 1")
        acc = a
        for _ in range(n - 1):
            acc = self.add[acc][a]
        return acc

    def __repr__(self):
        return f"FiniteSemiring(order={self.order}, add={self.add}, mul={self.mul})"


def trivial_semiring() -> FiniteSemiring:
    return FiniteSemiring(((0,),), ((0,),))


def _associativity_violations(table, name):
    n = len(table)
    out = []
    for i, j, k in product(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            out.append(Violation(f"{name} associativity", (i, j, k)))
    return out


def axiom_violations(add, mul) -> list[Violation]:
    """Every failing axiom instance. Raises TableError on malformed tables."""
    add = _freeze(add)
    mul = _freeze(mul, len(add))
    n = len(add)
    out = _associativity_violations(add, "additive")
    out += _associativity_violations(mul, "multiplicative")
    for i, j, k in product(range(n), repeat=3):
        if mul[i][add[j][k]] != add[mul[i][j]][mul[i][k]]:
            out.append(Violation("left distributivity", (i, j, k)))
        if mul[add[j][k]][i] != add[mul[j][i]][mul[k][i]]:
            out.append(Violation("right distributivity", (i, j, k)))
    return out


def validate(add, mul) -> FiniteSemiring:
    """Build a semiring from raw tables, raising on any problem.

    Malformed input raises :class:`TableError`; well-formed tables that break
    associativity or distributivity raise :class:`AxiomError`, whose
    ``violations`` attribute lists ``(axiom, (i, j, k))`` witnesses.
    """
    add = _freeze(add)
    mul = _freeze(mul, len(add))
    violations = axiom_violations(add, mul)
    if violations:
        raise AxiomError(violations)
    return FiniteSemiring(add, mul)


def _normalize_labels(labels: Sequence) -> tuple[int, ...]:
    seen = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


@dataclass(frozen=True)
class Partition:
    """Equivalence on ``0..n-1`` stored as a class label per element.

    Labels are normalized so classes are numbered by their smallest member;
    two partitions are equal iff they have the same classes.
    """

    class_of: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "class_of", _normalize_labels(self.class_of))

    @classmethod
    def from_labels(cls, labels: Iterable) -> Partition:
        return cls(tuple(labels))

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> Partition:
        labels = [None] * n
        for c, block in enumerate(classes):
            for x in block:
                if labels[x] is not None:
                    raise ValueError(f"element {x} in two classes")
                labels[x] = c
        if any(lab is None for lab in labels):
            raise ValueError("classes do not cover all elements")
        return cls(tuple(labels))

    @classmethod
    def identity(cls, n: int) -> Partition:
        return cls(tuple(range(n)))

    @classmethod
    def universal(cls, n: int) -> Partition:
        return cls((0,) * n)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Partition:
        """Least equivalence containing ``pairs``."""
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in pairs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        return cls(tuple(find(x) for x in range(n)))

    @property
    def order(self) -> int:
        return len(self.class_of)

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        blocks: list[list[int]] = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.class_of):
            blocks[c].append(x)
        return tuple(tuple(b) for b in blocks)

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def class_containing(self, a: int) -> tuple[int, ...]:
        c = self.class_of[a]
        return tuple(x for x, k in enumerate(self.class_of) if k == c)

    def pairs(self):
        for block in self.classes:
            for a in block:
                for b in block:
                    yield a, b

    def is_identity(self) -> bool:
        return self.num_classes == self.order

    def is_universal(self) -> bool:
        return self.num_classes == 1

    def __le__(self, other: Partition) -> bool:
        """``self`` refines ``other`` (inclusion as relations)."""
        if self.order != other.order:
            raise ValueError("partitions of different sets")
        image = {}
        for c, d in zip(self.class_of, other.class_of):
            if image.setdefault(c, d) != d:
                return False
        return True

    def __ge__(self, other: Partition) -> bool:
        return other <= self

    def __and__(self, other: Partition) -> Partition:
        if self.order != other.order:
            raise ValueError("partitions of different sets")
        return Partition(tuple(zip(self.class_of, other.class_of)))

    def __or__(self, other: Partition) -> Partition:
        pairs = list(self.pairs()) + list(other.pairs())
        return Partition.from_pairs(self.order, pairs)

    def __repr__(self):
        return "Partition(" + " | ".join(" ".join(map(str, b)) for b in self.classes) + ")"


def quotient(S: FiniteSemiring, theta: Partition) -> FiniteSemiring:
    """Semiring on the classes of ``theta``; class k is the k-th by smallest member.

    Raises :class:`NotACongruence` if the induced operations are not well
    defined.
    """
    if theta.order != S.order:
        raise ValueError("partition order does not match semiring order")
    lab = theta.class_of
    m = theta.num_classes
    add = [[None] * m for _ in range(m)]
    mul = [[None] * m for _ in range(m)]
    for i in S.elements:
        for j in S.elements:
            for table, src, name in ((add, S.add, "+"), (mul, S.mul, "*")):
                v = lab[src[i][j]]
                cur = table[lab[i]][lab[j]]
                if cur is None:
                    table[lab[i]][lab[j]] = v
                elif cur != v:
                    raise NotACongruence(
                        f"{name} not well defined on classes of {i} and {j}"
                    )
    return FiniteSemiring(_freeze(add), _freeze(mul))


def direct_product(A: FiniteSemiring, B: FiniteSemiring) -> FiniteSemiring:
    """Componentwise operations; pair ``(a, b)`` has index ``a*|B| + b``."""
    nb = B.order
    pairs = list(product(A.elements, B.elements))

    def table(ta, tb):
        return tuple(
            tuple(ta[a][c] * nb + tb[b][d] for (c, d) in pairs) for (a, b) in pairs
        )

    return FiniteSemiring(table(A.add, B.add), table(A.mul, B.mul))


def subsemiring(S: FiniteSemiring, elements: Iterable[int]) -> tuple[FiniteSemiring, tuple[int, ...]]:
    """Restrict ``S`` to a closed subset.

    Returns the subsemiring (elements renumbered in increasing order) and the
    tuple mapping new indices back to elements of ``S``.
    """
    carrier = tuple(sorted(set(elements)))
    if not carrier:
        raise ValueError("empty carrier")
    index = {x: k for k, x in enumerate(carrier)}
    try:
        add = tuple(tuple(index[S.add[a][b]] for b in carrier) for a in carrier)
        mul = tuple(tuple(index[S.mul[a][b]] for b in carrier) for a in carrier)
    except KeyError as exc:
        raise ValueError(f"subset not closed: produces {exc.args[0]}") from None
    return FiniteSemiring(add, mul), carrier


@dataclass(frozen=True)
class HomomorphismWitness:
    source: FiniteSemiring
    target: FiniteSemiring
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        if len(self.map) != self.source.order:
            raise ValueError("map length differs from source order")
        f = self.map
        T = self.target
        for a in self.source.elements:
            for b in self.source.elements:
                if f[self.source.add[a][b]] != T.add[f[a]][f[b]]:
                    raise ValueError(f"map does not preserve + at {(a, b)}")
                if f[self.source.mul[a][b]] != T.mul[f[a]][f[b]]:
                    raise ValueError(f"map does not preserve * at {(a, b)}")

    @property
    def surjective(self) -> bool:
        return set(self.map) == set(self.target.elements)


def spined_pairs(phi: HomomorphismWitness, psi: HomomorphismWitness) -> list[tuple[int, int]]:
    return [
        (a, b)
        for a in phi.source.elements
        for b in psi.source.elements
        if phi.map[a] == psi.map[b]
    ]


def spined_product(A, B, Y, phi: HomomorphismWitness, psi: HomomorphismWitness) -> FiniteSemiring:
    """Subsemiring of ``A x B`` on pairs with equal images in ``Y``.

    Elements are ordered lexicographically, as in :func:`direct_product`.
    """
    if phi.source != A or psi.source != B or phi.target != Y or psi.target != Y:
        raise ValueError("homomorphisms do not match A -> Y and B -> Y")
    if not (phi.surjective and psi.surjective):
        raise ValueError("spined product needs surjective homomorphisms")
    nb = B.order
    carrier = [a * nb + b for a, b in spined_pairs(phi, psi)]
    T, _ = subsemiring(direct_product(A, B), carrier)
    return T


def _element_signature(tables, x):
    n = len(tables[0])
    sig = []
    for t in tables:
        # diagonal orbit, row/column image sizes and fixed-point counts are isomorphism invariant
        orbit = [x]
        while True:
            y = t[orbit[-1]][x]
            if y in orbit:
                sig.append((len(orbit), orbit.index(y)))
                break
            orbit.append(y)
        sig.append(len(set(t[x])))
        sig.append(len({t[i][x] for i in range(n)}))
        sig.append(sum(t[x][i] == i for i in range(n)))
        sig.append(sum(t[i][x] == i for i in range(n)))
        sig.append(t[x][x] == x)
    return tuple(sig)


def find_isomorphism(tables_a: Sequence[Table], tables_b: Sequence[Table]):
    """Bijection ``f`` with ``f(t_a[x][y]) = t_b[f(x)][f(y)]`` for each table pair, or None.

    Backtracking over elements with candidates restricted to equal
    per-element signatures.
    """
    n = len(tables_a[0])
    if n != len(tables_b[0]) or len(tables_a) != len(tables_b):
        return None
    sig_a = [_element_signature(tables_a, x) for x in range(n)]
    sig_b = [_element_signature(tables_b, x) for x in range(n)]
    if Counter(sig_a) != Counter(sig_b):
        return None
    # assign the rarest signatures first
    freq = Counter(sig_a)
    order = sorted(range(n), key=lambda x: (freq[sig_a[x]], x))
    f = [-1] * n
    used = [False] * n
    pairs = list(zip(tables_a, tables_b))

    def consistent(x):
        assigned = [y for y in range(n) if f[y] >= 0]
        for y in assigned:
            for ta, tb in pairs:
                for u, v in ((x, y), (y, x)):
                    w = ta[u][v]
                    img = tb[f[u]][f[v]]
                    if f[w] >= 0:
                        if f[w] != img:
                            return False
                    elif used[img]:
                        return False
        return True

    def full_check():
        # partial checks can miss products whose result was assigned later
        return all(
            f[ta[x][y]] == tb[f[x]][f[y]]
            for ta, tb in pairs
            for x in range(n)
            for y in range(n)
        )

    def search(k):
        if k == n:
            return full_check()
        x = order[k]
        for cand in range(n):
            if used[cand] or sig_b[cand] != sig_a[x]:
                continue
            f[x] = cand
            used[cand] = True
            if consistent(x) and search(k + 1):
                return True
            f[x] = -1
            used[cand] = False
        return False

    return tuple(f) if search(0) else None


def is_isomorphic(A: FiniteSemiring, B: FiniteSemiring):
    """An isomorphism ``A -> B`` as a tuple, or None."""
    return find_isomorphism((A.add, A.mul), (B.add, B.mul))
