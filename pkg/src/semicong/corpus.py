"""Named instances and constructions used as a verification corpus.

Raw enumeration stops at order 3; beyond that the corpus is built from
Rees matrix semirings, direct products, quotients and inflations (adjoining
a non-regular element that acts like an existing one).
"""
from __future__ import annotations

from itertools import product
from pathlib import Path
from typing import Iterator

from .congruences import all_congruences, is_skew_ring
from .core import FiniteSemiring, direct_product, quotient, trivial_semiring, validate
from .elements import is_quasi_completely_regular
from .enumeration import associative_tables, canonical_form, enumerate_semirings
from .structures import Band, ReesSpec, rees_matrix, validate_p

__all__ = [
    "boolean",
    "z_mod",
    "z_mod_scaled",
    "nil2",
    "left_zero_add",
    "klein_zero",
    "gf4",
    "dual_numbers_gf2",
    "skew_rings",
    "bands",
    "left_zero_band",
    "right_zero_band",
    "point_band",
    "annihilator",
    "valid_sandwich_matrices",
    "rees_specs",
    "inflate",
    "named_instances",
    "constructed_instances",
    "corpus",
    "write_corpus",
]


def boolean() -> FiniteSemiring:
    """``({0,1}, max, min)``."""
    return validate([[0, 1], [1, 1]], [[0, 0], [0, 1]])


def z_mod(n: int) -> FiniteSemiring:
    return validate(
        [[(a + b) % n for b in range(n)] for a in range(n)],
        [[(a * b) % n for b in range(n)] for a in range(n)],
    )


def z_mod_scaled(n: int, c: int) -> FiniteSemiring:
    """``Z_n`` with multiplication ``a*b = c*a*b``; ``c = 0`` gives the zero ring."""
    return validate(
        [[(a + b) % n for b in range(n)] for a in range(n)],
        [[(c * a * b) % n for b in range(n)] for a in range(n)],
    )


def nil2() -> FiniteSemiring:
    """``{a, e}`` = ``{0, 1}``: ``a + a = e``, every other sum and every product ``e``."""
    return validate([[1, 1], [1, 1]], [[1, 1], [1, 1]])


def left_zero_add() -> FiniteSemiring:
    """Two-element left-zero additive band, multiplication the first projection."""
    return validate([[0, 0], [1, 1]], [[0, 0], [1, 1]])


def klein_zero() -> FiniteSemiring:
    """Klein four-group with zero multiplication."""
    return validate(
        [[a ^ b for b in range(4)] for a in range(4)], [[0] * 4 for _ in range(4)]
    )


def gf4() -> FiniteSemiring:
    # elements 0, 1, w, w+1 encoded as bit pairs
    def mul(a, b):
        r = 0
        for i in range(2):
            if b >> i & 1:
                r ^= a << i
        if r & 4:
            r ^= 0b111
        return r

    return validate([[a ^ b for b in range(4)] for a in range(4)], [[mul(a, b) for b in range(4)] for a in range(4)])


def dual_numbers_gf2() -> FiniteSemiring:
    """``GF(2)[x]/(x^2)``: elements ``a + bx`` encoded as ``a + 2b``."""
    def mul(u, v):
        a, b = u & 1, u >> 1
        c, d = v & 1, v >> 1
        return (a * c) % 2 + 2 * ((a * d + b * c) % 2)

    return validate([[a ^ b for b in range(4)] for a in range(4)], [[mul(a, b) for b in range(4)] for a in range(4)])


def skew_rings() -> dict[str, FiniteSemiring]:
    """Skew-rings of order at most 4 used for Rees constructions."""
    out = {
        "Z1": trivial_semiring(),
        "Z2": z_mod(2),
        "Z2zero": z_mod_scaled(2, 0),
        "Z3": z_mod(3),
        "Z3zero": z_mod_scaled(3, 0),
        "Z4": z_mod(4),
        "Z4zero": z_mod_scaled(4, 0),
        "Z4twice": z_mod_scaled(4, 2),
        "V4zero": klein_zero(),
        "GF4": gf4(),
        "D2": dual_numbers_gf2(),
    }
    assert all(is_skew_ring(R) for R in out.values())
    return out


def point_band() -> Band:
    return Band([[0]], 0)


def left_zero_band(n: int, o: int = 0) -> Band:
    return Band([[i] * n for i in range(n)], o)


def right_zero_band(n: int, o: int = 0) -> Band:
    return Band([list(range(n)) for _ in range(n)], o)


def bands(max_order: int = 3) -> list[Band]:
    """One band per isomorphism class and choice of distinguished element, orders 1..max_order."""
    out = []
    for n in range(1, max_order + 1):
        seen = set()
        for t in associative_tables(n):
            if any(t[x, x] != x for x in range(n)):
                continue
            table = tuple(tuple(int(v) for v in row) for row in t)
            for o in range(n):
                key = _band_key(table, o)
                if key in seen:
                    continue
                seen.add(key)
                out.append(Band(table, o))
    return out


def _band_key(table, o):
    from itertools import permutations

    n = len(table)
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for x, y in enumerate(perm):
            inv[y] = x
        key = (perm[o],) + tuple(perm[table[inv[a]][inv[b]]] for a in range(n) for b in range(n))
        if best is None or key < best:
            best = key
    return best


def annihilator(R: FiniteSemiring) -> list[int]:
    from .congruences import group_identity

    z = group_identity(R)
    return [p for p in R.elements if all(R.mul[a][p] == z == R.mul[p][a] for a in R.elements)]


def valid_sandwich_matrices(I: Band, L: Band, R: FiniteSemiring, limit: int = 64) -> Iterator[tuple]:
    """Sandwich matrices over the annihilator satisfying every condition, zero matrix first."""
    from .congruences import group_identity

    zero = group_identity(R)
    ann = sorted(annihilator(R), key=lambda p: (p != zero, p))
    free = [(lam, i) for lam in range(L.order) for i in range(I.order) if lam != L.o and i != I.o]
    count = 0
    for values in product(ann, repeat=len(free)):
        P = [[zero] * I.order for _ in range(L.order)]
        for (lam, i), v in zip(free, values):
            P[lam][i] = v
        spec = ReesSpec(I, L, R, P)
        if not validate_p(spec):
            yield spec
            count += 1
            if count >= limit:
                return


def rees_specs(max_order: int = 8, nonzero_only: bool = False) -> list[tuple[str, ReesSpec]]:
    """Deterministic list of valid Rees data with ``|I| |R| |L| <= max_order``."""
    out = []
    bl = bands(3)
    for rname, R in skew_rings().items():
        for bi, I in enumerate(bl):
            for bj, L in enumerate(bl):
                if I.order * R.order * L.order > max_order:
                    continue
                for k, spec in enumerate(valid_sandwich_matrices(I, L, R, limit=4)):
                    if nonzero_only and all(
                        p == spec.P[L.o][I.o] for p in spec.P_entries()
                    ):
                        continue
                    out.append((f"rees-{rname}-I{bi}-L{bj}-P{k}", spec))
    return out


def inflate(S: FiniteSemiring, s0: int) -> FiniteSemiring:
    """Adjoin element ``n`` acting as ``s0`` in every product and sum, itself never a result."""
    n = S.order
    phi = list(S.elements) + [s0]
    add = [[S.add[phi[x]][phi[y]] for y in range(n + 1)] for x in range(n + 1)]
    mul = [[S.mul[phi[x]][phi[y]] for y in range(n + 1)] for x in range(n + 1)]
    return validate(add, mul)


def named_instances() -> dict[str, FiniteSemiring]:
    B, Z2, N2 = boolean(), z_mod(2), nil2()
    return {
        "trivial": trivial_semiring(),
        "B": B,
        "Z2": Z2,
        "Z3": z_mod(3),
        "N2": N2,
        "Z2zero": z_mod_scaled(2, 0),
        "LZ2": left_zero_add(),
        "BxZ2": direct_product(B, Z2),
        "Z2xZ2": direct_product(Z2, Z2),
        "BxN2": direct_product(B, N2),
        "N2xZ2": direct_product(N2, Z2),
        "N2xN2": direct_product(N2, N2),
        "BxB": direct_product(B, B),
        "V4zero": klein_zero(),
        "GF4": gf4(),
        "D2": dual_numbers_gf2(),
        "Z4twice": z_mod_scaled(4, 2),
        "BxBxZ2": direct_product(direct_product(B, B), Z2),
        "BxZ2xN2": direct_product(direct_product(B, Z2), N2),
        "inflate-BxZ2-1": inflate(direct_product(B, Z2), 1),
        "inflate-Z3-1": inflate(z_mod(3), 1),
        "inflate-N2xZ2-0": inflate(direct_product(N2, Z2), 0),
        "rees-LZ2-Z2-pt": rees_matrix(ReesSpec(left_zero_band(2), point_band(), Z2, [[0, 0]])),
        "rees-pt-Z2-RZ2": rees_matrix(ReesSpec(point_band(), right_zero_band(2), Z2, [[0], [0]])),
        "rees-LZ2-Z2-RZ2": rees_matrix(
            ReesSpec(left_zero_band(2), right_zero_band(2), Z2, [[0, 0], [0, 0]])
        ),
        "rees-LZ2-Z2zero-RZ2-twisted": rees_matrix(
            ReesSpec(left_zero_band(2), right_zero_band(2), z_mod_scaled(2, 0), [[0, 0], [0, 1]])
        ),
    }


def constructed_instances(max_order: int = 8) -> dict[str, FiniteSemiring]:
    """Rees matrix semirings, their inflations and small products, up to ``max_order``."""
    out = {}
    for name, spec in rees_specs(max_order):
        out[name] = rees_matrix(spec)
    base = dict(out)
    for name, M in base.items():
        if M.order < max_order:
            out[f"inflate-{name}-0"] = inflate(M, 0)
    small = {k: v for k, v in named_instances().items() if v.order <= 2}
    for (n1, A), (n2, M) in product(small.items(), base.items()):
        if A.order > 1 and A.order * M.order <= max_order:
            out[f"{n1}x{n2}"] = direct_product(A, M)
    return out


def _dedupe(items: dict[str, FiniteSemiring]) -> dict[str, FiniteSemiring]:
    out, seen = {}, set()
    for name, S in items.items():
        key = canonical_form(S) if S.order <= 6 else (S.add, S.mul)
        if key in seen:
            continue
        seen.add(key)
        out[name] = S
    return out


def corpus(max_order: int = 8, include_enumerated: bool = True) -> dict[str, FiniteSemiring]:
    """Quasi completely regular instances up to ``max_order``, one per isomorphism class where cheap to tell.

    Includes every order-3-or-less semiring up to isomorphism, the named
    instances, the constructions above and quotients of those by each of
    their congruences.
    """
    items: dict[str, FiniteSemiring] = {}
    items.update({k: v for k, v in named_instances().items() if v.order <= max_order})
    items.update(constructed_instances(max_order))
    if include_enumerated:
        for n in (1, 2, 3):
            for k, S in enumerate(enumerate_semirings(n, filters=["qcr"], upto_iso=True)):
                items[f"enum{n}-{k:03d}"] = S
    for name, S in list(items.items()):
        if S.order >= 4:
            for k, theta in enumerate(all_congruences(S)):
                if 1 < theta.num_classes < S.order:
                    items[f"{name}-q{k}"] = quotient(S, theta)
    items = {k: v for k, v in items.items() if is_quasi_completely_regular(v)}
    return _dedupe(items)


def write_corpus(directory, max_order: int = 8) -> list[Path]:
    from .formats import serialize_semiring

    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, S in corpus(max_order).items():
        p = d / f"{name}.sr"
        p.write_text(serialize_semiring(S, comment=name))
        paths.append(p)
    return paths
