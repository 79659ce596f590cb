"""Check the congruence theorems on a finite semiring instance.

Each check returns a :class:`Verdict`: ``holds``, ``fails`` with a concrete
witness, or ``not-applicable`` naming the hypothesis that is false.
Everything lattice-theoretic ("least", "greatest") is decided against the
brute-force congruence list, never against the formula under test.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Optional

from .congruences import (
    all_congruences,
    generated_congruence,
    is_b_lattice_of_skew_rings,
    is_congruence,
    is_gaip_congruence,
    is_skew_ring,
    least_congruence,
    nu_tau,
    rho,
    sigma_archimedean,
    y_relation,
    y_star,
)
from .core import (
    FiniteSemiring,
    HomomorphismWitness,
    Partition,
    is_isomorphic,
    quotient,
    spined_product,
)
from .elements import (
    additive_idempotents,
    cr_index,
    is_completely_regular_element,
    is_quasi_completely_regular,
    zeros,
)
from .relations import BinRelation, compose, green_l, green_r, intersect, star_d, star_h, star_j, star_l, star_r
from .structures import (
    StructureFinding,
    decompose,
    is_completely_archimedean,
    quasi_orthodox_violation,
    zero_identity_violation,
)

__all__ = [
    "TAGS",
    "TAG_DESCRIPTIONS",
    "Verdict",
    "TheoremReport",
    "Instance",
    "verify",
    "format_report",
    "spined_comparison",
]

TAGS = (
    "T3.1", "L3.2", "L3.3", "T4.2", "L4.3", "T4.4", "T4.5", "T4.7",
    "C4.8", "L5.2", "L5.5", "L5.6", "T5.8", "T5.9", "T5.10",
)

TAG_DESCRIPTIONS = {
    "T3.1": "starred J+ equals starred D+",
    "L3.2": "nu is the translation closure of the idempotent starred-D+ pairs",
    "L3.3": "a + 0_a is L+/R+-related to its sums with lower-component elements and absorbs their zeros",
    "T4.2": "Y is the least b-lattice of skew-rings congruence iff S is quasi-orthodox",
    "L4.3": "component idempotents form rectangular bands and a + b = a + e + b for lower idempotents e",
    "T4.4": "three descriptions of Y agree (quasi-orthodox S)",
    "T4.5": "starred D+ is starred H+ composed with Y (quasi-orthodox S)",
    "T4.7": "quasi-orthodox iff zero identity iff S/rho is the spined product of S/*H+ and S/Y",
    "C4.8": "starred H+ meet Y is rho (quasi-orthodox S)",
    "L5.2": "three descriptions of Y agree inside each component",
    "L5.5": "the sigma formula is the least skew-ring congruence (completely Archimedean S)",
    "L5.6": "Y* lies within nu, and Y within sigma within nu on each component",
    "T5.8": "Y is the greatest gaip congruence (completely Archimedean S)",
    "T5.9": "Y* is equality iff every component has equality as its only gaip congruence",
    "T5.10": "Y* lies between equality and nu",
}

HOLDS, FAILS, NA = "holds", "fails", "not-applicable"


@dataclass(frozen=True)
class Verdict:
    status: str
    detail: str = ""

    def __str__(self):
        return f"{self.status} ({self.detail})" if self.detail else self.status


def holds(detail=""):
    return Verdict(HOLDS, detail)


def fails(witness):
    return Verdict(FAILS, f"witness: {witness}")


def not_applicable(reason):
    return Verdict(NA, reason)


def _check(cond, witness, note=""):
    return holds(note) if cond else fails(witness)


@dataclass
class TheoremReport:
    instance_id: str
    results: dict = field(default_factory=dict)

    @property
    def failures(self) -> dict:
        return {t: v for t, v in self.results.items() if v.status == FAILS}

    def to_dict(self) -> dict:
        return {
            "instance": self.instance_id,
            "results": {
                t: {"status": v.status, "detail": v.detail} for t, v in self.results.items()
            },
        }


def _first_difference(r1: BinRelation, r2: BinRelation):
    for a, b in product(range(r1.n), repeat=2):
        if r1(a, b) != r2(a, b):
            return (a, b)
    return None


def _rel(theta) -> BinRelation:
    return theta if isinstance(theta, BinRelation) else BinRelation.from_partition(theta)


class Instance:
    """Lazily computed structure of one semiring shared by all checks."""

    def __init__(self, S: FiniteSemiring):
        self.S = S

    @cached_property
    def qcr_witness(self) -> Optional[int]:
        return next((a for a in self.S.elements if cr_index(self.S, a) is None), None)

    @cached_property
    def qcr(self) -> bool:
        return is_quasi_completely_regular(self.S)

    @cached_property
    def zeros(self):
        return zeros(self.S)

    def group_part(self, a):
        """``a + 0_a``."""
        return self.S.add[a][self.zeros[a]]

    @cached_property
    def qo_witness(self):
        return quasi_orthodox_violation(self.S)

    @cached_property
    def qo(self) -> bool:
        return self.qo_witness is None

    @cached_property
    def ca(self) -> bool:
        return is_completely_archimedean(self.S)

    @cached_property
    def decomposition(self):
        try:
            return decompose(self.S)
        except StructureFinding as exc:
            return exc

    @cached_property
    def congruences(self):
        return all_congruences(self.S)

    @cached_property
    def nu_oracle(self) -> Optional[Partition]:
        return least_congruence(self.S, is_b_lattice_of_skew_rings)

    @cached_property
    def y(self) -> BinRelation:
        return y_relation(self.S)

    @cached_property
    def y_partition(self) -> Partition:
        return self.y.to_partition()

    @cached_property
    def y_star(self) -> Partition:
        return y_star(self.S)

    @cached_property
    def rho(self) -> Partition:
        return rho(self.S)


def _needs_qcr(check):
    def wrapped(inst: Instance):
        if not inst.qcr:
            return not_applicable(
                f"not quasi completely regular: no multiple of {inst.qcr_witness} is completely regular"
            )
        return check(inst)

    wrapped.__name__ = check.__name__
    wrapped.__doc__ = check.__doc__
    return wrapped


def _needs_qo(check):
    @_needs_qcr
    def wrapped(inst: Instance):
        if not inst.qo:
            e, f = inst.qo_witness
            return not_applicable(f"not quasi-orthodox: e={e}, f={f} have e+f of additive period > 1")
        return check(inst)

    wrapped.__name__ = check.__name__
    return wrapped


def _needs_decomposition(check):
    def wrapped(inst: Instance):
        d = inst.decomposition
        if isinstance(d, StructureFinding):
            return fails(f"decomposition: {d} {d.witness}")
        return check(inst, d)

    wrapped.__name__ = check.__name__
    return wrapped


@_needs_qcr
def check_t31(inst):
    """Starred J+ equals starred D+."""
    j, d = star_j(inst.S), star_d(inst.S)
    return _check(j == d, _first_difference(j, d))


@_needs_qcr
def check_l32(inst):
    """Nu equals the additive-translation closure of idempotent starred-D+ pairs."""
    nu = inst.nu_oracle
    if nu is None:
        return fails("no least b-lattice of skew-rings congruence")
    eta = nu_tau(inst.S)
    return _check(eta == nu, f"closure {eta} vs least {nu}")


@_needs_qcr
@_needs_decomposition
def check_l33(inst, d):
    S, z = inst.S, inst.zeros
    L, R = green_l(S), green_r(S)
    for a, b in product(S.elements, repeat=2):
        if not d.below(d.component_of(b), d.component_of(a)):
            continue
        x = inst.group_part(a)
        bx, xb = S.add[b][x], S.add[x][b]
        if not (L(x, bx) and R(x, xb)):
            return fails(f"(i) a={a}, b={b}")
        if not (x == S.add[x][z[bx]] == S.add[z[xb]][x]):
            return fails(f"(ii) a={a}, b={b}")
    return holds()


@_needs_qcr
def check_t42(inst):
    """Y is the least b-lattice of skew-rings congruence iff S is quasi-orthodox."""
    nu = inst.nu_oracle
    if nu is None:
        return fails("no least b-lattice of skew-rings congruence")
    y_is_nu = inst.y_partition == nu
    return _check(
        y_is_nu == inst.qo,
        f"Y == nu is {y_is_nu}, quasi-orthodox is {inst.qo} (Y={inst.y_partition}, nu={nu})",
        f"quasi-orthodox={inst.qo}",
    )


@_needs_qo
@_needs_decomposition
def check_l43(inst, d):
    S = inst.S
    idem = additive_idempotents(S)
    comp_idem = [[e for e in block if e in idem] for block in d.components]
    for es in comp_idem:
        for e, f in product(es, repeat=2):
            ef = S.add[e][f]
            if S.add[ef][ef] != ef or S.add[ef][e] != e:
                return fails(f"idempotents e={e}, f={f} not a rectangular band")
    for alpha, block in enumerate(d.components):
        cr = [a for a in block if is_completely_regular_element(S, a)]
        for beta, es in enumerate(comp_idem):
            if not d.below(beta, alpha):
                continue
            for a, b, e in product(cr, cr, es):
                if S.add[a][b] != S.plus(a, e, b):
                    return fails(f"a={a}, b={b}, e={e}: a+b != a+e+b")
    return holds()


@_needs_qo
def check_t44(inst):
    S, z, Y = inst.S, inst.zeros, inst.y
    idem = sorted(additive_idempotents(S))
    for a, b in product(S.elements, repeat=2):
        ga, gb = inst.group_part(a), inst.group_part(b)
        c1 = Y(a, b)
        c2 = any(S.plus(e, gb, f) == ga for e in idem for f in idem) and any(
            S.plus(g, ga, h) == gb for g in idem for h in idem
        )
        c3 = ga == S.plus(z[a], gb, z[a]) and gb == S.plus(z[b], ga, z[b])
        if not c1 == c2 == c3:
            return fails(f"a={a}, b={b}: (i)={c1}, (ii)={c2}, (iii)={c3}")
    return holds()


@_needs_qo
def check_t45(inst):
    d = star_d(inst.S)
    hy = compose(star_h(inst.S), inst.y)
    return _check(d == hy, _first_difference(d, hy))


def spined_comparison(S: FiniteSemiring) -> tuple[Optional[bool], str]:
    """Whether ``S/rho`` is isomorphic to the spined product of ``S/*H+`` and ``S/Y`` over ``S/*J+``.

    Returns ``(None, reason)`` when Y is not a congruence, so the
    construction does not exist.
    """
    y = y_relation(S).to_partition()
    if not is_congruence(S, y):
        return None, "Y is not a congruence"
    h = star_h(S).to_partition()
    j = star_j(S).to_partition()
    if not is_congruence(S, h):
        return False, "starred H+ is not a congruence"
    if not (h <= j and y <= j):
        return False, "starred H+ or Y not contained in starred J+"
    A, B, Yb = quotient(S, h), quotient(S, y), quotient(S, j)
    reps_a = [blk[0] for blk in h.classes]
    reps_b = [blk[0] for blk in y.classes]
    phi = HomomorphismWitness(A, Yb, [j.class_of[r] for r in reps_a])
    psi = HomomorphismWitness(B, Yb, [j.class_of[r] for r in reps_b])
    T = spined_product(A, B, Yb, phi, psi)
    iso = is_isomorphic(quotient(S, rho(S)), T) is not None
    return iso, f"|S/rho|={rho(S).num_classes}, |spined|={T.order}"


@_needs_qcr
def check_t47(inst):
    qo = inst.qo
    zi = zero_identity_violation(inst.S)
    spined, note = spined_comparison(inst.S)
    agree = qo == (zi is None) and (spined is None or spined == qo)
    return _check(
        agree,
        f"quasi-orthodox={qo}, zero identity={zi is None} (violation {zi}), spined={spined} ({note})",
        f"all {qo}" + ("" if spined is not None else "; spined product skipped: " + note),
    )


@_needs_qo
def check_c48(inst):
    hy = intersect(star_h(inst.S), inst.y)
    r = _rel(inst.rho)
    return _check(hy == r, _first_difference(hy, r))


@_needs_qcr
@_needs_decomposition
def check_l52(inst, d):
    S, z, Y = inst.S, inst.zeros, inst.y
    idem = sorted(additive_idempotents(S))
    sR, sL = star_r(S), star_l(S)
    for block in d.components:
        for a, b in product(block, repeat=2):
            ga, gb = inst.group_part(a), inst.group_part(b)
            c1 = Y(a, b)
            c2 = all(
                S.plus(e, gb, f) == ga
                for e in idem if sR(e, a)
                for f in idem if sL(a, f)
            ) and all(
                S.plus(g, ga, h) == gb
                for g in idem if sR(g, b)
                for h in idem if sL(b, h)
            )
            c3 = all(
                ga == S.plus(z[S.add[ga][x]], gb, z[S.add[x][ga]])
                and gb == S.plus(z[S.add[gb][x]], ga, z[S.add[x][gb]])
                for x in block
            )
            if not c1 == c2 == c3:
                return fails(f"a={a}, b={b}: (i)={c1}, (ii)={c2}, (iii)={c3}")
    return holds()


@_needs_qcr
def check_l55(inst):
    if not inst.ca:
        return not_applicable("not completely Archimedean: starred J+ is not universal")
    d = inst.decomposition
    if isinstance(d, StructureFinding):
        return fails(f"{d} {d.witness}")
    sigma = sigma_archimedean(inst.S, d.coords[0])
    least = least_congruence(inst.S, is_skew_ring)
    return _check(sigma == least, f"formula {sigma} vs least {least}")


def _restrict(rel: BinRelation, block) -> BinRelation:
    return BinRelation([[rel(a, b) for b in block] for a in block])


@_needs_qcr
@_needs_decomposition
def check_l56(inst, d):
    nu = inst.nu_oracle
    if nu is None:
        return fails("no least b-lattice of skew-rings congruence")
    if not inst.y_star <= nu:
        return fails(f"Y*={inst.y_star} not within nu={nu}")
    nu_rel = _rel(nu)
    for alpha, (block, T) in enumerate(zip(d.components, d.subsemirings)):
        sigma = least_congruence(T, is_skew_ring)
        if sigma is None:
            return fails(f"component {alpha} has no least skew-ring congruence")
        formula = sigma_archimedean(T)
        if formula != sigma:
            return fails(f"component {block}: sigma formula {formula} vs least {sigma}")
        s_rel = _rel(sigma)
        y_a = _restrict(inst.y, block)
        n_a = _restrict(nu_rel, block)
        if not y_a <= s_rel:
            return fails(f"component {block}: Y|S_a not within sigma_a={sigma}")
        if not s_rel <= n_a:
            return fails(f"component {block}: sigma_a={sigma} not within nu|S_a")
    return holds()


@_needs_qcr
def check_t58(inst):
    if not inst.ca:
        return not_applicable("not completely Archimedean: starred J+ is not universal")
    S, y = inst.S, inst.y_partition
    if not is_congruence(S, y):
        return fails(f"Y={y} is not a congruence")
    if not is_gaip_congruence(S, y):
        return fails(f"Y={y} is not gaip")
    for theta in inst.congruences:
        if is_gaip_congruence(S, theta) and not theta <= y:
            return fails(f"gaip congruence {theta} not within Y={y}")
    return holds()


@_needs_qcr
@_needs_decomposition
def check_t59(inst, d):
    S = inst.S
    ystar_trivial = inst.y_star.is_identity()
    only_eps = []
    for T in d.subsemirings:
        gaips = [t for t in all_congruences(T) if is_gaip_congruence(T, t)]
        only_eps.append(all(t.is_identity() for t in gaips))
    return _check(
        ystar_trivial == all(only_eps),
        f"Y*=eps is {ystar_trivial}, components with only eps gaip: {only_eps}",
        f"Y*=eps is {ystar_trivial}",
    )


@_needs_qcr
def check_t510(inst):
    nu = inst.nu_oracle
    if nu is None:
        return fails("no least b-lattice of skew-rings congruence")
    ys = inst.y_star
    eps = Partition.identity(inst.S.order)
    return _check(eps <= ys <= nu, f"Y*={ys}, nu={nu}")


CHECKS: dict[str, Callable[[Instance], Verdict]] = {
    "T3.1": check_t31,
    "L3.2": check_l32,
    "L3.3": check_l33,
    "T4.2": check_t42,
    "L4.3": check_l43,
    "T4.4": check_t44,
    "T4.5": check_t45,
    "T4.7": check_t47,
    "C4.8": check_c48,
    "L5.2": check_l52,
    "L5.5": check_l55,
    "L5.6": check_l56,
    "T5.8": check_t58,
    "T5.9": check_t59,
    "T5.10": check_t510,
}


def verify(S: FiniteSemiring, instance_id: str = "", theorems=None) -> TheoremReport:
    """Evaluate the selected theorem checks (default: all, in ``TAGS`` order)."""
    tags = TAGS if theorems is None else tuple(t for t in TAGS if t in set(theorems))
    unknown = set(theorems or ()) - set(TAGS)
    if unknown:
        raise ValueError(f"unknown theorem tags: {sorted(unknown)}")
    inst = Instance(S)
    report = TheoremReport(instance_id)
    for tag in tags:
        report.results[tag] = CHECKS[tag](inst)
    return report


def format_report(report: TheoremReport, fmt: str = "lines") -> str:
    """``lines``: one ``key: value`` per line, results indented; ``json``: one JSON object."""
    if fmt == "json":
        return json.dumps(report.to_dict(), sort_keys=False) + "\n"
    out = [f"instance: {report.instance_id}", "results:"]
    for tag, v in report.results.items():
        out.append(f"  {tag}: {v.status}")
        if v.detail:
            out.append(f"    detail: {v.detail}")
    return "\n".join(out) + "\n"
