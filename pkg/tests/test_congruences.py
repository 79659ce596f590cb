import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import load_corpus, small_semirings
from semicong.congruences import (
    CongruenceKind,
    OracleBoundExceeded,
    all_congruences,
    congruence_violation,
    congruences_by_joins,
    congruences_by_partitions,
    generated_congruence,
    is_b_lattice,
    is_b_lattice_of_skew_rings,
    is_b_lattice_of_skew_rings_brute,
    is_completely_regular_semiring,
    is_congruence,
    is_gaip_congruence,
    is_idempotent_semiring,
    is_skew_ring,
    least_congruence,
    named_congruence,
    nu,
    nu_seed,
    nu_tau,
    rho,
    set_partitions,
    sigma_archimedean,
    tau_natural,
    y_relation,
    y_star,
)
from semicong.core import FiniteSemiring, Partition, direct_product, trivial_semiring
from semicong.corpus import boolean, left_zero_band, nil2, point_band, z_mod
from semicong.elements import NotQuasiCompletelyRegular, is_quasi_completely_regular
from semicong.relations import BinRelation
from semicong.structures import ReesSpec, rees_matrix

B, Z2, N2 = boolean(), z_mod(2), nil2()
BZ2 = direct_product(B, Z2)
REES4 = rees_matrix(ReesSpec(left_zero_band(2), point_band(), z_mod(2), [[0, 0]]))
EPS = Partition.identity
OMEGA = Partition.universal

# order-3 instance where the split {0,2}{1} fails additive compatibility: 0+2 = 0, 2+2 = 1
SPLIT_FAIL = FiniteSemiring(((0, 0, 0), (0, 0, 0), (0, 0, 1)), ((0, 0, 0),) * 3)

SMALL = sorted(n for n, S in load_corpus().items() if S.order <= 6)


def _corpus(name):
    return load_corpus()[name]


class TestIsCongruence:
    @pytest.mark.parametrize("S", [B, Z2, N2, BZ2, REES4])
    def test_extremes(self, S):
        assert is_congruence(S, EPS(S.order)) and is_congruence(S, OMEGA(S.order))

    def test_first_coordinate_of_product(self):
        assert is_congruence(BZ2, Partition.from_classes(4, [[0, 1], [2, 3]]))

    def test_witness(self):
        theta = Partition.from_classes(3, [[0, 2], [1]])
        assert congruence_violation(SPLIT_FAIL, theta) == (0, 2, 2, "x+c")


class TestGenerated:
    def test_examples(self):
        assert generated_congruence(BZ2, []) == EPS(4)
        everything = [(a, b) for a in range(4) for b in range(4)]
        assert generated_congruence(BZ2, everything) == OMEGA(4)
        assert generated_congruence(N2, [(0, 1)]) == OMEGA(2)

    @settings(max_examples=80, deadline=None)
    @given(st.sampled_from(SMALL), st.data())
    def test_is_least_containing(self, name, data):
        S = _corpus(name)
        pairs = data.draw(st.lists(st.tuples(st.sampled_from(S.elements), st.sampled_from(S.elements)), max_size=3))
        theta = generated_congruence(S, pairs)
        containing = [p for p in oracles.congruences(S.add, S.mul)
                      if all(p[a] == p[b] for a, b in pairs)]
        least = [p for p in containing if all(oracles.refines(p, q) for q in containing)]
        assert [theta] == [Partition.from_labels(p) for p in least]

    def test_tau_natural_examples(self):
        assert tau_natural(BZ2, []) == EPS(4)
        assert tau_natural(N2, [(0, 1)]) == OMEGA(2)

    def test_tau_natural_on_seed_is_generated(self, corpus):
        for S in corpus.values():
            seed = nu_seed(S)
            assert tau_natural(S, seed) == generated_congruence(S, seed)


class TestAllCongruences:
    def test_examples(self):
        assert all_congruences(Z2) == [EPS(2), OMEGA(2)]
        assert all_congruences(N2) == [EPS(2), OMEGA(2)]
        # four of the fifteen partitions of a 4-set, checked by the naive oracle
        assert len(all_congruences(BZ2)) == 4

    def test_set_partitions_are_bell_numbers(self):
        assert [sum(1 for _ in set_partitions(n)) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]

    def test_methods_agree(self, corpus):
        for name in SMALL:
            S = corpus[name]
            naive = sorted(Partition.from_labels(p).class_of for p in oracles.congruences(S.add, S.mul))
            joins = sorted(p.class_of for p in congruences_by_joins(S))
            parts = sorted(p.class_of for p in congruences_by_partitions(S))
            assert joins == parts == naive, name

    def test_bound(self, monkeypatch):
        big = direct_product(direct_product(B, B), direct_product(B, Z2))
        monkeypatch.setenv("ORACLE_MAX_ORDER", "8")
        with pytest.raises(OracleBoundExceeded):
            all_congruences(big)
        assert len(all_congruences(big, bound=16)) > 2


class TestNamed:
    def test_rho(self):
        assert rho(B) == EPS(2)
        assert rho(N2) == OMEGA(2)
        assert rho(BZ2) == EPS(4)

    def test_rho_least_completely_regular(self, corpus):
        for name in SMALL:
            S = corpus[name]
            oracle = oracles.least(S.add, S.mul, oracles.is_completely_regular_semiring)
            assert rho(S) == Partition.from_labels(oracle), name
            assert least_congruence(S, is_completely_regular_semiring) == rho(S)

    def test_nu_examples(self):
        assert nu(BZ2) == EPS(4)
        assert nu(N2) == OMEGA(2)
        # the two R+-classes merge: classes follow the middle coordinate
        assert nu(REES4) == Partition.from_classes(4, [[0, 2], [1, 3]])

    def test_literal_closure_misses_nil_elements(self):
        # the idempotent pairs alone only relate e to itself
        assert nu_seed(N2) == [(1, 1)]
        assert nu_tau(N2) == EPS(2)

    def test_literal_closure_exact_on_completely_regular(self, corpus):
        for name in SMALL:
            S = corpus[name]
            lit = nu_tau(S)
            oracle = Partition.from_labels(oracles.least(S.add, S.mul, oracles.is_blsr))
            assert (lit == oracle) == is_completely_regular_semiring(S), name

    def test_inclusions(self, corpus):
        for S in corpus.values():
            n = nu(S)
            assert rho(S) <= n
            assert y_relation(S) <= BinRelation.from_partition(y_star(S))
            assert y_star(S) <= n

    def test_y_examples(self):
        assert y_relation(B) == BinRelation.identity(2)
        assert y_relation(N2).is_universal()
        assert y_relation(Z2) == BinRelation.identity(2)
        assert y_star(B) == EPS(2) and y_star(N2) == OMEGA(2)

    def test_gaip(self):
        assert is_gaip_congruence(BZ2, EPS(4))
        assert is_gaip_congruence(N2, OMEGA(2))
        assert not is_gaip_congruence(Z2, OMEGA(2))

    def test_sigma_examples(self):
        assert sigma_archimedean(Z2) == EPS(2)
        assert sigma_archimedean(REES4) == Partition.from_classes(4, [[0, 2], [1, 3]])
        with pytest.raises(ValueError):
            sigma_archimedean(B)

    def test_preconditions(self):
        S = FiniteSemiring(((0, 0, 0), (0, 0, 0), (0, 0, 2)), ((0, 0, 0),) * 3)
        assert not is_quasi_completely_regular(S)
        for f in (rho, nu, y_relation, y_star):
            with pytest.raises(NotQuasiCompletelyRegular):
                f(S)

    @pytest.mark.parametrize("kind", list(CongruenceKind))
    def test_dispatch(self, kind):
        theta = named_congruence(N2, kind)
        assert isinstance(theta, Partition) and is_congruence(N2, theta)


class TestPredicates:
    def test_examples(self):
        assert is_skew_ring(Z2) and not is_skew_ring(B)
        assert is_b_lattice(B) and not is_b_lattice(Z2)
        assert is_idempotent_semiring(B)
        assert is_b_lattice_of_skew_rings(BZ2)
        assert not is_b_lattice_of_skew_rings(N2)
        assert is_completely_regular_semiring(trivial_semiring())

    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_b_lattice_of_skew_rings_three_ways(self, order):
        for S in small_semirings(order):
            if S.order != order:
                continue
            fast = is_b_lattice_of_skew_rings(S)
            assert fast == is_b_lattice_of_skew_rings_brute(S) == oracles.is_blsr(S.add, S.mul)
