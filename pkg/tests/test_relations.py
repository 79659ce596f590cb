import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import load_corpus, small_semirings
from semicong.congruences import y_relation
from semicong.core import Partition, trivial_semiring
from semicong.corpus import boolean, left_zero_band, nil2, point_band, z_mod
from semicong.elements import is_additively_quasi_regular, is_quasi_completely_regular
from semicong.enumeration import enumerate_semirings
from semicong.relations import (
    BinRelation,
    compose,
    green_d,
    green_d_reversed,
    green_h,
    green_j,
    green_l,
    green_r,
    intersect,
    is_equivalence,
    star_d,
    star_h,
    star_j,
    star_l,
    star_r,
    transitive_closure,
)
from semicong.structures import ReesSpec, is_quasi_orthodox, rees_matrix

GREEN = {"L": green_l, "R": green_r, "J": green_j, "H": green_h, "D": green_d}
STAR = {"L": star_l, "R": star_r, "J": star_j, "H": star_h, "D": star_d}

B, Z2, N2 = boolean(), z_mod(2), nil2()
REES4 = rees_matrix(ReesSpec(left_zero_band(2), point_band(), z_mod(2), [[0, 0]]))


def relations():
    return st.integers(1, 5).flatmap(
        lambda n: st.lists(st.booleans(), min_size=n * n, max_size=n * n).map(
            lambda bits: BinRelation(np.array(bits, dtype=bool).reshape(n, n))
        )
    )


class TestAlgebra:
    @given(relations())
    def test_identity_is_neutral(self, r):
        e = BinRelation.identity(r.n)
        assert compose(e, r) == r == compose(r, e)

    @given(relations(), relations())
    def test_compose_matches_naive(self, r, s):
        if r.n != s.n:
            with pytest.raises(ValueError):
                compose(r, s)
            return
        naive = {(a, c) for a, b in r.pairs() for b2, c in s.pairs() if b == b2}
        assert set(compose(r, s).pairs()) == naive
        assert set(intersect(r, s).pairs()) == set(r.pairs()) & set(s.pairs())

    def test_cycle_closure(self):
        r = BinRelation.from_pairs(3, [(0, 1), (1, 2), (2, 0)])
        assert transitive_closure(r).is_universal()

    @given(relations())
    def test_closure_is_least_transitive(self, r):
        t = transitive_closure(r)
        assert t.is_transitive() and r <= t
        pairs = set(r.pairs())
        while True:
            more = pairs | {(a, c) for a, b in pairs for b2, c in pairs if b == b2}
            if more == pairs:
                break
            pairs = more
        assert set(t.pairs()) == pairs

    @given(st.lists(st.integers(0, 2), min_size=4, max_size=4))
    def test_partition_round_trip(self, labels):
        p = Partition.from_labels(labels)
        r = BinRelation.from_partition(p)
        assert is_equivalence(r) and r.to_partition() == p


class TestGreen:
    @pytest.mark.parametrize("S", [Z2, trivial_semiring()])
    def test_universal_on_groups(self, S):
        for f in GREEN.values():
            assert f(S).is_universal()

    def test_rees_example(self):
        # elements (i, g, o) in lexicographic order; R+ follows i, L+ is universal
        assert green_r(REES4).to_partition() == Partition.from_classes(4, [[0, 1], [2, 3]])
        assert green_l(REES4).is_universal()

    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_against_naive(self, order):
        for S in enumerate_semirings(order):
            for name, f in GREEN.items():
                assert set(f(S).pairs()) == oracles.green(S.add, name)
            assert green_d(S) == green_d_reversed(S)
            if is_quasi_completely_regular(S):
                for name, f in STAR.items():
                    if name != "D":
                        assert set(f(S).pairs()) == oracles.starred(S.add, name)

    @pytest.mark.parametrize("order", [2, 3])
    def test_compatibilities(self, order):
        for S in enumerate_semirings(order):
            E = S.elements
            for f in (green_l, green_r, green_j, green_h):
                r = f(S)
                assert all(r(S.mul[a][c], S.mul[b][c]) and r(S.mul[c][a], S.mul[c][b])
                           for a, b in r.pairs() for c in E)
            L, R = green_l(S), green_r(S)
            assert all(L(S.add[a][c], S.add[b][c]) for a, b in L.pairs() for c in E)
            assert all(R(S.add[c][a], S.add[c][b]) for a, b in R.pairs() for c in E)


class TestStarred:
    def test_examples(self):
        assert star_j(N2).is_universal()
        assert star_j(B) == BinRelation.identity(2)
        assert star_h(B) == BinRelation.identity(2)
        for f in STAR.values():
            assert f(Z2).is_universal()

    def test_completely_regular_agrees_with_green(self):
        for S in (B, Z2, REES4):
            for name in GREEN:
                assert STAR[name](S) == GREEN[name](S)

    def test_finite_semirings_are_additively_quasi_regular(self):
        # some multiple of every element is idempotent, so the starred
        # relations are always defined on finite input
        for S in small_semirings(3):
            assert is_additively_quasi_regular(S)

    def test_star_d_is_star_j(self, corpus):
        for S in corpus.values():
            d = star_d(S)
            assert is_equivalence(d)
            assert d == star_j(S)

    def test_star_d_factors_through_y(self, corpus):
        for S in corpus.values():
            if is_quasi_orthodox(S):
                assert star_d(S) == compose(star_h(S), y_relation(S))
