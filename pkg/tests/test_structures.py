from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import load_corpus, small_semirings
from semicong.congruences import is_b_lattice_of_skew_rings, is_skew_ring
from semicong.core import Partition, direct_product, is_isomorphic, subsemiring, trivial_semiring
from semicong.corpus import (
    boolean,
    left_zero_band,
    nil2,
    point_band,
    rees_specs,
    right_zero_band,
    skew_rings,
    z_mod,
    z_mod_scaled,
)
from semicong.elements import additive_idempotents
from semicong.relations import star_j
from semicong.structures import (
    Band,
    ReesSpec,
    ReesSpecError,
    coordinatize,
    decompose,
    is_completely_archimedean,
    is_completely_simple,
    is_quasi_orthodox,
    kernel,
    quasi_orthodox_violation,
    rees_elements,
    rees_matrix,
    ring_negation,
    skew_ideal_generated,
    validate_p,
    zero_identity_check,
)

B, Z2, N2 = boolean(), z_mod(2), nil2()
LZ2, RZ2, PT = left_zero_band(2), right_zero_band(2), point_band()
REES4_SPEC = ReesSpec(LZ2, PT, Z2, [[0, 0]])
REES4 = rees_matrix(REES4_SPEC)
SPECS = rees_specs(8)


class TestBands:
    def test_rejects_non_idempotent(self):
        with pytest.raises(ReesSpecError):
            Band([[1, 0], [0, 1]], 0)

    def test_rejects_bad_point(self):
        with pytest.raises(ReesSpecError):
            Band([[0]], 1)


class TestSandwich:
    @pytest.mark.parametrize("R", list(skew_rings().values())[:6])
    def test_zero_matrix_is_valid(self, R):
        zero = next(e for e in additive_idempotents(R))
        for I, L in [(LZ2, RZ2), (RZ2, LZ2), (PT, LZ2)]:
            assert validate_p(ReesSpec(I, L, R, [[zero] * I.order for _ in range(L.order)])) == []

    def test_point_bands(self):
        assert validate_p(ReesSpec(PT, PT, Z2, [[0]])) == []

    def test_nonzero_on_distinguished_row(self):
        bad = validate_p(ReesSpec(LZ2, RZ2, Z2, [[0, 0], [1, 0]]))
        assert ("i", ("p[l,o]", 1)) in bad

    def test_shape_mismatch(self):
        with pytest.raises(ReesSpecError):
            ReesSpec(LZ2, PT, Z2, [[0]])

    def test_ring_must_be_skew_ring(self):
        with pytest.raises(ReesSpecError):
            ReesSpec(PT, PT, B, [[0]])


class TestReesMatrix:
    def test_order_four_example(self):
        assert REES4.order == 4
        elems = rees_elements(REES4_SPEC)
        idem = sorted(additive_idempotents(REES4))
        assert [elems[e] for e in idem] == [(0, 0, 0), (1, 0, 0)]
        # the idempotents form a left-zero additive band
        assert all(REES4.add[e][f] == e for e in idem for f in idem)

    def test_enough_specs(self):
        assert len(SPECS) >= 20

    @pytest.mark.parametrize("name,spec", SPECS[::5])
    def test_outputs_are_completely_simple(self, name, spec):
        M = rees_matrix(spec)
        assert M.order == spec.order
        assert is_completely_simple(M) and is_completely_archimedean(M)

    def test_collapses_to_ring(self):
        assert is_isomorphic(rees_matrix(ReesSpec(PT, PT, Z2, [[0]])), Z2)


class TestSkewIdeal:
    @staticmethod
    def _is_skew_ideal(R, X):
        neg = ring_negation(R)
        return all(
            R.add[x][y] in X and neg[x] in X and R.add[R.add[c][x]][neg[c]] in X
            and R.mul[c][x] in X and R.mul[x][c] in X
            for x in X for y in X for c in R.elements
        )

    @pytest.mark.parametrize("name", sorted(skew_rings()))
    def test_least_by_exhaustion(self, name):
        R = skew_rings()[name]
        for g in R.elements:
            got = skew_ideal_generated(R, {g})
            assert self._is_skew_ideal(R, got) and g in got
            for k in range(1, len(got)):
                for sub in combinations(sorted(got), k):
                    if g in sub:
                        assert not self._is_skew_ideal(R, set(sub))

    def test_examples(self):
        assert skew_ideal_generated(Z2, {0}) == {0}
        assert skew_ideal_generated(z_mod(4), {2}) == {0, 2}
        assert skew_ideal_generated(z_mod_scaled(4, 0), {1}) == {0, 1, 2, 3}


class TestPredicates:
    def test_completely_simple(self):
        assert is_completely_simple(Z2) and is_completely_simple(REES4)
        assert not is_completely_simple(B)

    def test_completely_archimedean(self):
        assert is_completely_archimedean(N2) and is_completely_archimedean(Z2)
        assert not is_completely_archimedean(B)

    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_completely_simple_means_rees(self, order):
        for S in small_semirings(order):
            if S.order == order and is_completely_simple(S):
                c = coordinatize(S)
                assert is_isomorphic(rees_matrix(c.spec), S)

    def test_kernel(self):
        assert kernel(N2) == {1}
        assert kernel(REES4) == set(range(4))
        with pytest.raises(ValueError):
            kernel(B)


class TestCoordinatize:
    def test_ring(self):
        c = coordinatize(Z2)
        assert c.spec.P == ((0,),)
        assert c.spec.band_i.order == c.spec.band_l.order == 1

    def test_order_four_example(self):
        c = coordinatize(REES4)
        assert (c.spec.band_i.order, c.spec.band_l.order) == (2, 1)
        assert c.spec.P == ((0, 0),)

    @pytest.mark.parametrize("name,spec", SPECS)
    def test_round_trip(self, name, spec):
        M = rees_matrix(spec)
        c = coordinatize(M)
        assert is_isomorphic(rees_matrix(c.spec), M)
        assert is_isomorphic(c.spec.ring, spec.ring)
        assert (c.spec.band_i.order, c.spec.band_l.order) == (spec.band_i.order, spec.band_l.order)


class TestDecompose:
    def test_boolean(self):
        d = decompose(B)
        assert d.components == ((0,), (1,)) and is_isomorphic(d.blattice, B)

    def test_nil(self):
        assert len(decompose(N2).components) == 1

    def test_product(self):
        d = decompose(direct_product(B, Z2))
        assert d.components == ((0, 1), (2, 3))

    def test_order_is_additive(self):
        d = decompose(B)
        # 0 + 1 = 1 in B, so the component of 0 lies below that of 1
        assert d.below(0, 1) and not d.below(1, 0)

    def test_components_match_starred_j(self, corpus):
        for S in corpus.values():
            d = decompose(S)
            assert d.partition == star_j(S).to_partition()
            for block, K, c in zip(d.components, d.kernels, d.coords):
                assert K <= set(block)
                assert set(c.coords_of) == set(K)


class TestQuasiOrthodox:
    def test_nil(self):
        assert is_quasi_orthodox(N2) and zero_identity_check(N2)

    def test_twisted_witness(self, corpus):
        S = corpus["rees-LZ2-Z2zero-RZ2-twisted"]
        assert quasi_orthodox_violation(S) == (0, 7)
        assert not zero_identity_check(S)

    def test_b_lattices_of_skew_rings_satisfy_zero_identity(self, corpus):
        hits = [S for S in corpus.values() if is_b_lattice_of_skew_rings(S)]
        assert len(hits) > 50
        assert all(zero_identity_check(S) for S in hits)
