import pytest

import oracles
from semicong.core import FiniteSemiring, is_isomorphic, validate
from semicong.corpus import z_mod
from semicong.enumeration import associative_tables, canonical_form, enumerate_semirings

# counts recomputed by the pure-Python oracle in each test; frozen here for reference
RAW = {1: 1, 2: 36, 3: 1747}
UP_TO_ISO = {1: 1, 2: 20, 3: 316}
QCR_RAW = {1: 1, 2: 24, 3: 868}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_raw_counts_match_oracle(n):
    mine = {(S.add, S.mul) for S in enumerate_semirings(n)}
    naive = set(oracles.all_semirings(n))
    assert mine == naive
    assert len(mine) == RAW[n]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_up_to_iso(n):
    reps = list(enumerate_semirings(n, upto_iso=True))
    assert len(reps) == UP_TO_ISO[n] == oracles.count_iso_classes(oracles.all_semirings(n))
    for S in reps[:40]:
        for T in reps[:40]:
            assert (S == T) == (is_isomorphic(S, T) is not None)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_qcr_filter(n):
    got = list(enumerate_semirings(n, filters=["qcr"]))
    assert len(got) == QCR_RAW[n] == sum(oracles.is_qcr(*t) for t in oracles.all_semirings(n))


def test_order_three_contains_familiar_instances():
    reps = list(enumerate_semirings(3, filters=["qcr"], upto_iso=True))
    assert any(is_isomorphic(S, z_mod(3)) for S in reps)
    chain = [[max(a, b) for b in range(3)] for a in range(3)]
    chain_mul = [[min(a, b) for b in range(3)] for a in range(3)]
    assert any(is_isomorphic(S, validate(chain, chain_mul)) for S in reps)


def test_associative_tables_sorted_and_complete():
    tabs = associative_tables(2)
    assert len(tabs) == 8
    flat = [tuple(t.ravel()) for t in tabs]
    assert flat == sorted(flat)


def test_canonical_form_is_relabelling_invariant():
    for S in list(enumerate_semirings(3))[::50]:
        add, mul = oracles.relabel((S.add, S.mul), (2, 0, 1))
        assert canonical_form(S) == canonical_form(FiniteSemiring(add, mul))


def test_limits():
    with pytest.raises(ValueError, match="corpus"):
        next(enumerate_semirings(4))
    with pytest.raises(ValueError, match="unknown filter"):
        next(enumerate_semirings(2, filters=["nope"]))
    with pytest.raises(ValueError):
        next(enumerate_semirings(0))
