"""Quasi-orthodoxy and the three equivalent tests for it.

With P = [[0, 0], [0, 1]] over Z2 with zero multiplication, the sum of two
additive idempotents can have additive period 2, so the semiring is not
quasi-orthodox. Y is then still a congruence but no longer the least
b-lattice of skew-rings congruence, and S/rho is not the spined product.
"""
from pathlib import Path

from semicong import (
    is_quasi_orthodox,
    nu,
    quasi_orthodox_violation,
    rees_matrix,
    y_relation,
    zero_identity_violation,
)
from semicong.corpus import direct_product, nil2
from semicong.formats import read_rees
from semicong.verify import spined_comparison

data = Path(__file__).resolve().parent.parent / "data" / "rees"
untwisted = rees_matrix(read_rees(data / "square-z3.rees"))
twisted = rees_matrix(read_rees(data / "twisted.rees"))

for name, S in [("untwisted", untwisted), ("twisted", twisted), ("N2 x untwisted", direct_product(nil2(), untwisted))]:
    print(f"{name} (order {S.order})")
    print("  quasi-orthodox:", is_quasi_orthodox(S), "witness:", quasi_orthodox_violation(S))
    print("  zero identity violation:", zero_identity_violation(S))
    print("  S/rho is the spined product:", spined_comparison(S))
    print("  Y == nu:", y_relation(S).to_partition() == nu(S))
