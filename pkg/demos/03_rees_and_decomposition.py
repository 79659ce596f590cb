"""Rees matrix semirings: build one, read its coordinates back, decompose a product.

A Rees matrix semiring is assembled from two bands sharing a distinguished
element, a skew-ring and a sandwich matrix P. Coordinatizing the result
recovers the same data up to isomorphism, and the least skew-ring
congruence is read off from the skew-ideal generated by P.
"""
from pathlib import Path

from semicong import (
    coordinatize,
    decompose,
    direct_product,
    is_completely_simple,
    is_isomorphic,
    rees_matrix,
    sigma_archimedean,
    skew_ideal_generated,
    validate_p,
)
from semicong.corpus import boolean
from semicong.formats import read_rees

data = Path(__file__).resolve().parent.parent / "data" / "rees"

spec = read_rees(data / "square-z3.rees")
print("square-z3.rees: |I| =", spec.band_i.order, "|R| =", spec.ring.order, "|L| =", spec.band_l.order)
print("  sandwich conditions violated:", validate_p(spec) or "none")
M = rees_matrix(spec)
print("  order", M.order, "completely simple:", is_completely_simple(M))
c = coordinatize(M)
print("  recovered P:", c.spec.P, "isomorphic rebuild:", is_isomorphic(rees_matrix(c.spec), M) is not None)
print("  skew-ideal of P:", sorted(skew_ideal_generated(c.spec.ring, set(c.spec.P_entries()))))
print("  sigma:", sigma_archimedean(M))

bad = read_rees(data / "invalid.rees")
print("\ninvalid.rees violates:", sorted({cond for cond, _ in validate_p(bad)}))

S = direct_product(boolean(), M)
d = decompose(S)
print(f"\nB x M (order {S.order}) splits into {len(d.components)} completely Archimedean components")
for block, K in zip(d.components, d.kernels):
    print(f"  component of size {len(block)}, kernel size {len(K)}")
