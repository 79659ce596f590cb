"""Element-level structure: multiples, complete regularity and Green's relations.

The two-element nil semiring {a, e} (a + a = e, everything else e) is the
smallest semiring that is quasi completely regular without being completely
regular: a itself lies in no additive subgroup, but 2a = e does.
"""
from semicong import (
    additive_orbit,
    direct_product,
    green_d,
    green_l,
    green_r,
    is_quasi_completely_regular,
    profile,
    star_j,
)
from semicong.corpus import boolean, nil2, z_mod

N2 = nil2()
print("nil semiring: a = 0, e = 1")
for x in N2.elements:
    p = profile(N2, x)
    print(f"  element {x}: orbit {additive_orbit(N2, x)[0]}, cr_index {p.cr_index}, 0_x = {p.zero_of}")
print("  quasi completely regular:", is_quasi_completely_regular(N2))
print("  starred J+ classes:", star_j(N2).to_partition().classes)

B = boolean()
print("\nBoolean semiring ({0,1}, max, min)")
print("  starred J+ classes:", star_j(B).to_partition().classes)

S = direct_product(B, z_mod(2))
print("\nB x Z2, elements (b, z) numbered 2b + z")
for name, rel in [("L+", green_l(S)), ("R+", green_r(S)), ("D+", green_d(S))]:
    print(f"  {name} classes: {rel.to_partition().classes}")
