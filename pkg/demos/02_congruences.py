"""Congruence lattices and the named congruences, checked against brute force.

Every "least such-and-such congruence" is computed two ways: from its
closed-form description and as the meet of the whole congruence lattice
filtered by the quotient property.
"""
from semicong import (
    all_congruences,
    direct_product,
    is_b_lattice_of_skew_rings,
    is_completely_regular_semiring,
    least_congruence,
    nu,
    nu_tau,
    quotient,
    rho,
    y_relation,
    y_star,
)
from semicong.corpus import boolean, inflate, nil2, z_mod

examples = {
    "B x Z2": direct_product(boolean(), z_mod(2)),
    "N2 x Z2": direct_product(nil2(), z_mod(2)),
    "B x Z2 with an extra nil element": inflate(direct_product(boolean(), z_mod(2)), 1),
}

for name, S in examples.items():
    lattice = all_congruences(S)
    print(f"{name}: order {S.order}, {len(lattice)} congruences")
    print(f"  rho = {rho(S)}; least completely regular quotient: "
          f"{least_congruence(S, is_completely_regular_semiring)}")
    print(f"  nu  = {nu(S)}; least b-lattice of skew-rings quotient: "
          f"{least_congruence(S, is_b_lattice_of_skew_rings)}")
    print(f"  idempotent pairs alone generate {nu_tau(S)}")
    print(f"  Y   = {y_relation(S).to_partition()}, Y* = {y_star(S)}")
    print(f"  S/nu has order {quotient(S, nu(S)).order}")
