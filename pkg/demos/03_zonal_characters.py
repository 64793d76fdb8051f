"""
Zonal characters three ways
===========================

"""

from zonalkit import (
    stanley_polynomial,
    stanley_positivity_report,
    symplectic_character,
    zonal_character,
    zonal_character_oracle,
    zonal_character_orbit_formula,
)

lam = (3, 2)

# graph sum, coefficient extraction and orbit count
for mu in [(1,), (2,), (1, 1), (3,), (2, 1)]:
    print(mu, zonal_character(mu, lam), zonal_character_oracle(mu, lam),
          zonal_character_orbit_formula(mu, lam))

# Σ_(2) depends only on row and column square sums
rows = sum(x * x for x in lam)
cols = sum(x * x for x in (2, 2, 1))
print(zonal_character((2,), lam), 2 * rows - cols - sum(lam))

# as a polynomial in multirectangular coordinates
print(stanley_polynomial((2,), 2))
print(stanley_positivity_report((2, 1)).passed)

# the symplectic dual lives on the conjugate diagram
print(symplectic_character((2,), lam))
