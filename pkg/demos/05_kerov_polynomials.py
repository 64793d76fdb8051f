"""
Kerov polynomials by counting and by linear algebra
===================================================

"""

from zonalkit import anisotropic_cumulants, zonal_character
from zonalkit.kerov import (
    kerov_integrality_report,
    kerov_oracle,
    kerov_polynomial_combinatorial,
    symplectic_kerov,
)

# counting bipartite graphs with a marriage condition
for k in range(1, 5):
    count = kerov_polynomial_combinatorial((k,))
    print(k, count, count == kerov_oracle(k))

# the polynomial reproduces the character
k2 = kerov_polynomial_combinatorial((2,))
for lam in [(2, 1), (3, 1), (2, 2, 1)]:
    r = dict(enumerate(anisotropic_cumulants(lam, 2, 3), 1))
    print(lam, k2.evaluate(r), zonal_character((2,), lam))

print(kerov_integrality_report((2, 2)).polynomial)
print(symplectic_kerov((3,)))
