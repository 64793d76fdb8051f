"""
Zonal polynomials in the power-sum basis
========================================

"""

from zonalkit import jack_oracle, zonal_polynomial

# Z_λ is a sum over pairings of the boxes of the tableau of 2λ
z = zonal_polynomial((2, 1))
print("Z_(2,1) =", z)

# the Gram-Schmidt route through monomials must agree
print("oracle  =", jack_oracle((2, 1)))

# every zonal polynomial starts with p_1^n
for lam in [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]:
    print(lam, "->", zonal_polynomial(lam).coefficient([1] * sum(lam)))

# α = 1/2 gives the symplectic side
print("J^(1/2)_(2,1) =", jack_oracle((2, 1), alpha="1/2"))
