"""
Transition measures and free cumulants
======================================

"""

from fractions import Fraction

from zonalkit import anisotropic_cumulants, free_cumulants, transition_measure
from zonalkit.cumulants import interlacing_of_multirect
from zonalkit.partitions import multirect_of_partition


def show(xs):
    return " ".join(str(x) for x in xs)


lam = (4, 2)
coords = interlacing_of_multirect(multirect_of_partition(lam))
print("minima", show(coords.minima), "maxima", show(coords.maxima))

tm = transition_measure(coords)
print("atoms", show(f"{x}:{w}" for x, w in tm.atoms))
print("moments", show(tm.moments(4)))

# R_1 = 0 and R_2 = |λ|
print("R", show(free_cumulants(lam, 5)))

# anisotropic versions for the two Jack parameters
print("R^(2)  ", show(anisotropic_cumulants((2, 1), 2, 4)))
print("R^(1/2)", show(anisotropic_cumulants((2, 1), Fraction(1, 2), 4)))
