"""Exact combinatorics of zonal polynomials, zonal characters and Kerov polynomials."""
from .cache import ResultCache
from .characters import (
    n1_bruteforce,
    n1_graph,
    n1_graph_polynomial,
    n2_bruteforce,
    stanley_polynomial,
    stanley_positivity_report,
    symplectic_character,
    zonal_character,
    zonal_character_oracle,
    zonal_character_orbit_formula,
)
from .cumulants import (
    InterlacingCoords,
    TransitionMeasure,
    anisotropic_cumulant,
    anisotropic_cumulants,
    free_cumulants,
    interlacing_of_multirect,
    transition_measure,
)
from .kerov import (
    kerov_count,
    kerov_integrality_report,
    kerov_oracle,
    kerov_polynomial_combinatorial,
    symplectic_kerov,
)
from .maps import map_stats
from .pairings import (
    CapacityError,
    PairPartition,
    canonical_couple,
    couples_of_type_count,
    enumerate_pair_partitions,
    loop_structure,
    orientation_orbits,
    triplet_graph,
)
from .partitions import MultiRect, Partition, multirect, partitions_of
from .poly import KerovPolynomial, PQPolynomial, PSymmetricFunction
from .zonal import jack_oracle, theta_coefficient, zonal_polynomial

__version__ = "0.1.0"
