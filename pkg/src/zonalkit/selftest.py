"""Built-in verification suite behind ``zonalkit selftest``."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .characters import (
    ORBIT_CAPACITY,
    n1_bruteforce,
    n1_graph,
    n2_bruteforce,
    stanley_positivity_report,
    zonal_character,
    zonal_character_oracle,
    zonal_character_orbit_formula,
)
from .cumulants import anisotropic_cumulants
from .kerov import kerov_integrality_report, kerov_oracle, kerov_polynomial_combinatorial
from .pairings import double_factorial, enumerate_pair_partitions, triplet_graph
from .partitions import Partition, partitions_of
from .zonal import jack_oracle, zonal_polynomial

LEVELS = {
    # largest k for pairings, |λ| for zonal, |μ| and |λ| for characters, k for Kerov
    "quick": dict(pairings=5, zonal=4, mu=3, lam=4, kerov=3),
    "full": dict(pairings=6, zonal=5, mu=5, lam=5, kerov=4),
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""


def _partitions_upto(n: int, start: int = 1):
    for size in range(start, n + 1):
        yield from partitions_of(size)


def _checks(cfg: dict) -> list[tuple[str, Callable[[], str | None]]]:
    def pairings():
        for k in range(1, cfg["pairings"] + 1):
            if sum(1 for _ in enumerate_pair_partitions(k)) != double_factorial(2 * k - 1):
                return f"wrong count at k={k}"

    def zonal():
        for lam in _partitions_upto(cfg["zonal"]):
            if zonal_polynomial(lam) != jack_oracle(lam):
                return f"mismatch at λ={tuple(lam)}"

    def characters():
        for mu in _partitions_upto(cfg["mu"]):
            for lam in _partitions_upto(cfg["lam"], mu.size):
                a = zonal_character(mu, lam)
                if a != zonal_character_oracle(mu, lam):
                    return f"mismatch at μ={tuple(mu)}, λ={tuple(lam)}"
                if mu.size <= ORBIT_CAPACITY and a != zonal_character_orbit_formula(mu, lam):
                    return f"mismatch at μ={tuple(mu)}, λ={tuple(lam)}"

    def n_functions():
        triplets = list(itertools.product(list(enumerate_pair_partitions(2)), repeat=3))
        for (s0, s1, s2), lam in itertools.product(triplets, [(1,), (2,), (1, 1), (2, 1)]):
            n1 = n1_bruteforce(s0, s1, s2, lam)
            g = triplet_graph(s0, s1, s2)
            if n1 != n1_graph(g, lam) or n2_bruteforce(s0, s1, s2, lam) != 2 ** len(g.black) * n1:
                return f"mismatch at {s0}, {s1}, {s2}, λ={lam}"

    def positivity():
        for mu in _partitions_upto(cfg["mu"]):
            if not stanley_positivity_report(mu).passed:
                return f"failed for μ={tuple(mu)}"

    def kerov():
        for k in range(1, cfg["kerov"] + 1):
            if kerov_polynomial_combinatorial((k,)) != kerov_oracle(k):
                return f"count and oracle differ at k={k}"
        for mu in _partitions_upto(cfg["mu"]):
            if not kerov_integrality_report(mu).passed:
                return f"integrality fails for μ={tuple(mu)}"

    def evaluation():
        for k in range(1, min(cfg["kerov"], 3) + 1):
            poly = kerov_polynomial_combinatorial((k,))
            for lam in _partitions_upto(cfg["lam"]):
                r = dict(enumerate(anisotropic_cumulants(lam, 2, k + 1), 1))
                if poly.evaluate(r) != zonal_character((k,), lam):
                    return f"K_({k}) disagrees at λ={tuple(lam)}"

    def duality():
        for lam in _partitions_upto(cfg["lam"] + 1):
            a = anisotropic_cumulants(lam, Fraction(1, 2), 6)
            b = anisotropic_cumulants(Partition(lam).conjugate(), 2, 6)
            if any(x != (-2) ** (i + 1) * y for i, (x, y) in enumerate(zip(a, b))):
                return f"duality fails at λ={tuple(lam)}"

    return [
        ("pair-partition counts", pairings),
        ("zonal polynomials vs Gram-Schmidt", zonal),
        ("characters: direct, oracle, orbits", characters),
        ("N-functions", n_functions),
        ("Stanley positivity", positivity),
        ("Kerov polynomials", kerov),
        ("Kerov evaluation identity", evaluation),
        ("cumulant duality", duality),
    ]


def run_selftest(level: str = "quick") -> list[CheckResult]:
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}; choose from {sorted(LEVELS)}")
    results = []
    for name, check in _checks(LEVELS[level]):
        t0 = time.perf_counter()
        try:
            detail = check()
        except Exception as exc:  # report and keep going
            detail = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, detail is None, time.perf_counter() - t0, detail or ""))
    return results
