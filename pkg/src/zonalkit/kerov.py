"""Zonal Kerov polynomials: characters as polynomials in free cumulants.

The combinatorial route counts pairs ``(S0, q)`` where ``S0`` glues a
connected map and ``q`` labels its black vertices subject to a strict
marriage condition. The oracle for one-part μ solves for the
coefficients symbolically in Stanley coordinates.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from typing import Iterable, Mapping, Sequence

from ._parallel import map_reduce
from .characters import CHARACTER_CAPACITY, stanley_polynomial
from .cumulants import symbolic_free_cumulants
from .pairings import (
    CapacityError,
    PairPartition,
    canonical_couple,
    enumerate_pair_partitions,
    triplet_graph,
)
from .partitions import Partition, partitions_of
from .poly import KerovPolynomial, PQPolynomial, SVector, s_vector, s_weight

KEROV_CAPACITY = CHARACTER_CAPACITY
ORACLE_MAX_K = 4


class RankDeficiencyError(RuntimeError):
    """The symbolic solve did not determine the coefficients uniquely."""


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cut in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cut + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def marriage_condition(neighbors: Sequence[frozenset[int]], q: Sequence[int]) -> bool:
    """Every nontrivial set ``A`` of black vertices has more than ``Σ_A (q-1)`` white neighbours."""
    nb = len(neighbors)
    for r in range(1, nb):
        for subset in itertools.combinations(range(nb), r):
            whites = frozenset().union(*(neighbors[b] for b in subset))
            if len(whites) <= sum(q[b] - 1 for b in subset):
                return False
    return True


def _counts_for_chunk(s0_list: Sequence[PairPartition], s1, s2, marriage: bool) -> Counter:
    out: Counter = Counter()
    for s0 in s0_list:
        g = triplet_graph(s0, s1, s2)
        if not g.is_connected():
            continue
        nbrs = [frozenset(ws) for ws in g.neighbors_of_black()]
        nb, nw = len(g.black), len(g.white)
        # (b), (c), (d) force Σ (q - 1) = #white
        for excess in _compositions(nw, nb):
            q = [e + 1 for e in excess]
            if marriage and not marriage_condition(nbrs, q):
                continue
            out[s_vector(Counter(q))] += 1
    return out


def _add(a: Counter, b: Counter) -> Counter:
    a.update(b)
    return a


@lru_cache(maxsize=None)
def _kerov_counts(mu: Partition, marriage: bool = True, workers: int = 1) -> dict[SVector, int]:
    s1, s2 = canonical_couple(mu)
    counts = map_reduce(
        partial(_counts_for_chunk, s1=s1, s2=s2, marriage=marriage),
        enumerate_pair_partitions(mu.size),
        _add,
        Counter(),
        workers=workers,
    )
    return dict(counts)


def _check_capacity(mu: Partition, capacity: int = KEROV_CAPACITY):
    if not mu:
        raise ValueError("μ must be non-empty")
    if mu.size > capacity:
        raise CapacityError(f"|μ|={mu.size} exceeds the capacity {capacity}")


def kerov_count(
    mu: Iterable[int],
    s: Mapping[int, int] | SVector,
    marriage: bool = True,
    workers: int = 1,
) -> int:
    """Number of pairs ``(S0, q)`` for exponent vector ``s`` (``{i: s_i}``).

    Conditions: the triplet is transitive, ``S0`` has ``Σ s_i`` black loops
    and ``Σ (i-1) s_i`` white loops, ``q`` takes value ``i`` exactly ``s_i``
    times, and (unless ``marriage=False``) the strict marriage condition holds.
    """
    mu = Partition(mu)
    _check_capacity(mu)
    s = s_vector(s if isinstance(s, Mapping) else dict(s))
    return _kerov_counts(mu, marriage, workers).get(s, 0)


def kerov_polynomial_combinatorial(mu: Iterable[int], workers: int = 1) -> KerovPolynomial:
    """``K^{(2)}_μ`` with coefficient
    ``(-1)^{|μ|+ℓ(μ)+Σ i s_i} 2^{Σ i s_i - ℓ(μ)}`` times the count.

    For one-part μ this is the polynomial expressing ``Σ^{(2)}_{(k)}``; for
    several parts it is the connected (cumulant) version.
    """
    mu = Partition(mu)
    _check_capacity(mu)
    terms = {}
    for s, n in _kerov_counts(mu, True, workers).items():
        w = s_weight(s)
        sign = (-1) ** ((mu.size + mu.length + w) % 2)
        terms[s] = sign * Fraction(2) ** (w - mu.length) * n
    return KerovPolynomial(terms)


def symplectic_kerov(mu: Iterable[int], workers: int = 1) -> KerovPolynomial:
    """``K^{(1/2)}_μ``: each count divided by ``2^{|μ|}``."""
    mu = Partition(mu)
    _check_capacity(mu)
    poly = KerovPolynomial({
        s: Fraction(n, 2**mu.size) for s, n in _kerov_counts(mu, True, workers).items()
    })
    assert all(c >= 0 for c in poly.terms.values()), f"negative coefficient in {poly}"
    return poly


@dataclass
class IntegralityReport:
    mu: Partition
    polynomial: KerovPolynomial
    passed: bool
    witness: tuple | None = None  # (s-vector, coefficient, required power of 2)


def kerov_integrality_report(mu: Iterable[int]) -> IntegralityReport:
    """Integer coefficients, each divisible by ``2^{s_2 + 2 s_3 + 3 s_4 + ...}``."""
    mu = Partition(mu)
    poly = kerov_polynomial_combinatorial(mu)
    for s, c in poly.sorted_terms():
        power = sum((j - 1) * e for j, e in s)
        if c.denominator != 1 or c.numerator % 2**power:
            return IntegralityReport(mu, poly, False, (s, c, power))
    return IntegralityReport(mu, poly, True)


# ---------------------------------------------------------------------------
# symbolic oracle


def _cumulant_monomials(max_weight: int) -> list[SVector]:
    """Exponent vectors over ``R_2, R_3, ...`` of weight ``1..max_weight``."""
    out = []
    for w in range(2, max_weight + 1):
        for lam in partitions_of(w):
            if min(lam) >= 2:
                out.append(s_vector(Counter(lam)))
    return out


def _solve_exact(columns: list[dict], target: dict) -> list[Fraction] | None:
    """Unique solution of ``Σ c_j columns[j] = target``; ``None`` if rank deficient.

    Raises ``ArithmeticError`` when the system is inconsistent.
    """
    rows = sorted(set().union(target, *columns))
    n = len(columns)
    mat = [[col.get(r, Fraction(0)) for col in columns] + [target.get(r, Fraction(0))] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            return None
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in mat[r:]):
        raise ArithmeticError("the character is not a combination of cumulant monomials")
    return [mat[i][-1] for i in range(n)]


def kerov_oracle(k: int, max_retries: int = 2) -> KerovPolynomial:
    """``K^{(2)}_{(k)}`` by expressing ``Σ^{(2)}_{(k)}(p × q)`` in symbolic
    cumulants ``R_j^{(2)}(p × q)``, ``j = 2..k+1``.

    The coefficient vector is the unique exact solution over the basis of
    ``p, q`` monomials; ``m`` starts at ``k + 1`` and grows if the cumulant
    monomials are linearly dependent.
    """
    if not 1 <= k <= ORACLE_MAX_K:
        raise CapacityError(f"oracle supports 1 ≤ k ≤ {ORACLE_MAX_K}")
    basis = _cumulant_monomials(k + 1)
    for m in range(k + 1, k + 2 + max_retries):
        sigma = stanley_polynomial((k,), m)
        r = symbolic_free_cumulants(m, k + 1, 2)
        columns = []
        for s in basis:
            mono = PQPolynomial(m, {(): 1})
            for j, e in s:
                mono = mono * r[j - 1] ** e
            columns.append(mono.terms)
        solution = _solve_exact(columns, sigma.terms)
        if solution is None:
            continue
        poly = KerovPolynomial(dict(zip(basis, solution)))
        residual = sigma - _evaluate_symbolic(poly, r, m)
        assert residual.is_zero(), "non-zero residual after exact solve"
        return poly
    raise RankDeficiencyError(f"cumulant monomials stay dependent up to m={m} for k={k}")


def _evaluate_symbolic(poly: KerovPolynomial, r: Sequence[PQPolynomial], m: int) -> PQPolynomial:
    total = PQPolynomial(m)
    for s, c in poly.terms.items():
        mono = PQPolynomial(m, {(): c})
        for j, e in s:
            mono = mono * r[j - 1] ** e
        total = total + mono
    return total
