"""Zonal characters through counts of constrained box placements.

For a triplet ``(S0, S1, S2)`` of pair-partitions the function
``N1(λ)`` counts maps from the pairs of ``S0`` to the boxes of λ sending
``S1``-partners to a common column and ``S2``-partners to a common row.
It only depends on the bipartite :class:`~zonalkit.pairings.TripletGraph`,
which turns it into a polynomial in Stanley coordinates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from math import comb
from typing import Iterable, Sequence

from ._parallel import map_reduce
from .pairings import (
    CapacityError,
    PairPartition,
    TripletGraph,
    canonical_couple,
    enumerate_pair_partitions,
    orientation_orbits,
    triplet_graph,
)
from .partitions import MultiRect, Partition, as_multirect, z_mu
from .poly import PQPolynomial, pq_substitute_negate_q
from .zonal import theta_coefficient

CHARACTER_CAPACITY = 5
ORBIT_CAPACITY = 4
BRUTE_FORCE_GUARD = 10**7


class IntegralityError(AssertionError):
    """A quantity proven to be an integer came out fractional."""


# ---------------------------------------------------------------------------
# N-functions

GraphKey = tuple[int, int, tuple[tuple[int, ...], ...]]


def graph_key(graph) -> GraphKey:
    """``(black count, white count, white neighbours of each black)``.

    Accepts a :class:`TripletGraph` or a ready-made key.
    """
    if isinstance(graph, TripletGraph):
        nbrs = tuple(tuple(ws) for ws in graph.neighbors_of_black())
        return len(graph.black), len(graph.white), nbrs
    nb, nw, nbrs = graph
    return nb, nw, tuple(tuple(sorted(set(ws))) for ws in nbrs)


def _n1_value(key: GraphKey, rect: MultiRect) -> Fraction:
    nb, nw, nbrs = key
    if nb + nw == 0:
        return Fraction(1)
    m = rect.rectangles
    if m == 0:
        return Fraction(0)
    p, q = rect.p, rect.q
    # ψ(b) = max φ over neighbours; an isolated black vertex may use any column
    total = Fraction(0)
    for phi in itertools.product(range(m), repeat=nw):
        term = Fraction(1)
        for w in phi:
            term *= p[w]
        for ws in nbrs:
            term *= q[max((phi[w] for w in ws), default=0)]
        total += term
    return total


@lru_cache(maxsize=None)
def _n1_poly_terms(key: GraphKey, m: int) -> dict:
    nb, nw, nbrs = key
    terms: dict = {}
    for phi in itertools.product(range(1, m + 1), repeat=nw):
        exps: dict = {}
        for w in phi:
            exps[("p", w)] = exps.get(("p", w), 0) + 1
        for ws in nbrs:
            v = ("q", max((phi[w] for w in ws), default=1))
            exps[v] = exps.get(v, 0) + 1
        mono = tuple(sorted(exps.items()))
        terms[mono] = terms.get(mono, 0) + 1
    return terms


def n1_graph(graph, diagram) -> Fraction:
    """``N1_G`` at a partition or :class:`MultiRect`.

    Sums ``∏_w p_{φ(w)} ∏_b q_{ψ(b)}`` over ``φ: white → rectangles`` where
    ``ψ(b)`` is the largest ``φ`` among the white neighbours of ``b``.
    """
    return _n1_value(graph_key(graph), as_multirect(diagram))


def n1_graph_polynomial(graph, m: int) -> PQPolynomial:
    """``N1_G(p × q)`` as a polynomial in ``m`` rectangle variables."""
    return PQPolynomial(m, _n1_poly_terms(graph_key(graph), m))


def _guard(base: int, k: int):
    if base**k > BRUTE_FORCE_GUARD:
        raise CapacityError(f"brute force would visit {base}^{k} maps")


def n1_bruteforce(s0: PairPartition, s1: PairPartition, s2: PairPartition, lam) -> int:
    """``N1`` by checking every map from the pairs of ``S0`` to the boxes of λ."""
    lam = Partition(lam)
    boxes = lam.boxes()
    pairs = s0.pairs()
    _guard(len(boxes), len(pairs))
    n = len(s0)
    checks = [(l, s1(l), s2(l)) for l in range(1, n + 1)]
    count = 0
    f = [None] * (n + 1)
    for choice in itertools.product(boxes, repeat=len(pairs)):
        for (a, b), box in zip(pairs, choice):
            f[a] = f[b] = box
        if all(f[l][1] == f[c][1] and f[l][0] == f[r][0] for l, c, r in checks):
            count += 1
    return count


def n2_bruteforce(s0: PairPartition, s1: PairPartition, s2: PairPartition, lam) -> int:
    """``N2``: maps ``[2k] → 2λ`` with ``S0``-partners horizontal neighbours,
    ``l`` and ``S0(S1(l))`` in one column and ``S2``-partners in one row."""
    lam = Partition(lam)
    boxes = lam.double().boxes()
    pairs = s0.pairs()
    _guard(len(boxes), len(pairs))
    n = len(s0)

    def neighbor(box):
        r, c = box
        return (r, c + 1) if c % 2 else (r, c - 1)

    checks = [(l, s0(s1(l)), s2(l)) for l in range(1, n + 1)]
    count = 0
    f = [None] * (n + 1)
    for choice in itertools.product(boxes, repeat=len(pairs)):
        for (a, b), box in zip(pairs, choice):
            f[a], f[b] = box, neighbor(box)
        if all(f[l][1] == f[c][1] and f[l][0] == f[r][0] for l, c, r in checks):
            count += 1
    return count


# ---------------------------------------------------------------------------
# zonal characters


@dataclass(frozen=True)
class _Term:
    black: int
    graph: GraphKey


def _terms_for_chunk(s0_list: Sequence[PairPartition], s1, s2) -> list[_Term]:
    out = []
    for s0 in s0_list:
        g = triplet_graph(s0, s1, s2)
        out.append(_Term(len(g.black), graph_key(g)))
    return out


def _concat(a, b):
    return a + b


@lru_cache(maxsize=None)
def _character_terms(mu: Partition, couple=None, workers: int = 1) -> tuple[tuple[GraphKey, Fraction], ...]:
    """Merged ``(graph, weight)`` list with weight ``(-1)^{k-|B|} 2^{|B|-ℓ(μ)}``."""
    s1, s2 = couple or canonical_couple(mu)
    k, ell = mu.size, mu.length
    terms = map_reduce(
        partial(_terms_for_chunk, s1=s1, s2=s2),
        enumerate_pair_partitions(k),
        _concat,
        [],
        workers=workers,
    )
    merged: dict[GraphKey, Fraction] = {}
    for t in terms:
        w = Fraction((-1) ** (k - t.black) * 2**t.black, 2**ell)
        merged[t.graph] = merged.get(t.graph, 0) + w
    return tuple((g, w) for g, w in merged.items() if w)


def _check_capacity(mu: Partition, capacity: int):
    if mu.size > capacity:
        raise CapacityError(f"|μ|={mu.size} exceeds the capacity {capacity}")


def zonal_character(
    mu: Iterable[int],
    lam,
    couple: tuple[PairPartition, PairPartition] | None = None,
    capacity: int = CHARACTER_CAPACITY,
    workers: int = 1,
) -> Fraction:
    """``Σ^{(2)}_μ(λ) = 2^{-ℓ(μ)} Σ_{S0} (-1)^{L(S0,S1)} 2^{|L(S0,S1)|} N1_{S0,S1,S2}(λ)``.

    ``lam`` may be a partition or a (possibly rational) :class:`MultiRect`.
    ``couple`` defaults to :func:`canonical_couple` (μ); any couple of
    type μ gives the same value.
    """
    mu = Partition(mu)
    if not mu:
        return Fraction(1)
    _check_capacity(mu, capacity)
    rect = as_multirect(lam)
    total = sum(
        (w * _n1_value(g, rect) for g, w in _character_terms(mu, couple, workers)),
        Fraction(0),
    )
    if rect.is_integral() and total.denominator != 1:
        raise IntegralityError(f"Σ^(2)_{tuple(mu)}({rect}) = {total} is not an integer")
    return total


def zonal_character_oracle(mu: Iterable[int], lam: Iterable[int]) -> Fraction:
    """``binom(n-k+m_1, m_1) z_μ θ^{(2)}_{μ 1^{n-k}}(λ)`` from the power-sum expansion."""
    mu, lam = Partition(mu), Partition(lam)
    n, k = lam.size, mu.size
    if k > n:
        raise ValueError(f"|μ|={k} exceeds |λ|={n}")
    m1 = mu.multiplicity(1)
    rho = mu.union([1] * (n - k))
    return comb(n - k + m1, m1) * z_mu(mu) * theta_coefficient(lam, rho, 2)


def zonal_character_orbit_formula(mu: Iterable[int], lam, capacity: int = ORBIT_CAPACITY) -> Fraction:
    """``Σ_Ω (-1)^{L(S0(Ω),S1)} N1_{S0(Ω),S1,S2}(λ)`` over orbits of oriented gluings."""
    mu = Partition(mu)
    if not mu:
        return Fraction(1)
    _check_capacity(mu, capacity)
    s1, s2 = canonical_couple(mu)
    rect = as_multirect(lam)
    total = Fraction(0)
    for orbit in orientation_orbits(mu):
        total += orbit.sign * n1_graph(triplet_graph(orbit.s0, s1, s2), rect)
    return total


def symplectic_character(mu: Iterable[int], lam: Iterable[int]) -> Fraction:
    """``Σ^{(1/2)}_μ(λ) = (-2)^{-(|μ|-ℓ(μ))} Σ^{(2)}_μ(λ')``."""
    mu, lam = Partition(mu), Partition(lam)
    return zonal_character(mu, lam.conjugate()) / Fraction(-2) ** (mu.size - mu.length)


# ---------------------------------------------------------------------------
# Stanley coordinates


def stanley_polynomial(mu: Iterable[int], m: int, capacity: int = CHARACTER_CAPACITY) -> PQPolynomial:
    """``Σ^{(2)}_μ(p × q)`` for diagrams made of at most ``m`` rectangles."""
    mu = Partition(mu)
    if m < 1:
        raise ValueError("need at least one rectangle")
    if not mu:
        return PQPolynomial(m, {(): 1})
    _check_capacity(mu, capacity)
    acc: dict = {}
    for g, w in _character_terms(mu):
        for mono, c in _n1_poly_terms(g, m).items():
            acc[mono] = acc.get(mono, 0) + w * c
    return PQPolynomial(m, acc)


@dataclass
class PositivityReport:
    mu: Partition
    polynomial: PQPolynomial  # (-1)^{|μ|} Σ^{(2)}_μ(p, -q)
    passed: bool
    witness: tuple | None = None  # first offending (monomial, coefficient)


def stanley_positivity_report(mu: Iterable[int], m: int | None = None) -> PositivityReport:
    """Check that ``(-1)^{|μ|} Σ^{(2)}_μ(p, -q)`` has non-negative integer coefficients."""
    mu = Partition(mu)
    m = m or max(mu.size, 1)
    poly = pq_substitute_negate_q(stanley_polynomial(mu, m)) * (-1) ** mu.size
    poly = PQPolynomial(m, poly.terms)
    for mono, c in poly.sorted_terms():
        if c < 0 or c.denominator != 1:
            return PositivityReport(mu, poly, False, (mono, c))
    return PositivityReport(mu, poly, True)
