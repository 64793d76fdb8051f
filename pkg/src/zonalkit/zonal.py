"""Zonal polynomials in the power-sum basis.

Two independent routes:

* :func:`zonal_polynomial` sums signed power sums over the admissible
  couples of pair-partitions of the tableau of shape ``2λ``;
* :func:`jack_oracle` runs Gram-Schmidt in the monomial basis for the
  ``α = 2`` scalar product ``<p_ρ, p_σ> = δ_ρσ z_ρ 2^{ℓ(ρ)}``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .pairings import CapacityError, loop_count, loop_type, matchings
from .partitions import Partition, dominates, partitions_of, tableau_2lambda, z_mu
from .poly import PSymmetricFunction

ZONAL_CAPACITY = 6
ORACLE_CAPACITY = 8


def row_preserving_pairings(rows) -> Iterable[tuple[int, ...]]:
    """Partner tables of pair-partitions matching labels within each row."""
    n = sum(len(r) for r in rows)
    for choice in itertools.product(*(list(matchings(list(r))) for r in rows)):
        partner = [0] * n
        for row_pairs in choice:
            for a, b in row_pairs:
                partner[a - 1], partner[b - 1] = b, a
        yield tuple(partner)


def column_transversal_pairings(columns) -> Iterable[tuple[int, ...]]:
    """Partner tables of pair-partitions pairing column ``2j-1`` with column ``2j``.

    These are exactly the ``S1`` for which ``S ∘ S1`` preserves every column.
    """
    n = sum(len(c) for c in columns)
    blocks = [(columns[j], columns[j + 1]) for j in range(0, len(columns), 2)]
    per_block = [
        [list(zip(left, perm)) for perm in itertools.permutations(right)]
        for left, right in blocks
    ]
    for choice in itertools.product(*per_block):
        partner = [0] * n
        for block_pairs in choice:
            for a, b in block_pairs:
                partner[a - 1], partner[b - 1] = b, a
        yield tuple(partner)


@lru_cache(maxsize=None)
def _zonal_terms(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    tab = tableau_2lambda(lam)
    s = tab.neighbor_pairing.partner
    n = lam.size
    s2_list = list(row_preserving_pairings(tab.rows))
    counts: Counter = Counter()
    for s1 in column_transversal_pairings(tab.columns):
        sign = -1 if (n - loop_count(s, s1)) % 2 else 1
        for s2 in s2_list:
            counts[loop_type(s1, s2)] += sign
    return tuple(sorted((rho, c) for rho, c in counts.items() if c))


def zonal_polynomial(lam: Iterable[int], capacity: int = ZONAL_CAPACITY) -> PSymmetricFunction:
    """``Z_λ = Σ (-1)^{L(S,S1)} p_{L(S1,S2)}`` over admissible couples.

    ``S2`` runs over pairings inside the rows of the tableau of ``2λ`` and
    ``S1`` over bijections between columns ``2j-1`` and ``2j``; neither
    set is obtained by filtering all pair-partitions.
    """
    lam = Partition(lam)
    if lam.size > capacity:
        raise CapacityError(f"|λ|={lam.size} exceeds the capacity {capacity}")
    if not lam:
        return PSymmetricFunction({(): 1})
    return PSymmetricFunction(dict(_zonal_terms(lam)))


# ---------------------------------------------------------------------------
# Gram-Schmidt oracle


def _power_sum_in_monomials(rho: Partition, n: int) -> dict[Partition, int]:
    """Coefficients of ``p_ρ`` in the monomial basis ``m_ν`` (ν ⊢ n).

    ``[m_ν] p_ρ`` counts the ways to distribute the parts of ρ into ``ℓ(ν)``
    labelled bins with bin ``j`` summing to ``ν_j``.
    """
    out = {}
    for nu in partitions_of(n):
        target = list(nu)

        def count(i, loads):
            if i == len(rho):
                return 1 if loads == target else 0
            total = 0
            for j in range(len(target)):
                if loads[j] + rho[i] <= target[j]:
                    loads[j] += rho[i]
                    total += count(i + 1, loads)
                    loads[j] -= rho[i]
            return total

        c = count(0, [0] * len(target))
        if c:
            out[nu] = c
    return out


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _jack_basis(n: int, alpha: Fraction) -> dict[Partition, dict[Partition, Fraction]]:
    parts = list(partitions_of(n))[::-1]  # (1^n) first: a linear extension of dominance
    index = {p: i for i, p in enumerate(parts)}
    size = len(parts)
    # p_to_m[ρ][ν] = [m_ν] p_ρ
    p_to_m = [[Fraction(0)] * size for _ in range(size)]
    for rho in parts:
        for nu, c in _power_sum_in_monomials(rho, n).items():
            p_to_m[index[rho]][index[nu]] = Fraction(c)
    # p_ρ = Σ_ν A[ρ][ν] m_ν  =>  m_ν = Σ_ρ (A^{-1})[ν][ρ] p_ρ
    m_to_p = _invert(p_to_m)
    norms = [Fraction(z_mu(rho)) * alpha ** len(rho) for rho in parts]

    def inner(u, v):
        return sum((a * b * w for a, b, w in zip(u, v, norms) if a and b), Fraction(0))

    basis: dict[Partition, list[Fraction]] = {}
    for lam in parts:
        vec = list(m_to_p[index[lam]])
        for mu, other in basis.items():
            coeff = inner(vec, other) / inner(other, other)
            if coeff:
                vec = [x - coeff * y for x, y in zip(vec, other)]
        basis[lam] = vec
    return {
        lam: {rho: c for rho, c in zip(parts, vec) if c} for lam, vec in basis.items()
    }


def jack_monomial_support(lam: Iterable[int], alpha=2) -> set[Partition]:
    """Monomials ``m_ν`` appearing in the Gram-Schmidt output for λ."""
    lam = Partition(lam)
    n = lam.size
    vec = _jack_basis(n, Fraction(alpha))[lam]
    parts = list(partitions_of(n))
    # rewrite p-expansion back in monomials
    out: dict[Partition, Fraction] = {}
    for rho, c in vec.items():
        for nu, d in _power_sum_in_monomials(rho, n).items():
            out[nu] = out.get(nu, Fraction(0)) + c * d
    return {nu for nu in parts if out.get(nu)}


def jack_oracle(lam: Iterable[int], capacity: int = ORACLE_CAPACITY, alpha=2) -> PSymmetricFunction:
    """``J^{(α)}_λ`` in the power-sum basis, by orthogonalisation.

    Gram-Schmidt on the monomial basis along a linear extension of dominance
    order gives the monic ``P_λ``; rescaling so that ``[p_1^n] = 1`` gives
    the ``J`` normalisation (equal to ``Z_λ`` for α = 2).
    """
    lam = Partition(lam)
    if lam.size > capacity:
        raise CapacityError(f"|λ|={lam.size} exceeds the oracle capacity {capacity}")
    n = lam.size
    if n == 0:
        return PSymmetricFunction({(): 1})
    vec = _jack_basis(n, Fraction(alpha))[lam]
    ones = Partition([1] * n)
    lead = vec[ones]
    return PSymmetricFunction({rho: c / lead for rho, c in vec.items()})


def theta_coefficient(lam: Iterable[int], rho: Iterable[int], alpha=2) -> Fraction:
    """``θ^{(α)}_ρ(λ)``, the coefficient of ``p_ρ`` in ``J^{(α)}_λ``, for α ∈ {2, 1/2}.

    The symplectic value comes from the duality
    ``θ^{(α)}_ρ(λ) = (-α)^{|ρ|-ℓ(ρ)} θ^{(1/α)}_ρ(λ')`` applied with α = 2.
    """
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"|λ|={lam.size} and |ρ|={rho.size} differ")
    alpha = Fraction(alpha)
    if alpha == 2:
        return zonal_polynomial(lam).coefficient(rho)
    if alpha == Fraction(1, 2):
        return zonal_polynomial(lam.conjugate()).coefficient(rho) / Fraction(-2) ** (
            rho.size - rho.length
        )
    raise ValueError("only α = 2 and α = 1/2 are supported")


def is_dominance_triangular(lam: Iterable[int]) -> bool:
    lam = Partition(lam)
    return all(dominates(lam, nu) for nu in jack_monomial_support(lam))
