"""Transition measures and free cumulants of generalized Young diagrams.

Diagrams are read in Russian convention through their interlacing
coordinates. The transition measure puts mass on the local minima, its
moments come from the Cauchy transform ``∏(z - y_i) / ∏(z - x_j)``, and
free cumulants are read off by functional inversion.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .partitions import MultiRect, as_multirect, stretch
from .poly import PQPolynomial, Poly, series_functional_inverse, series_mul, series_reciprocal


@dataclass(frozen=True)
class InterlacingCoords:
    """Minima ``x_0 < ... < x_m`` and maxima ``y_1 < ... < y_m`` of the profile."""

    minima: tuple[Fraction, ...]
    maxima: tuple[Fraction, ...]

    def __post_init__(self):
        xs, ys = self.minima, self.maxima
        if len(xs) != len(ys) + 1:
            raise ValueError("need exactly one more minimum than maxima")
        merged = [xs[0]]
        for y, x in zip(ys, xs[1:]):
            merged += [y, x]
        if any(a >= b for a, b in zip(merged, merged[1:])):
            raise ValueError(f"coordinates do not interlace: {merged}")
        if sum(xs) != sum(ys):
            raise ValueError("diagram is not centred: Σx ≠ Σy")


@dataclass(frozen=True)
class TransitionMeasure:
    atoms: tuple[tuple[Fraction, Fraction], ...]  # (location, weight)

    def moment(self, n: int) -> Fraction:
        return sum((w * x**n for x, w in self.atoms), Fraction(0))

    def moments(self, n_max: int) -> list[Fraction]:
        return [self.moment(n) for n in range(1, n_max + 1)]


def interlacing_of_multirect(m: MultiRect) -> InterlacingCoords:
    """Contents of the outer and inner corners of ``p × q``."""
    heights = [Fraction(0)]
    for a in m.p:
        heights.append(heights[-1] + a)
    minima = [b - h for b, h in zip(m.q, heights)] + [-heights[-1]]
    maxima = [b - h for b, h in zip(m.q, heights[1:])]
    return InterlacingCoords(tuple(sorted(minima)), tuple(sorted(maxima)))


def transition_measure(c: InterlacingCoords) -> TransitionMeasure:
    """Atoms at the minima with weights ``∏(x_k - y_i) / ∏_{j≠k}(x_k - x_j)``."""
    atoms = []
    for k, xk in enumerate(c.minima):
        w = Fraction(1)
        for y in c.maxima:
            w *= xk - y
        for j, xj in enumerate(c.minima):
            if j != k:
                w /= xk - xj
        atoms.append((xk, w))
    tm = TransitionMeasure(tuple(atoms))
    assert all(w > 0 for _, w in atoms), f"non-positive weight in {atoms}"
    assert sum(w for _, w in atoms) == 1, "weights do not sum to 1"
    assert tm.moment(1) == 0, "transition measure is not centred"
    return tm


def free_cumulants(diagram, n_max: int) -> list[Fraction]:
    """``[R_1, ..., R_{n_max}]`` of a partition or :class:`MultiRect`."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    m = as_multirect(diagram)
    if m.rectangles == 0:
        return [Fraction(0)] * n_max
    tm = transition_measure(interlacing_of_multirect(m))
    r = series_functional_inverse(tm.moments(n_max), n_max)
    assert r[0] == 0
    return r


def anisotropic_cumulant(diagram, alpha, k: int) -> Fraction:
    """``R_k^{(α)}(λ) = α^{-k} R_k(αλ)``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    alpha = Fraction(alpha)
    m = as_multirect(diagram)
    if m.rectangles == 0:
        return Fraction(0)
    return free_cumulants(stretch(m, alpha), k)[k - 1] / alpha**k


def anisotropic_cumulants(diagram, alpha, n_max: int) -> list[Fraction]:
    """``[R_1^{(α)}, ..., R_{n_max}^{(α)}]``."""
    alpha = Fraction(alpha)
    m = as_multirect(diagram)
    if m.rectangles == 0:
        return [Fraction(0)] * n_max
    r = free_cumulants(stretch(m, alpha), n_max)
    return [x / alpha ** (i + 1) for i, x in enumerate(r)]


# ---------------------------------------------------------------------------
# symbolic cumulants in Stanley coordinates


def _linear_factor_series(roots: Sequence[Poly], order: int) -> list:
    """Coefficients of ``∏ (1 - r u)`` up to ``u^{order-1}``."""
    out: list = [Fraction(1)] + [0] * (order - 1)
    for r in roots:
        out = series_mul(out, [Fraction(1), -r], order)
    return out


@lru_cache(maxsize=None)
def symbolic_free_cumulants(m: int, n_max: int, alpha=1) -> tuple[PQPolynomial, ...]:
    """``R_1^{(α)}, ..., R_{n_max}^{(α)}`` of ``p × q`` as polynomials in ``p, q``.

    Valid on diagrams with ``q_1 > q_2 > ... > q_m`` (other rectangles may
    have height zero). The moment series is ``∏(1 - y u) / ∏(1 - x u)``.
    """
    alpha = Fraction(alpha)
    p = [PQPolynomial.p(i) for i in range(1, m + 1)]
    q = [PQPolynomial.q(i) * alpha for i in range(1, m + 1)]
    heights = [Poly()]
    for a in p:
        heights.append(heights[-1] + a)
    minima = [b - h for b, h in zip(q, heights)] + [-heights[-1]]
    maxima = [b - h for b, h in zip(q, heights[1:])]
    order = n_max + 1
    num = _linear_factor_series(maxima, order)
    den = series_reciprocal(_linear_factor_series(minima, order), order)
    moments = series_mul(num, den, order)[1:]
    r = series_functional_inverse(moments, n_max)
    return tuple(
        PQPolynomial(m, (x / alpha ** (i + 1)).terms if isinstance(x, Poly) else {(): x})
        for i, x in enumerate(r)
    )
