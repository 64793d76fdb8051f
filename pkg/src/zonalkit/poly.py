"""Exact rational polynomial arithmetic.

* :class:`PSymmetricFunction` - linear combinations of power sums ``p_ρ``.
* :class:`Poly` - sparse multivariate polynomials over ``Fraction``;
  :class:`PQPolynomial` specialises it to Stanley coordinates.
* :class:`KerovPolynomial` - polynomials in free cumulants ``R_2, R_3, ...``.
* truncated power series helpers and the free moment-cumulant inversion.

No floating point is used anywhere in this module.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .partitions import MultiRect, Partition


def fmt_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _coeff_text(c: Fraction, body: str, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if not body:
        mag = str(a)
    elif a == 1:
        mag = body
    else:
        mag = f"{a}*{body}"
    if first:
        return mag if sign == "+" else f"-{mag}"
    return f" {sign} {mag}"


def _join_terms(items: Iterable[tuple[str, Fraction]]) -> str:
    out = []
    for body, c in items:
        out.append(_coeff_text(c, body, not out))
    return "".join(out) if out else "0"


# ---------------------------------------------------------------------------
# power-sum basis


class PSymmetricFunction:
    """Exact linear combination ``Σ c_ρ p_ρ`` of power-sum symmetric functions."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None):
        self.terms: dict[Partition, Fraction] = {}
        for rho, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                rho = Partition(rho)
                self.terms[rho] = self.terms.get(rho, Fraction(0)) + c
        self.terms = {k: v for k, v in self.terms.items() if v}

    def coefficient(self, rho: Iterable[int]) -> Fraction:
        return self.terms.get(Partition(rho), Fraction(0))

    def __add__(self, other: "PSymmetricFunction") -> "PSymmetricFunction":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return PSymmetricFunction(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "PSymmetricFunction":
        return PSymmetricFunction({k: v * Fraction(c) for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, PSymmetricFunction) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: tuple(kv[0]))

    def __str__(self):
        return _join_terms(
            ("p[" + ",".join(map(str, rho)) + "]", c) for rho, c in self.sorted_terms()
        )

    __repr__ = __str__

    def to_dict(self) -> dict:
        return {
            "basis": "p",
            "terms": [{"mu": list(rho), "coeff": fmt_rational(c)} for rho, c in self.sorted_terms()],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "PSymmetricFunction":
        if data.get("basis") != "p":
            raise ValueError("only the power-sum basis is supported")
        return cls({tuple(t["mu"]): Fraction(t["coeff"]) for t in data["terms"]})

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def pfun_coefficient(f: PSymmetricFunction, rho: Iterable[int]) -> Fraction:
    return f.coefficient(rho)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials

Var = tuple[str, int]
Monomial = tuple[tuple[Var, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    """Sparse polynomial: ``{monomial: Fraction}`` with named indexed variables.

    A variable is a pair such as ``("p", 1)``; a monomial is a sorted tuple of
    ``(variable, exponent)`` pairs. Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        out: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                mono = tuple(sorted((v, e) for v, e in mono if e))
                out[mono] = out.get(mono, Fraction(0)) + c
        self.terms = {k: v for k, v in out.items() if v}

    def _like(self, terms: dict[Monomial, Fraction]):
        # terms are already canonical: skip re-normalisation
        obj = Poly.__new__(Poly)
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c) -> "Poly":
        return Poly({(): c})

    @classmethod
    def var(cls, name: str, index: int) -> "Poly":
        return Poly({(((name, index), 1),): 1})

    def _coerce(self, other) -> dict[Monomial, Fraction]:
        if isinstance(other, Poly):
            return other.terms
        c = Fraction(other)
        return {(): c} if c else {}

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in self._coerce(other).items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Fraction(other)
            if not c:
                return self._like({})
            return self._like({k: v * c for k, v in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = _mono_mul(ka, kb)
                s = out.get(k, 0) + va * vb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return self._like(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Fraction(c)
        return self._like({k: v / c for k, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self._like({(): Fraction(1)})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        try:
            return self.terms == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Mapping[Var, int] | Monomial) -> Fraction:
        items = mono.items() if isinstance(mono, Mapping) else mono
        key = tuple(sorted((v, e) for v, e in items if e))
        return self.terms.get(key, Fraction(0))

    def variables(self) -> set[Var]:
        return {v for mono in self.terms for v, _ in mono}

    def degree(self) -> int:
        return max((sum(e for _, e in mono) for mono in self.terms), default=-1)

    def evaluate(self, values: Mapping[Var, object] | Callable[[Var], object]):
        get = values if callable(values) else values.__getitem__
        total = Fraction(0)
        cache: dict[Var, object] = {}
        for mono, c in self.terms.items():
            term = c
            for v, e in mono:
                if v not in cache:
                    cache[v] = get(v)
                term = term * cache[v] ** e
            total = total + term
        return total

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __str__(self):
        def body(mono):
            parts = []
            for (name, i), e in mono:
                parts.append(f"{name}{i}" + (f"^{e}" if e > 1 else ""))
            return "*".join(parts)

        return _join_terms((body(m), c) for m, c in self.sorted_terms())

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Stanley coordinates


class PQPolynomial(Poly):
    """Polynomial in Stanley coordinates ``p_1..p_m, q_1..q_m``."""

    __slots__ = ("m",)

    def __init__(self, m: int, terms: Mapping[Monomial, object] | None = None):
        super().__init__(terms)
        self.m = m
        for (name, i) in self.variables():
            if name not in ("p", "q") or not 1 <= i <= m:
                raise ValueError(f"variable {name}{i} outside p1..p{m}, q1..q{m}")

    def _like(self, terms):
        obj = PQPolynomial.__new__(PQPolynomial)
        obj.terms = terms
        obj.m = self.m
        return obj

    @classmethod
    def from_poly(cls, m: int, poly: Poly) -> "PQPolynomial":
        return cls(m, poly.terms)

    @staticmethod
    def p(i: int) -> Poly:
        return Poly.var("p", i)

    @staticmethod
    def q(i: int) -> Poly:
        return Poly.var("q", i)

    def __eq__(self, other):
        return Poly.__eq__(self, other)

    __hash__ = Poly.__hash__

    def evaluate_at(self, rect: MultiRect) -> Fraction:
        """Value at a diagram; coordinates beyond its rectangles count as 0."""
        def value(v):
            name, i = v
            seq = rect.p if name == "p" else rect.q
            return seq[i - 1] if i <= len(seq) else Fraction(0)

        return self.evaluate(value)

    def with_vars(self, m: int) -> "PQPolynomial":
        """The same polynomial viewed in ``m`` rectangle variables (``m`` must cover it)."""
        return PQPolynomial(m, self.terms)

    def truncate(self, m: int) -> "PQPolynomial":
        """Set ``p_i = 0`` and drop every term mentioning index ``> m``."""
        keep = {
            mono: c for mono, c in self.terms.items()
            if all(i <= m for (_, i), _ in mono)
        }
        return PQPolynomial(m, keep)

    def to_dict(self) -> dict:
        return {
            "vars": self.m,
            "terms": [
                {"exp": {f"{n}{i}": e for (n, i), e in mono}, "coeff": fmt_rational(c)}
                for mono, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "PQPolynomial":
        terms = {}
        for t in data["terms"]:
            mono = []
            for name, e in t["exp"].items():
                match = re.fullmatch(r"([pq])(\d+)", name)
                if not match:
                    raise ValueError(f"bad variable name {name!r}")
                mono.append(((match.group(1), int(match.group(2))), int(e)))
            terms[tuple(sorted(mono))] = Fraction(t["coeff"])
        return cls(int(data["vars"]), terms)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def pq_substitute_negate_q(f: PQPolynomial) -> PQPolynomial:
    """``q_i ↦ -q_i`` for every ``i``."""
    def sign(mono):
        return -1 if sum(e for (n, _), e in mono if n == "q") % 2 else 1

    return PQPolynomial(f.m, {mono: sign(mono) * c for mono, c in f.terms.items()})


# ---------------------------------------------------------------------------
# Kerov polynomials

SVector = tuple[tuple[int, int], ...]


def s_vector(exponents: Mapping[int, int]) -> SVector:
    """Canonical sparse exponent vector ``((j, s_j), ...)`` over ``R_j``."""
    for j, e in exponents.items():
        if j < 2 or e < 0:
            raise ValueError(f"invalid exponent s_{j}={e}")
    return tuple(sorted((int(j), int(e)) for j, e in exponents.items() if e))


def s_weight(s: SVector) -> int:
    return sum(j * e for j, e in s)


class KerovPolynomial:
    """Polynomial in free cumulants: ``{s-vector: Fraction}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[SVector | Mapping[int, int], object] | None = None):
        out: dict[SVector, Fraction] = {}
        for s, c in (terms or {}).items():
            s = s_vector(s if isinstance(s, Mapping) else dict(s))
            c = Fraction(c)
            out[s] = out.get(s, Fraction(0)) + c
        self.terms = {k: v for k, v in out.items() if v}

    def coefficient(self, s: Mapping[int, int] | SVector) -> Fraction:
        return self.terms.get(s_vector(s if isinstance(s, Mapping) else dict(s)), Fraction(0))

    def evaluate(self, cumulants: Mapping[int, object]):
        """Value with ``R_j`` replaced by ``cumulants[j]``."""
        total = Fraction(0)
        for s, c in self.terms.items():
            term = c
            for j, e in s:
                term = term * cumulants[j] ** e
            total = total + term
        return total

    def scale(self, c) -> "KerovPolynomial":
        return KerovPolynomial({k: v * Fraction(c) for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, KerovPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[SVector, Fraction]]:
        def key(kv):
            s = dict(kv[0])
            top = max(s, default=0)
            return tuple(s.get(j, 0) for j in range(2, top + 1))

        return sorted(self.terms.items(), key=key)

    def __str__(self):
        def body(s):
            return "*".join(f"R{j}" + (f"^{e}" if e > 1 else "") for j, e in s)

        return _join_terms((body(s), c) for s, c in reversed(self.sorted_terms()))

    __repr__ = __str__

    def to_dict(self) -> dict:
        return {
            "terms": [
                {"s": {str(j): e for j, e in s}, "coeff": fmt_rational(c)}
                for s, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "KerovPolynomial":
        return cls({
            s_vector({int(j): int(e) for j, e in t["s"].items()}): Fraction(t["coeff"])
            for t in data["terms"]
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# ---------------------------------------------------------------------------
# truncated power series with coefficients in any commutative ring


def series_mul(a: Sequence, b: Sequence, order: int) -> list:
    """Product of two power series truncated to ``order`` coefficients."""
    out = [0] * order
    for i, x in enumerate(a[:order]):
        if not x:
            continue
        for j, y in enumerate(b[: order - i]):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def series_reciprocal(a: Sequence, order: int) -> list:
    """``1/a`` for a series with constant term 1."""
    if a[0] != 1:
        raise ValueError("series must have constant term 1")
    out = [Fraction(1)] + [0] * (order - 1)
    for n in range(1, order):
        acc = 0
        for i in range(1, min(n, len(a) - 1) + 1):
            if a[i]:
                acc = acc + a[i] * out[n - i]
        out[n] = -acc
    return out


class FormalSeries:
    """Laurent series ``1/z + Σ_{n≥1} c_n z^{-n-1}`` stored as ``[c_1, c_2, ...]``.

    For a probability measure the ``c_n`` are its moments and the series is
    its Cauchy transform.
    """

    __slots__ = ("coefficients", "leading")

    def __init__(self, coefficients: Sequence, leading=1):
        self.coefficients = list(coefficients)
        self.leading = leading

    def __len__(self):
        return len(self.coefficients)


def series_functional_inverse(g: FormalSeries | Sequence, n_max: int) -> list:
    """Free cumulants ``R_1..R_{n_max}`` from moments ``M_1..M_{n_max}``.

    ``K(z) = 1/z + Σ R_n z^{n-1}`` is the compositional inverse of
    ``G(z) = 1/z + Σ M_n z^{-n-1}``. Solved through the recursion
    ``M_n = Σ_{j≥1} R_j [u^{n-j}] M(u)^j`` with ``M(u) = Σ_{i≥0} M_i u^i``.
    Coefficients may be Fractions or any exact ring elements (e.g. :class:`Poly`).
    """
    if isinstance(g, FormalSeries):
        if g.leading != 1:
            raise ValueError("the 1/z term of the series must have coefficient 1")
        moments = g.coefficients
    else:
        moments = list(g)
    if len(moments) < n_max:
        raise ValueError(f"need {n_max} moments, got {len(moments)}")
    m_series = [Fraction(1)] + list(moments[:n_max])
    order = n_max + 1
    # powers[j] = M(u)^j truncated
    powers = [[Fraction(1)] + [0] * n_max]
    cumulants = []
    for n in range(1, n_max + 1):
        powers.append(series_mul(powers[-1], m_series, order))
        acc = 0
        for j in range(1, n):
            coef = powers[j][n - j]
            if coef:
                acc = acc + cumulants[j - 1] * coef
        # [u^0] M(u)^n = 1, so R_n enters with coefficient 1
        cumulants.append(m_series[n] - acc)
    return cumulants
