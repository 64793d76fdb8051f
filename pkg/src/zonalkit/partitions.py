"""Integer partitions, Young diagrams and multirectangular coordinates.

Partitions are stored as weakly decreasing tuples of positive integers.
Diagrams described by Stanley's multirectangular coordinates ``p x q``
(``p_i`` rows of length ``q_i``) may carry rational entries, so that
stretched or dilated diagrams can be handled uniformly.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import TYPE_CHECKING, Iterable, Iterator

if TYPE_CHECKING:
    from .pairings import PairPartition


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Zero parts are dropped and the parts are sorted, so ``Partition([1, 0, 2])``
    is ``(2, 1)``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, sorted((x for x in parts if x), reverse=True))

    def __repr__(self):
        return f"Partition({list(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return sum(1 for x in self if x == i)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for x in self if x >= i) for i in range(1, self[0] + 1))

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(list(self) + list(other))

    def double(self) -> "Partition":
        """The diagram ``2λ`` with every row doubled in length."""
        return Partition(2 * x for x in self)

    def boxes(self) -> list[tuple[int, int]]:
        """Boxes as 1-based ``(row, column)`` pairs in row-major order."""
        return [(r, c) for r, row in enumerate(self, 1) for c in range(1, row + 1)]


def conjugate(lam: Iterable[int]) -> Partition:
    return Partition(lam).conjugate()


def z_mu(mu: Iterable[int]) -> int:
    """``z_μ = ∏ μ_i · ∏ m_i(μ)!``, the centralizer order of cycle type μ."""
    mu = Partition(mu)
    return prod(mu) * prod(factorial(m) for m in Counter(mu).values())


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


def dominates(a: Iterable[int], b: Iterable[int]) -> bool:
    """True when ``a`` dominates ``b`` (both of the same size)."""
    a, b = list(a), list(b)
    n = max(len(a), len(b))
    a += [0] * (n - len(a))
    b += [0] * (n - len(b))
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,1"``; the empty string gives the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    if any(x <= 0 for x in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return Partition(parts)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# multirectangular coordinates


@dataclass(frozen=True)
class MultiRect:
    """The generalized diagram ``p × q``: ``p[i]`` rows of length ``q[i]``.

    Instances are canonical: ``q`` strictly decreasing, all entries
    positive. Use :func:`multirect` to build one from arbitrary sequences.
    """

    p: tuple[Fraction, ...]
    q: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.p) != len(self.q):
            raise ValueError("p and q must have the same length")
        if any(x <= 0 for x in self.p) or any(x <= 0 for x in self.q):
            raise ValueError("multirectangular coordinates must be positive")
        if any(a <= b for a, b in zip(self.q, self.q[1:])):
            raise ValueError("q must be strictly decreasing")

    @property
    def size(self) -> Fraction:
        return sum((a * b for a, b in zip(self.p, self.q)), Fraction(0))

    @property
    def rectangles(self) -> int:
        return len(self.p)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.p + self.q)

    def to_partition(self) -> Partition:
        return multirect_compose(self)

    def __str__(self):
        fmt = lambda xs: ",".join(str(x) for x in xs)
        return f"p={fmt(self.p)};q={fmt(self.q)}"


def multirect(p: Iterable, q: Iterable) -> MultiRect:
    """Canonical :class:`MultiRect` from arbitrary sequences.

    Blocks are sorted by decreasing ``q``; blocks with equal ``q`` are
    merged by adding their ``p``; blocks with zero ``p`` or ``q`` vanish.
    """
    blocks: dict[Fraction, Fraction] = {}
    for a, b in zip(p, q, strict=True):
        a, b = Fraction(a), Fraction(b)
        if a < 0 or b < 0:
            raise ValueError("multirectangular coordinates must be non-negative")
        if a == 0 or b == 0:
            continue
        blocks[b] = blocks.get(b, Fraction(0)) + a
    qs = sorted(blocks, reverse=True)
    return MultiRect(tuple(blocks[x] for x in qs), tuple(qs))


def multirect_compose(m: MultiRect) -> Partition:
    if not m.is_integral():
        raise ValueError(f"{m} has non-integer entries")
    rows: list[int] = []
    for a, b in zip(m.p, m.q):
        rows.extend([int(b)] * int(a))
    return Partition(rows)


def multirect_of_partition(lam: Iterable[int]) -> MultiRect:
    lam = Partition(lam)
    counts = Counter(lam)
    return multirect([counts[x] for x in counts], list(counts))


def as_multirect(x) -> MultiRect:
    return x if isinstance(x, MultiRect) else multirect_of_partition(x)


def stretch(m: MultiRect, alpha) -> MultiRect:
    """``αλ``: row lengths multiplied by α, heights unchanged."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("stretch factor must be positive")
    return MultiRect(m.p, tuple(alpha * x for x in m.q))


def dilate(m: MultiRect, s) -> MultiRect:
    """``D_s λ``: the diagram scaled by ``s`` in both directions."""
    s = Fraction(s)
    if s <= 0:
        raise ValueError("dilation factor must be positive")
    return MultiRect(tuple(s * x for x in m.p), tuple(s * x for x in m.q))


def parse_multirect(text: str) -> MultiRect:
    """Parse ``"p=1,1;q=4,2"`` (entries may be ``num/den``)."""
    fields = {}
    for chunk in text.split(";"):
        key, _, value = chunk.partition("=")
        fields[key.strip()] = [parse_rational(v) for v in value.split(",") if v.strip()]
    if set(fields) != {"p", "q"}:
        raise ValueError(f"cannot parse multirectangular coordinates {text!r}")
    return multirect(fields["p"], fields["q"])


def parse_diagram(text: str):
    """A :class:`MultiRect` if ``text`` looks like ``p=..;q=..``, else a partition."""
    return parse_multirect(text) if "=" in text else parse_partition(text)


# ---------------------------------------------------------------------------
# the canonical tableau of 2λ


@dataclass(frozen=True)
class Tableau2Lambda:
    """The tableau of shape ``2λ`` numbered consecutively along rows."""

    shape: Partition
    row_of: tuple[int, ...]  # row_of[label - 1]
    col_of: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    columns: tuple[tuple[int, ...], ...]
    neighbor_pairing: "PairPartition"


def tableau_2lambda(lam: Iterable[int]) -> Tableau2Lambda:
    from .pairings import PairPartition

    lam = Partition(lam)
    if not lam:
        raise ValueError("tableau of the empty partition")
    shape = lam.double()
    row_of, col_of, rows = [], [], []
    label = 1
    for r, length in enumerate(shape, 1):
        rows.append(tuple(range(label, label + length)))
        for c in range(1, length + 1):
            row_of.append(r)
            col_of.append(c)
        label += length
    columns = tuple(
        tuple(row[c] for row in rows if len(row) > c) for c in range(shape[0])
    )
    # column 2i-1 is paired with column 2i within each row
    pairs = [(row[c], row[c + 1]) for row in rows for c in range(0, len(row), 2)]
    return Tableau2Lambda(
        shape=shape,
        row_of=tuple(row_of),
        col_of=tuple(col_of),
        rows=tuple(rows),
        columns=columns,
        neighbor_pairing=PairPartition.from_pairs(pairs),
    )
