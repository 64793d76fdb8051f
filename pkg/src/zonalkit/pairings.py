"""Pair-partitions of ``[2k]`` and the structures built from them.

A pair-partition is a fixpoint-free involution of ``{1, ..., 2k}``. Two of
them, ``Sa`` and ``Sb``, define a bipartite 2-regular graph whose edges are
the labels; its connected components ("loops") have even lengths
``2ℓ_1 ≥ 2ℓ_2 ≥ ...`` and ``(ℓ_1, ℓ_2, ...)`` is the type of the couple.

All labels in the public API are 1-based.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

from .partitions import Partition, z_mu

DEFAULT_MAX_K = 8


class CapacityError(ValueError):
    """Raised when an enumeration would exceed its configured ceiling."""


@dataclass(frozen=True)
class PairPartition:
    """Fixpoint-free involution stored as its partner table.

    ``partner[i - 1]`` is the label paired with ``i``.
    """

    partner: tuple[int, ...]

    def __post_init__(self):
        n = len(self.partner)
        if n % 2:
            raise ValueError(f"odd ground set size {n}")
        for i, j in enumerate(self.partner, 1):
            if not 1 <= j <= n:
                raise ValueError(f"label {j} outside [1, {n}]")
            if j == i:
                raise ValueError(f"label {i} is paired with itself")
            if self.partner[j - 1] != i:
                raise ValueError(f"label {i} is not an involution point")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "PairPartition":
        pairs = [tuple(p) for p in pairs]
        labels = [x for p in pairs for x in p]
        for p in pairs:
            if len(p) != 2:
                raise ValueError(f"{p} is not a pair")
            if p[0] == p[1]:
                raise ValueError(f"label {p[0]} is paired with itself")
        seen = set()
        for x in labels:
            if x in seen:
                raise ValueError(f"label {x} appears twice")
            seen.add(x)
        n = len(labels)
        missing = sorted(set(range(1, n + 1)) - seen)
        if missing:
            raise ValueError(f"labels must be exactly 1..{n}; label {missing[0]} is missing")
        partner = [0] * n
        for a, b in pairs:
            partner[a - 1] = b
            partner[b - 1] = a
        return cls(tuple(partner))

    @property
    def k(self) -> int:
        return len(self.partner) // 2

    def __len__(self):
        return len(self.partner)

    def __call__(self, label: int) -> int:
        return self.partner[label - 1]

    def pairs(self) -> list[tuple[int, int]]:
        """Pairs ``(a, b)`` with ``a < b``, sorted by ``a``."""
        return [(i, j) for i, j in enumerate(self.partner, 1) if i < j]

    def to_json(self) -> str:
        return json.dumps([list(p) for p in self.pairs()])

    @classmethod
    def from_json(cls, text: str) -> "PairPartition":
        return cls.from_pairs(json.loads(text))

    def __str__(self):
        return "{" + ",".join("{%d,%d}" % p for p in self.pairs()) + "}"


def make_pair_partition(pairs: Iterable[Iterable[int]]) -> PairPartition:
    return PairPartition.from_pairs(pairs)


def first_pair_partition(k: int) -> PairPartition:
    """``{{1,2},{3,4},...,{2k-1,2k}}``."""
    if k < 1:
        raise ValueError("k must be positive")
    return PairPartition.from_pairs((2 * i + 1, 2 * i + 2) for i in range(k))


def matchings(labels: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """Perfect matchings of ``labels``: the first label is paired with each
    later one in turn, then the rest is matched recursively."""
    if not labels:
        yield []
        return
    first, rest = labels[0], labels[1:]
    for i, other in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for tail in matchings(remaining):
            yield [(first, other)] + tail


def enumerate_pair_partitions(k: int, max_k: int = DEFAULT_MAX_K) -> Iterator[PairPartition]:
    """Every pair-partition of ``[2k]`` once, in a fixed deterministic order."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > max_k:
        raise CapacityError(f"k={k} exceeds the enumeration ceiling {max_k}")
    n = 2 * k
    partner = [0] * n

    def rec(free):
        if not free:
            yield PairPartition(tuple(partner))
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            partner[a - 1], partner[b - 1] = b, a
            yield from rec(free[1:idx] + free[idx + 1:])

    yield from rec(list(range(1, n + 1)))


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


# ---------------------------------------------------------------------------
# loops of a couple


@dataclass(frozen=True)
class LoopStructure:
    loops: tuple[tuple[int, ...], ...]
    type: Partition
    sign: int

    def __len__(self):
        return len(self.loops)


def _check_sizes(*parts: PairPartition):
    if len({len(s) for s in parts}) != 1:
        raise ValueError("pair-partitions have different ground set sizes")


def trace_loops(sa: Sequence[int], sb: Sequence[int]) -> list[tuple[int, ...]]:
    """Loops of the couple given as 1-based partner tables.

    Each loop starts at its smallest label and applies ``sa`` first.
    """
    n = len(sa)
    seen = [False] * (n + 1)
    loops = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        loop = []
        x, use_a = start, True
        while True:
            loop.append(x)
            seen[x] = True
            x = sa[x - 1] if use_a else sb[x - 1]
            use_a = not use_a
            if x == start and use_a:
                break
        loops.append(tuple(loop))
    return loops


def loop_count(sa: Sequence[int], sb: Sequence[int]) -> int:
    """Number of loops of the couple (partner tables, 1-based labels)."""
    n = len(sa)
    seen = bytearray(n + 1)
    count = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = 1
            y = sa[x - 1]
            seen[y] = 1
            x = sb[y - 1]
    return count


def loop_type(sa: Sequence[int], sb: Sequence[int]) -> Partition:
    n = len(sa)
    seen = bytearray(n + 1)
    halves = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        x, length = start, 0
        while not seen[x]:
            seen[x] = 1
            y = sa[x - 1]
            seen[y] = 1
            x = sb[y - 1]
            length += 1
        halves.append(length)
    return Partition(halves)


def loop_structure(sa: PairPartition, sb: PairPartition) -> LoopStructure:
    _check_sizes(sa, sb)
    loops = trace_loops(sa.partner, sb.partner)
    kind = Partition(len(l) // 2 for l in loops)
    return LoopStructure(tuple(loops), kind, (-1) ** (sa.k - len(loops)))


def canonical_couple(mu: Iterable[int]) -> tuple[PairPartition, PairPartition]:
    """A couple ``(S1, S2)`` of type μ built block by block.

    On the block ``a+1, ..., a+2m`` of a part ``m``, ``S1`` pairs
    ``{a+1,a+2}, {a+3,a+4}, ...`` and ``S2`` pairs
    ``{a+2,a+3}, ..., {a+2m,a+1}``.
    """
    mu = Partition(mu)
    if not mu:
        raise ValueError("canonical couple of the empty partition")
    s1, s2 = [], []
    a = 0
    for m in mu:
        block = list(range(a + 1, a + 2 * m + 1))
        s1 += [(block[i], block[i + 1]) for i in range(0, 2 * m, 2)]
        s2 += [(block[i], block[(i + 1) % (2 * m)]) for i in range(1, 2 * m, 2)]
        a += 2 * m
    S1, S2 = PairPartition.from_pairs(s1), PairPartition.from_pairs(s2)
    assert loop_type(S1.partner, S2.partner) == mu
    return S1, S2


def couples_of_type_count(mu: Iterable[int]) -> int:
    """Number of couples of pair-partitions of ``[2n]`` having type μ."""
    mu = Partition(mu)
    return factorial(2 * mu.size) // (z_mu(mu) * 2 ** mu.length)


def apply_permutation(sigma: Sequence[int], s: PairPartition) -> PairPartition:
    """``σ·S``: ``{σ(i), σ(j)}`` is a pair iff ``{i, j}`` is a pair of ``S``.

    ``sigma[i - 1]`` is the image of ``i``.
    """
    if len(sigma) != len(s):
        raise ValueError("permutation and pair-partition sizes differ")
    if sorted(sigma) != list(range(1, len(s) + 1)):
        raise ValueError("sigma is not a permutation")
    partner = [0] * len(s)
    for i, j in enumerate(s.partner, 1):
        partner[sigma[i - 1] - 1] = sigma[j - 1]
    return PairPartition(tuple(partner))


def compose(sa: PairPartition, sb: PairPartition) -> tuple[int, ...]:
    """The permutation ``Sa ∘ Sb`` as an image table."""
    return tuple(sa(sb(i)) for i in range(1, len(sa) + 1))


def cycle_type(perm: Sequence[int]) -> Partition:
    seen = [False] * (len(perm) + 1)
    lengths = []
    for i in range(1, len(perm) + 1):
        n = 0
        while not seen[i]:
            seen[i] = True
            i = perm[i - 1]
            n += 1
        if n:
            lengths.append(n)
    return Partition(lengths)


# ---------------------------------------------------------------------------
# triplets


@dataclass(frozen=True)
class TripletGraph:
    """Bipartite graph of a triplet ``(S0, S1, S2)``.

    Black vertices are the loops of ``L(S0, S1)``, white vertices the loops
    of ``L(S0, S2)``; ``(b, w)`` is an edge when the loops share a label.
    """

    black: tuple[frozenset[int], ...]
    white: tuple[frozenset[int], ...]
    edges: frozenset[tuple[int, int]]

    def neighbors_of_black(self) -> list[list[int]]:
        out = [[] for _ in self.black]
        for b, w in sorted(self.edges):
            out[b].append(w)
        return out

    def is_connected(self) -> bool:
        nb, nw = len(self.black), len(self.white)
        if nb + nw == 0:
            return True
        adj = [[] for _ in range(nb + nw)]
        for b, w in self.edges:
            adj[b].append(nb + w)
            adj[nb + w].append(b)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == nb + nw


def _loop_label_sets(sa: Sequence[int], sb: Sequence[int]) -> list[frozenset[int]]:
    return [frozenset(l) for l in trace_loops(sa, sb)]


def triplet_graph(s0: PairPartition, s1: PairPartition, s2: PairPartition) -> TripletGraph:
    _check_sizes(s0, s1, s2)
    black = _loop_label_sets(s0.partner, s1.partner)
    white = _loop_label_sets(s0.partner, s2.partner)
    where_white = {}
    for w, labels in enumerate(white):
        for x in labels:
            where_white[x] = w
    edges = frozenset((b, where_white[x]) for b, labels in enumerate(black) for x in labels)
    return TripletGraph(tuple(black), tuple(white), edges)


def is_transitive_triplet(s0: PairPartition, s1: PairPartition, s2: PairPartition) -> bool:
    """True iff the involutions ``S0, S1, S2`` generate a transitive group."""
    return triplet_graph(s0, s1, s2).is_connected()


# ---------------------------------------------------------------------------
# orientations


RED, GREEN = 0, 1


@dataclass(frozen=True)
class Orientation:
    """A red/green colouring of the labels; ``color[i - 1]`` for label ``i``."""

    color: tuple[int, ...]

    def is_compatible(self, *pair_partitions: PairPartition) -> bool:
        return all(
            self.color[a - 1] != self.color[b - 1]
            for s in pair_partitions
            for a, b in s.pairs()
        )

    def act(self, sigma: Sequence[int]) -> "Orientation":
        """``σ·φ``: the label ``σ(i)`` receives the colour of ``i``."""
        color = [0] * len(self.color)
        for i, c in enumerate(self.color, 1):
            color[sigma[i - 1] - 1] = c
        return Orientation(tuple(color))


def compatible_orientations(s0: PairPartition, s1: PairPartition) -> list[Orientation]:
    """All orientations in which every pair of ``S0`` and of ``S1`` is bicoloured.

    Colours alternate along each loop of ``L(S0, S1)``, so there are
    ``2^{|L(S0,S1)|}`` of them.
    """
    _check_sizes(s0, s1)
    loops = trace_loops(s0.partner, s1.partner)
    out = []
    for starts in itertools.product((RED, GREEN), repeat=len(loops)):
        color = [0] * len(s0)
        for loop, c in zip(loops, starts):
            for pos, x in enumerate(loop):
                color[x - 1] = c ^ (pos & 1)
        out.append(Orientation(tuple(color)))
    return out


def axial_symmetries(s1: PairPartition, s2: PairPartition) -> list[tuple[int, ...]]:
    """One reflection per loop of ``L(S1, S2)``.

    Along a loop read as ``j_1, j_2 = S2(j_1), j_3 = S1(j_2), ...`` the
    reflection sends ``j_m`` to ``j_{2ℓ+1-m}`` and fixes everything else.
    """
    n = len(s1)
    gens = []
    for loop in trace_loops(s2.partner, s1.partner):
        perm = list(range(1, n + 1))
        length = len(loop)
        for m, x in enumerate(loop):
            perm[x - 1] = loop[length - 1 - m]
        gens.append(tuple(perm))
    return gens


def _group_from_commuting_involutions(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    n = len(gens[0]) if gens else 0
    elements = []
    for mask in itertools.product((0, 1), repeat=len(gens)):
        perm = list(range(1, n + 1))
        for use, g in zip(mask, gens):
            if use:
                perm = [g[x - 1] for x in perm]
        elements.append(tuple(perm))
    return elements


@dataclass(frozen=True)
class OrientationOrbit:
    representative: tuple[PairPartition, Orientation]
    members: tuple[tuple[PairPartition, Orientation], ...]
    black_loops: int  # |L(S0(Ω), S1)|
    sign: int  # (-1)^{L(S0(Ω), S1)}

    @property
    def s0(self) -> PairPartition:
        return self.representative[0]


def orientation_orbits(mu: Iterable[int], max_k: int = 6) -> list[OrientationOrbit]:
    """Orbits of compatible ``(S0, φ)`` under the group of loop reflections.

    The couple ``(S1, S2)`` is :func:`canonical_couple` (μ). The action is
    free, so every orbit has ``2^{ℓ(μ)}`` elements.
    """
    mu = Partition(mu)
    s1, s2 = canonical_couple(mu)
    group = _group_from_commuting_involutions(axial_symmetries(s1, s2))
    assert all(apply_permutation(g, s1) == s1 and apply_permutation(g, s2) == s2 for g in group)
    seen = set()
    orbits = []
    for s0 in enumerate_pair_partitions(mu.size, max_k=max_k):
        for phi in compatible_orientations(s0, s1):
            if (s0, phi) in seen:
                continue
            members = []
            for g in group:
                x = (apply_permutation(g, s0), phi.act(g))
                if x not in members:
                    members.append(x)
            assert len(members) == len(group), "group action is not free"
            seen.update(members)
            nb = loop_count(s0.partner, s1.partner)
            orbits.append(
                OrientationOrbit((s0, phi), tuple(members), nb, (-1) ** (mu.size - nb))
            )
    return orbits
