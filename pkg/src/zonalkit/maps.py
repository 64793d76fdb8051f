"""Surfaces glued from a triplet of pair-partitions.

``S1`` and ``S2`` describe ``ℓ(μ)`` polygons (the loops of ``L(S1, S2)``);
``S0`` glues their edges. Vertices come in two colours: loops of
``L(S0, S1)`` and loops of ``L(S0, S2)``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable

from .pairings import PairPartition, canonical_couple, loop_count, triplet_graph
from .partitions import Partition


@dataclass(frozen=True)
class MapStats:
    black: int
    white: int
    edges: int
    faces: int
    euler_characteristic: int
    connected: bool
    orientable: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _bicolourable(n: int, *pair_partitions: PairPartition) -> bool:
    """True iff labels can be coloured so that every pair is bicoloured."""
    adj = [[] for _ in range(n + 1)]
    for s in pair_partitions:
        for a, b in s.pairs():
            adj[a].append(b)
            adj[b].append(a)
    colour = [None] * (n + 1)
    for start in range(1, n + 1):
        if colour[start] is not None:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if colour[u] is None:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def map_stats(mu: Iterable[int], s0: PairPartition) -> MapStats:
    """Vertex, edge and face counts of the gluing of ``S0`` on the polygons of μ."""
    mu = Partition(mu)
    s1, s2 = canonical_couple(mu)
    if len(s0) != len(s1):
        raise ValueError(f"S0 acts on {len(s0)} labels, expected {len(s1)}")
    g = triplet_graph(s0, s1, s2)
    black, white = len(g.black), len(g.white)
    faces = loop_count(s1.partner, s2.partner)
    return MapStats(
        black=black,
        white=white,
        edges=mu.size,
        faces=faces,
        euler_characteristic=black + white - mu.size + faces,
        connected=g.is_connected(),
        orientable=_bicolourable(len(s0), s0, s1, s2),
    )
