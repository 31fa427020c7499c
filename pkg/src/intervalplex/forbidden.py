"""Detectors for forbidden induced structures: long induced cycles,
d-claws, d-paws, and classical graph chordality.

All detectors scan deterministically (ascending sizes, lexicographic
subsets) and return the first witness found, or None.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InputError
from .graphs import Graph, bits_to_vertices, vertices_to_bits


@dataclass(frozen=True)
class PatternWitness:
    """A found pattern: its kind, vertex set, and for claws the three
    part vertex sets together with their common vertex."""

    kind: str
    vertices: tuple
    parts: tuple = ()
    center: int | None = None


def _induced_degrees(g: Graph, mask: int) -> list[int]:
    adj = g._adjacency
    return [(adj[v] & mask).bit_count() for v in bits_to_vertices(mask)]


def find_induced_cycle_geq(g: Graph, length: int) -> PatternWitness | None:
    """First vertex set inducing a chordless cycle of length >= `length`.

    A subset induces a cycle exactly when its induced subgraph is
    connected and 2-regular; subsets are scanned by ascending size, then
    lexicographically.
    """
    if not isinstance(length, int) or length < 3:
        raise InputError(f"cycle length threshold must be an integer >= 3, got {length!r}")
    for size in range(length, g.n + 1):
        for subset in itertools.combinations(g.vertices, size):
            mask = vertices_to_bits(subset, g.n)
            if all(deg == 2 for deg in _induced_degrees(g, mask)) \
                    and g._closure(mask & -mask, mask) == mask:
                return PatternWitness(kind="cycle", vertices=subset)
    return None


def is_chordal_graph(g: Graph) -> bool:
    """True iff every cycle longer than 3 has a chord."""
    return find_induced_cycle_geq(g, 4) is None


def find_d_claw(g: Graph, d: int) -> PatternWitness | None:
    """First induced d-claw: three connected parts, each with 2..d+1
    vertices and pairwise unions of at least d+1 vertices, meeting in a
    single common vertex through which every cross-part path passes.

    Because the union must be induced and the parts pairwise share only
    the center, each part is the induced subgraph on its own vertex set
    and no edge may join two parts outside the center. Centers are
    scanned in ascending order, parts by (size, vertex tuple).
    """
    if not isinstance(d, int) or d < 1:
        raise InputError(f"d must be a positive integer, got {d!r}")
    adj = g._adjacency
    for center in g.vertices:
        others = [v for v in g.vertices if v != center]
        parts = []
        for size in range(1, min(d, len(others)) + 1):
            for rest in itertools.combinations(others, size):
                part = tuple(sorted((center,) + rest))
                if g.is_connected_subset(part):
                    parts.append(part)
        for p1, p2, p3 in itertools.combinations(parts, 3):
            m1, m2, m3 = (vertices_to_bits(p, g.n) for p in (p1, p2, p3))
            cbit = 1 << (center - 1)
            if m1 & m2 != cbit or m1 & m3 != cbit or m2 & m3 != cbit:
                continue
            if min((m1 | m2).bit_count(), (m1 | m3).bit_count(),
                   (m2 | m3).bit_count()) < d + 1:
                continue
            crossing = False
            for ma, mb in ((m1, m2), (m1, m3), (m2, m3)):
                for v in bits_to_vertices(ma & ~cbit):
                    if adj[v] & mb & ~cbit:
                        crossing = True
                        break
                if crossing:
                    break
            if crossing:
                continue
            union = bits_to_vertices(m1 | m2 | m3)
            return PatternWitness(kind="claw", vertices=union,
                                  parts=(p1, p2, p3), center=center)
    return None


def find_d_paw(g: Graph, d: int) -> PatternWitness | None:
    """First (d+2)-subset inducing a connected subgraph with exactly
    three degree-1 vertices. There is no 1-paw, so d=1 returns None."""
    if not isinstance(d, int) or d < 1:
        raise InputError(f"d must be a positive integer, got {d!r}")
    if d == 1 or d + 2 > g.n:
        return None
    for subset in itertools.combinations(g.vertices, d + 2):
        mask = vertices_to_bits(subset, g.n)
        if g._closure(mask & -mask, mask) != mask:
            continue
        leaves = sum(1 for deg in _induced_degrees(g, mask) if deg == 1)
        if leaves == 3:
            return PatternWitness(kind="paw", vertices=subset)
    return None
