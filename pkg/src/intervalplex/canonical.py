"""Canonical forms for labeled graphs, by brute force over permutations.

The canonical form of a graph on 1..n is the minimum of its edge bitmask
over all n! vertex permutations (edge bits in the fixed (1,2),(1,3),...
pair order). Two graphs are isomorphic exactly when their canonical
masks agree. Everything here is desk scale: n <= 7 keeps the
permutation tables (n! x C(n,2)) small enough for vectorized scans.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import InputError
from .graphs import CANONICAL_GUARD, all_pairs

_PERM_TABLES: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _perm_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(sources, weights) for vectorized permutation of edge bitmasks.

    sources[p, t] is the bit index whose value lands in target bit t when
    permutation p is applied to the vertices; weights[t] = 2^t.
    """
    if n not in _PERM_TABLES:
        pairs = all_pairs(n)
        index = {pair: i for i, pair in enumerate(pairs)}
        perms = list(itertools.permutations(range(1, n + 1)))
        sources = np.empty((len(perms), len(pairs)), dtype=np.int64)
        for p, perm in enumerate(perms):
            inverse = [0] * (n + 1)
            for v, image in enumerate(perm, start=1):
                inverse[image] = v
            for t, (a, b) in enumerate(pairs):
                u, v = inverse[a], inverse[b]
                sources[p, t] = index[(u, v) if u < v else (v, u)]
        weights = (np.int64(1) << np.arange(len(pairs), dtype=np.int64))
        _PERM_TABLES[n] = (sources, weights)
    return _PERM_TABLES[n]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    if n > CANONICAL_GUARD:
        raise InputError(f"canonical forms are capped at n <= {CANONICAL_GUARD}")


def orbit_masks(n: int, mask: int) -> np.ndarray:
    """All edge bitmasks of graphs isomorphic to `mask` (with repeats)."""
    _check_n(n)
    sources, weights = _perm_tables(n)
    bits = (np.int64(mask) >> sources) & 1
    return bits @ weights


def canonical_edge_mask(n: int, mask: int) -> int:
    """Minimum edge bitmask over all vertex permutations."""
    if n == 1:
        _check_n(n)
        return 0
    return int(orbit_masks(n, mask).min())


def canonical_form(g) -> int:
    """Canonical edge mask of a Graph."""
    from .graphs import graph_to_mask

    return canonical_edge_mask(g.n, graph_to_mask(g))


def are_isomorphic(g, h) -> bool:
    if g.n != h.n:
        return False
    return canonical_form(g) == canonical_form(h)


def canonical_representatives(n: int) -> list[int]:
    """Ascending edge bitmasks, one per isomorphism class on 1..n.

    Scans masks in ascending order; the first unvisited mask is the
    minimum of its orbit, so the returned masks are exactly the
    canonical forms.
    """
    _check_n(n)
    if n == 1:
        return [0]
    m = n * (n - 1) // 2
    total = 1 << m
    visited = np.zeros(total, dtype=bool)
    sources, weights = _perm_tables(n)
    reps = []
    for mask in range(total):
        if visited[mask]:
            continue
        reps.append(mask)
        bits = (np.int64(mask) >> sources) & 1
        visited[bits @ weights] = True
    return reps
