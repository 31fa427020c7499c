"""The sorting operator on equal-degree squarefree monomials and the
sort-closure tests for face sets and independence complexes.

A squarefree monomial is identified with its support, a sorted tuple of
distinct variable indices. Sorting two supports merges them as a
multiset, sorts, and deals the result alternately into two new supports;
a set is sortable when it is closed under this operator at every face
cardinality.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import InputError
from .complexes import FaceSet, independence_face_sets
from .graphs import Graph


def _as_support(u) -> tuple[int, ...]:
    support = tuple(u)
    if any(b <= a for a, b in zip(support, support[1:])):
        raise InputError(f"support {support!r} must be strictly increasing")
    return support


def sort_pair(u: Sequence[int], v: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Merge, sort, and deal alternately into (odd positions, even positions).

    Both outputs are squarefree automatically: a value occurs at most
    twice in the merge and the alternation separates the copies.
    """
    u, v = _as_support(u), _as_support(v)
    if len(u) != len(v):
        raise InputError(f"sort_pair needs equal degrees, got {len(u)} and {len(v)}")
    merged = sorted(u + v)
    return tuple(merged[0::2]), tuple(merged[1::2])


def is_sortable_set(faces: Iterable[Sequence[int]], t: int | None = None) -> bool:
    """True iff the set is closed under the sorting operator.

    All members must share one degree (t when given). Checking unordered
    pairs suffices: the operator is symmetric in its arguments and fixes
    every pair (u, u).
    """
    members = {_as_support(f) for f in faces}
    degrees = {len(f) for f in members}
    if t is not None:
        degrees.add(t)
    if len(degrees) > 1:
        raise InputError(f"faces of mixed degrees {sorted(degrees)} are not sortable together")
    for u, v in itertools.combinations(members, 2):
        a, b = sort_pair(u, v)
        if a not in members or b not in members:
            return False
    return True


def is_sortable_complex(faces_by_t: Sequence[FaceSet]) -> bool:
    """True iff every listed cardinality is sort-closed.

    The list must cover the cardinalities 1..max without gaps (the face
    sets of a complex are hereditary, so a gap signals a broken input).
    """
    ts = sorted(fs.t for fs in faces_by_t)
    if ts != list(range(1, len(ts) + 1)):
        raise InputError(f"face cardinalities {ts} must cover 1..{len(ts)} without gaps")
    return all(is_sortable_set(fs.faces, fs.t) for fs in faces_by_t)


def independence_complex_sortable(g: Graph, d: int) -> bool:
    """Sort-closure of the d-independence complex of g, as labeled."""
    return is_sortable_complex(independence_face_sets(g, d))
