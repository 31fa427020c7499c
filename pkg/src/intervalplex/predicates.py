"""Per-labeling predicates on pure complexes and labeled graphs.

Every predicate reads its complex as already carrying the candidate
labeling; apply PureComplex.relabel first when testing another one.
Each predicate comes as a `*_violations` iterator (first item = first
violation, used for CLI diagnostics) plus a boolean wrapper.

Terminology used throughout: for a facet F with sorted labels
i_1 < ... < i_{d+1}, the span of F is the integer interval
[i_1, i_{d+1}], and an in-span outsider is a label j in the span with
j not in F. The exchange of F at position k by j is F - {i_k} + {j}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InputError
from .complexes import PureComplex
from .graphs import Graph


def _first_is_none(it: Iterator) -> bool:
    return next(it, None) is None


def pushed_down_tuples(facet: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Strictly increasing tuples (j_1..j_r) with j_1 = i_1, j_k <= i_k."""
    facet = tuple(facet)

    def extend(prefix: list, k: int) -> Iterator[tuple[int, ...]]:
        if k == len(facet):
            yield tuple(prefix)
            return
        for j in range(prefix[-1] + 1, facet[k] + 1):
            prefix.append(j)
            yield from extend(prefix, k + 1)
            prefix.pop()

    yield from extend([facet[0]], 1)


def _in_span_outsiders(facet: tuple) -> Iterator[int]:
    members = set(facet)
    for j in range(facet[0] + 1, facet[-1]):
        if j not in members:
            yield j


# ---------------------------------------------------------------------------
# under closed, two forms

def under_closed_def_violations(c: PureComplex) -> Iterator[dict]:
    """Facets whose pushed-down tuples are not all facets."""
    facets = c.facets
    for f in sorted(facets):
        for tup in pushed_down_tuples(f):
            if tup not in facets:
                yield {"facet": f, "tuple": tup}


def is_under_closed_def(c: PureComplex) -> bool:
    return _first_is_none(under_closed_def_violations(c))


def under_closed_local_violations(c: PureComplex) -> Iterator[dict]:
    """Pairs (facet, in-span outsider j) with {i_1..i_d, j} not a facet."""
    facets = c.facets
    for f in sorted(facets):
        for j in _in_span_outsiders(f):
            swapped = tuple(sorted(f[:-1] + (j,)))
            if swapped not in facets:
                yield {"facet": f, "j": j, "tuple": swapped}


def is_under_closed_local(c: PureComplex) -> bool:
    return _first_is_none(under_closed_local_violations(c))


# ---------------------------------------------------------------------------
# unit interval and the exchange conditions

def unit_interval_violations(c: PureComplex) -> Iterator[dict]:
    """Facet spans whose (d+1)-subsets are not all facets."""
    facets = c.facets
    r = c.d + 1
    for f in sorted(facets):
        for tup in itertools.combinations(range(f[0], f[-1] + 1), r):
            if tup not in facets:
                yield {"facet": f, "tuple": tup}


def is_unit_interval(c: PureComplex) -> bool:
    return _first_is_none(unit_interval_violations(c))


def strict_exchange_violations(c: PureComplex) -> Iterator[dict]:
    """For every facet F and in-span outsider j, every position must
    both co-occur with j in some facet and admit the exchange."""
    facets = c.facets
    cofacet = c.cofacet_pairs
    for f in sorted(facets):
        fs = set(f)
        for j in _in_span_outsiders(f):
            for k, ik in enumerate(f, start=1):
                if (min(j, ik), max(j, ik)) not in cofacet:
                    yield {"facet": f, "j": j, "k": k, "reason": "no shared facet"}
                    continue
                exchange = tuple(sorted((fs - {ik}) | {j}))
                if exchange not in facets:
                    yield {"facet": f, "j": j, "k": k, "tuple": exchange}


def satisfies_strict_exchange(c: PureComplex) -> bool:
    return _first_is_none(strict_exchange_violations(c))


def witnessed_exchange_violations(c: PureComplex) -> Iterator[dict]:
    """For every facet F and in-span outsider j, some position must share
    a facet with j, and every such position must admit the exchange."""
    facets = c.facets
    cofacet = c.cofacet_pairs
    for f in sorted(facets):
        fs = set(f)
        for j in _in_span_outsiders(f):
            witnesses = [
                (k, ik) for k, ik in enumerate(f, start=1)
                if (min(j, ik), max(j, ik)) in cofacet
            ]
            if not witnesses:
                yield {"facet": f, "j": j, "reason": "no shared facet at any position"}
                continue
            for k, ik in witnesses:
                exchange = tuple(sorted((fs - {ik}) | {j}))
                if exchange not in facets:
                    yield {"facet": f, "j": j, "k": k, "tuple": exchange}


def satisfies_witnessed_exchange(c: PureComplex) -> bool:
    return _first_is_none(witnessed_exchange_violations(c))


def conditional_exchange_violations(c: PureComplex) -> Iterator[dict]:
    """Whenever an in-span outsider j shares a facet with position k of a
    facet F, the exchange of F at k by j must be a facet. No existence
    requirement: positions sharing no facet with j impose nothing."""
    facets = c.facets
    cofacet = c.cofacet_pairs
    for f in sorted(facets):
        fs = set(f)
        for j in _in_span_outsiders(f):
            for k, ik in enumerate(f, start=1):
                if (min(j, ik), max(j, ik)) not in cofacet:
                    continue
                exchange = tuple(sorted((fs - {ik}) | {j}))
                if exchange not in facets:
                    yield {"facet": f, "j": j, "k": k, "tuple": exchange}


def satisfies_conditional_exchange(c: PureComplex) -> bool:
    return _first_is_none(conditional_exchange_violations(c))


# ---------------------------------------------------------------------------
# chordal complexes and closed graphs

def chordal_complex_violations(c: PureComplex) -> Iterator[dict]:
    """Facet pairs sharing their maximum whose union misses a face."""
    facets = c.facets
    by_max: dict[int, list] = {}
    for f in facets:
        by_max.setdefault(f[-1], []).append(f)
    for top in sorted(by_max):
        group = sorted(by_max[top])
        for f, g in itertools.combinations(group, 2):
            union = sorted(set(f) | set(g))
            for tup in itertools.combinations(union, c.d + 1):
                if tup not in facets:
                    yield {"facets": (f, g), "tuple": tup}


def is_chordal_complex(c: PureComplex) -> bool:
    return _first_is_none(chordal_complex_violations(c))


def closed_graph_violations(g: Graph) -> Iterator[dict]:
    """Label triples breaking either closure condition.

    A labeled graph is closed when for all a < b < c: edges ab and ac
    force bc, and edges ac and bc force ab. Equivalently the lower and
    upper neighborhoods of every vertex are cliques.
    """
    for a, b, c in itertools.combinations(g.vertices, 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and not g.has_edge(b, c):
            yield {"triple": (a, b, c), "missing": (b, c)}
        if g.has_edge(a, c) and g.has_edge(b, c) and not g.has_edge(a, b):
            yield {"triple": (a, b, c), "missing": (a, b)}


def is_closed_graph(g: Graph) -> bool:
    return _first_is_none(closed_graph_violations(g))


# ---------------------------------------------------------------------------
# interval systems

def _to_fraction(value) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InputError(f"{value!r} is not a rational number") from None


@dataclass(frozen=True)
class IntervalSystem:
    """One closed rational interval per vertex; intervals[v-1] = (left, right)."""

    intervals: tuple

    def __post_init__(self):
        normalized = []
        for entry in self.intervals:
            try:
                left, right = entry
            except (TypeError, ValueError):
                raise InputError(f"interval {entry!r} is not an endpoint pair") from None
            left, right = _to_fraction(left), _to_fraction(right)
            if left > right:
                raise InputError(f"interval [{left}, {right}] has left > right")
            normalized.append((left, right))
        object.__setattr__(self, "intervals", tuple(normalized))

    def __len__(self) -> int:
        return len(self.intervals)

    def interval(self, v: int) -> tuple[Fraction, Fraction]:
        if not 1 <= v <= len(self.intervals):
            raise InputError(f"vertex {v} outside 1..{len(self.intervals)}")
        return self.intervals[v - 1]

    @cached_property
    def unit(self) -> bool:
        lengths = {right - left for left, right in self.intervals}
        return len(lengths) <= 1

    @cached_property
    def proper(self) -> bool:
        for (l1, r1), (l2, r2) in itertools.permutations(self.intervals, 2):
            if l2 <= l1 and r1 <= r2 and (l1, r1) != (l2, r2):
                return False
        return True

    def shift(self, offset) -> "IntervalSystem":
        off = _to_fraction(offset)
        return IntervalSystem(tuple((l + off, r + off) for l, r in self.intervals))

    def scale(self, factor) -> "IntervalSystem":
        fac = _to_fraction(factor)
        if fac <= 0:
            raise InputError(f"scale factor must be positive, got {factor!r}")
        return IntervalSystem(tuple((l * fac, r * fac) for l, r in self.intervals))


def representation_flags(r: IntervalSystem) -> dict:
    return {"unit": r.unit, "proper": r.proper}


def union_is_interval(intervals: Iterable[tuple[Fraction, Fraction]]) -> bool:
    """True iff the union of the closed intervals is one interval.

    Sort by left endpoint and sweep: the union stays connected exactly
    when each next left endpoint is at most the running right maximum
    (touching endpoints count, the intervals being closed).
    """
    ordered = sorted(intervals)
    if not ordered:
        raise InputError("union of no intervals is undefined")
    running_right = ordered[0][1]
    for left, right in ordered[1:]:
        if left > running_right:
            return False
        if right > running_right:
            running_right = right
    return True


def interval_representation_violations(c: PureComplex, r: IntervalSystem) -> Iterator[dict]:
    """(d+1)-subsets where facet membership and union-is-an-interval differ.

    The test is a biconditional over every (d+1)-subset of 1..n, not only
    over facets.
    """
    if len(r) != c.n:
        raise InputError(f"representation covers {len(r)} vertices, complex has {c.n}")
    facets = c.facets
    for subset in itertools.combinations(range(1, c.n + 1), c.d + 1):
        is_facet = subset in facets
        joined = union_is_interval(r.intervals[v - 1] for v in subset)
        if is_facet != joined:
            yield {"subset": subset, "facet": is_facet, "union_is_interval": joined}


def validate_interval_representation(c: PureComplex, r: IntervalSystem) -> bool:
    return _first_is_none(interval_representation_violations(c, r))


# ---------------------------------------------------------------------------
# registry used by the CLI `check` command

COMPLEX_PREDICATES = {
    "under-closed": (is_under_closed_local, under_closed_local_violations),
    "under-closed-def": (is_under_closed_def, under_closed_def_violations),
    "unit-interval": (is_unit_interval, unit_interval_violations),
    "exchange-strict": (satisfies_strict_exchange, strict_exchange_violations),
    "exchange-witnessed": (satisfies_witnessed_exchange, witnessed_exchange_violations),
    "exchange-conditional": (satisfies_conditional_exchange, conditional_exchange_violations),
    "chordal-complex": (is_chordal_complex, chordal_complex_violations),
}

GRAPH_PREDICATES = {
    "closed-graph": (is_closed_graph, closed_graph_violations),
}
