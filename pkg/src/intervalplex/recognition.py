"""Existential recognizers: depth-first search over labelings, grid
search over interval systems, and the constructive maximal-clique
representation for graphs whose edge complex is under closed.

All searches are deterministic. Labeling searches assign labels to
vertices 1, 2, ... in order, trying candidate labels in ascending order
with incremental violation checks, so the first solution found is the
lexicographically least valid labeling. Every returned certificate is
re-validated through the plain predicates before being reported; a
mismatch raises ConsistencyError.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import ConsistencyError, GuardError, InputError
from .graphs import Graph, mask_to_graph
from .complexes import PureComplex, delta_complex
from . import predicates
from .predicates import (
    IntervalSystem,
    is_closed_graph,
    is_under_closed_local,
    pushed_down_tuples,
    validate_interval_representation,
)

LABELING_GUARD = 9
STRONG_GUARD = 5

STRONG_MODES = ("general", "unit", "proper")

GRAPH_CLASSES = (
    "under_closed",
    "unit_interval",
    "exchange",
    "strong_interval",
    "strong_unit",
    "strong_proper",
)


@dataclass(frozen=True)
class RecognitionResult:
    found: bool
    labeling: tuple | None = None
    representation: IntervalSystem | None = None
    nodes_explored: int = 0
    search_exhaustive: bool = True


# ---------------------------------------------------------------------------
# labeling search engine
#
# The checkers below receive the partial assignment (label_of[v] = label
# of vertex v or 0, vertex_of[lab] = vertex carrying lab or 0) after
# vertex `pos` was assigned. Vertices are assigned in order 1..n, so a
# facet is fully labeled exactly when its largest vertex is <= pos. A
# checker only tests obligations whose participating labels all have
# preimages already, which makes it sound on prefixes and equal to the
# full predicate at the leaves.


def _dfs_labeling(n: int, check: Callable) -> tuple[tuple | None, int]:
    label_of = [0] * (n + 1)
    vertex_of = [0] * (n + 1)
    nodes = 0

    def rec(v: int):
        nonlocal nodes
        if v > n:
            return tuple(label_of[1:])
        for lab in range(1, n + 1):
            if vertex_of[lab]:
                continue
            label_of[v] = lab
            vertex_of[lab] = v
            nodes += 1
            if check(label_of, vertex_of, v):
                found = rec(v + 1)
                if found is not None:
                    label_of[v] = 0
                    vertex_of[lab] = 0
                    return found
            label_of[v] = 0
            vertex_of[lab] = 0
        return None

    return rec(1), nodes


def _facets_by_completion(c: PureComplex) -> list:
    return sorted(c.facets, key=lambda f: (f[-1], f))


def _preimage_in(facet_set, labels: Iterable[int], vertex_of) -> bool:
    pre = sorted(vertex_of[lab] for lab in labels)
    return tuple(pre) in facet_set


def _make_under_closed_local_checker(c: PureComplex) -> Callable:
    facet_set = c.facets
    by_completion = _facets_by_completion(c)

    def check(label_of, vertex_of, pos):
        for f in by_completion:
            if f[-1] > pos:
                break
            labels = sorted(label_of[v] for v in f)
            members = set(labels)
            base = labels[:-1]
            for j in range(labels[0] + 1, labels[-1]):
                if j in members or not vertex_of[j]:
                    continue
                if not _preimage_in(facet_set, base + [j], vertex_of):
                    return False
        return True

    return check


def _make_under_closed_def_checker(c: PureComplex) -> Callable:
    facet_set = c.facets
    by_completion = _facets_by_completion(c)

    def check(label_of, vertex_of, pos):
        for f in by_completion:
            if f[-1] > pos:
                break
            labels = sorted(label_of[v] for v in f)
            for tup in pushed_down_tuples(labels):
                if all(vertex_of[lab] for lab in tup):
                    if not _preimage_in(facet_set, tup, vertex_of):
                        return False
        return True

    return check


def _make_unit_interval_checker(c: PureComplex) -> Callable:
    facet_set = c.facets
    by_completion = _facets_by_completion(c)
    r = c.d + 1

    def check(label_of, vertex_of, pos):
        for f in by_completion:
            if f[-1] > pos:
                break
            labels = sorted(label_of[v] for v in f)
            lo, hi = labels[0], labels[-1]
            if hi - lo + 1 == r:
                continue
            for tup in itertools.combinations(range(lo, hi + 1), r):
                if all(vertex_of[lab] for lab in tup):
                    if not _preimage_in(facet_set, tup, vertex_of):
                        return False
        return True

    return check


def _make_conditional_exchange_checker(c: PureComplex) -> Callable:
    facet_set = c.facets
    cofacet = c.cofacet_pairs
    by_completion = _facets_by_completion(c)

    def check(label_of, vertex_of, pos):
        for f in by_completion:
            if f[-1] > pos:
                break
            labels = sorted(label_of[v] for v in f)
            members = set(labels)
            for j in range(labels[0] + 1, labels[-1]):
                if j in members:
                    continue
                w = vertex_of[j]
                if not w:
                    continue
                for ik in labels:
                    u = vertex_of[ik]
                    pair = (u, w) if u < w else (w, u)
                    if pair not in cofacet:
                        continue
                    exchange = sorted(members - {ik} | {j})
                    if not _preimage_in(facet_set, exchange, vertex_of):
                        return False
        return True

    return check


def _labeling_recognizer(c: PureComplex, make_checker: Callable,
                         predicate: Callable, guard: int) -> RecognitionResult:
    if not isinstance(guard, int) or guard < 1:
        raise InputError(f"guard must be a positive integer, got {guard!r}")
    if c.n > guard:
        raise GuardError(
            f"labeling search is capped at n <= {guard}, got n = {c.n}", limit=guard)
    solution, nodes = _dfs_labeling(c.n, make_checker(c))
    if solution is None:
        return RecognitionResult(found=False, nodes_explored=nodes)
    if not predicate(c.relabel(solution)):
        raise ConsistencyError(
            f"labeling search returned {solution}, which fails revalidation")
    return RecognitionResult(found=True, labeling=solution, nodes_explored=nodes)


def find_under_closed_labeling(c: PureComplex, guard: int = LABELING_GUARD) -> RecognitionResult:
    return _labeling_recognizer(
        c, _make_under_closed_local_checker, predicates.is_under_closed_local, guard)


def find_unit_interval_labeling(c: PureComplex, guard: int = LABELING_GUARD) -> RecognitionResult:
    return _labeling_recognizer(
        c, _make_unit_interval_checker, predicates.is_unit_interval, guard)


def find_conditional_exchange_labeling(c: PureComplex, guard: int = LABELING_GUARD) -> RecognitionResult:
    return _labeling_recognizer(
        c, _make_conditional_exchange_checker, predicates.satisfies_conditional_exchange, guard)


def find_labeling_brute(c: PureComplex, predicate: Callable) -> tuple | None:
    """Plain permutation scan; first (lexicographically least) hit."""
    for perm in itertools.permutations(range(1, c.n + 1)):
        if predicate(c.relabel(perm)):
            return perm
    return None


def find_closed_graph_labeling(g: Graph, guard: int = LABELING_GUARD) -> RecognitionResult:
    """Least labeling under which the graph is closed, if one exists."""
    if g.n > guard:
        raise GuardError(
            f"labeling search is capped at n <= {guard}, got n = {g.n}", limit=guard)

    def check(label_of, vertex_of, pos):
        new = label_of[pos]
        assigned = [lab for lab in range(1, g.n + 1) if vertex_of[lab] and lab != new]
        for x, y in itertools.combinations(assigned, 2):
            a, b, cc = sorted((x, y, new))
            u, v, w = vertex_of[a], vertex_of[b], vertex_of[cc]
            ab, ac, bc = g.has_edge(u, v), g.has_edge(u, w), g.has_edge(v, w)
            if ab and ac and not bc:
                return False
            if ac and bc and not ab:
                return False
        return True

    solution, nodes = _dfs_labeling(g.n, check)
    if solution is None:
        return RecognitionResult(found=False, nodes_explored=nodes)
    if not is_closed_graph(g.relabel(solution)):
        raise ConsistencyError(
            f"labeling search returned {solution}, which fails revalidation")
    return RecognitionResult(found=True, labeling=solution, nodes_explored=nodes)


# ---------------------------------------------------------------------------
# strong interval representations
#
# A union of closed intervals is one interval exactly when the
# intersection graph of the family is connected, so C has a strong
# representation iff C agrees with the connected-subset complex of some
# graph H on the same vertices that is realizable by intervals of the
# requested kind. The search enumerates candidate graphs H by edge
# bitmask, matches facet sets through a per-(n, d) table, and realizes
# each match on an endpoint grid.
#
# For the general and proper modes the endpoints can be taken to be 2n
# distinct integers: ties in any closed-interval family can be broken by
# a small perturbation that preserves the intersection pattern, and for
# proper families the perturbation can keep all lengths equal, so no
# containment appears. The search therefore places endpoints injectively
# on 1..2n, which is complete for those modes. The unit grid (integer
# left endpoints in 0..2n^2, common length n) is a bounded heuristic; a
# failed unit search after at least one facet match is reported with
# search_exhaustive set to False.

_DELTA_TABLES: dict = {}
_REALIZATIONS: dict = {}


def _connected_subset_facets(g: Graph, d: int) -> frozenset:
    return frozenset(
        c for c in itertools.combinations(g.vertices, d + 1) if g.is_connected_subset(c)
    )


def _delta_match_table(n: int, d: int) -> dict:
    key = (n, d)
    if key not in _DELTA_TABLES:
        table: dict = {}
        for mask in range(1 << (n * (n - 1) // 2)):
            g = mask_to_graph(n, mask)
            table.setdefault(_connected_subset_facets(g, d), []).append(mask)
        _DELTA_TABLES[key] = table
    return _DELTA_TABLES[key]


def _intervals_intersect(a: tuple, b: tuple) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


def _realize_intervals(n: int, mask: int, mode: str) -> tuple[IntervalSystem | None, int]:
    """First interval family (grid DFS) whose intersection graph is the
    graph encoded by `mask`, or None."""
    key = (n, mask, mode)
    if key in _REALIZATIONS:
        return _REALIZATIONS[key]
    g = mask_to_graph(n, mask)
    nodes = 0
    chosen: list[tuple[int, int]] = []

    def consistent(v, interval):
        for u in range(1, v):
            other = chosen[u - 1]
            if _intervals_intersect(other, interval) != g.has_edge(u, v):
                return False
            if mode == "proper":
                lo, ro = other
                li, ri = interval
                if (lo < li and ri < ro) or (li < lo and ro < ri):
                    return False
        return True

    if mode == "unit":
        length = n
        grid = range(0, 2 * n * n + 1)

        def rec(v):
            nonlocal nodes
            if v > n:
                return True
            for left in grid:
                nodes += 1
                if consistent(v, (left, left + length)):
                    chosen.append((left, left + length))
                    if rec(v + 1):
                        return True
                    chosen.pop()
            return False
    else:
        free = [True] * (2 * n + 1)

        def rec(v):
            nonlocal nodes
            if v > n:
                return True
            for left in range(1, 2 * n):
                if not free[left]:
                    continue
                for right in range(left + 1, 2 * n + 1):
                    if not free[right]:
                        continue
                    nodes += 1
                    if consistent(v, (left, right)):
                        free[left] = free[right] = False
                        chosen.append((left, right))
                        if rec(v + 1):
                            return True
                        chosen.pop()
                        free[left] = free[right] = True
            return False

    system = None
    if rec(1):
        system = IntervalSystem(tuple((Fraction(l), Fraction(r)) for l, r in chosen))
    _REALIZATIONS[key] = (system, nodes)
    return system, nodes


def representation_sort_labeling(r: IntervalSystem) -> tuple:
    """Labels by ascending (left, right), ties broken by vertex."""
    order = sorted(range(1, len(r) + 1), key=lambda v: (r.intervals[v - 1], v))
    labeling = [0] * len(r)
    for rank, v in enumerate(order, start=1):
        labeling[v - 1] = rank
    return tuple(labeling)


def _trivial_disjoint_system(n: int) -> IntervalSystem:
    return IntervalSystem(tuple((Fraction(2 * v), Fraction(2 * v + 1)) for v in range(n)))


def find_strong_interval_representation(c: PureComplex, mode: str = "general",
                                        guard: int = STRONG_GUARD) -> RecognitionResult:
    if mode not in STRONG_MODES:
        raise InputError(f"mode must be one of {STRONG_MODES}, got {mode!r}")
    if not isinstance(guard, int) or guard < 1:
        raise InputError(f"guard must be a positive integer, got {guard!r}")
    if c.n > guard:
        raise GuardError(
            f"interval grid search is capped at n <= {guard}, got n = {c.n}", limit=guard)
    if c.d + 1 > c.n:
        # no (d+1)-subsets exist, so the biconditional is vacuous
        system = _trivial_disjoint_system(c.n)
        return RecognitionResult(found=True, labeling=representation_sort_labeling(system),
                                 representation=system)
    matches = _delta_match_table(c.n, c.d).get(c.facets, [])
    total_nodes = 0
    for mask in matches:
        system, nodes = _realize_intervals(c.n, mask, mode)
        total_nodes += nodes
        if system is None:
            continue
        if not validate_interval_representation(c, system):
            raise ConsistencyError(
                f"grid search realized graph mask {mask} but the system fails revalidation")
        if mode == "unit" and not system.unit:
            raise ConsistencyError("unit grid search returned unequal lengths")
        if mode == "proper" and not system.proper:
            raise ConsistencyError("proper grid search returned a proper containment")
        return RecognitionResult(found=True, labeling=representation_sort_labeling(system),
                                 representation=system, nodes_explored=total_nodes)
    exhaustive = mode != "unit" or not matches
    return RecognitionResult(found=False, nodes_explored=total_nodes,
                             search_exhaustive=exhaustive)


# ---------------------------------------------------------------------------
# constructive representation from the maximal-clique ordering

def build_clique_interval_representation(g: Graph) -> RecognitionResult:
    """Interval representation of a graph from its ordered maximal cliques.

    Requires the edge complex of g, as labeled, to pass the local under
    closed test. Cliques are sorted by (min, max); vertex v receives the
    interval [first clique index containing v, last clique index
    containing v]. Consecutiveness of clique membership and the edge
    biconditional are verified; a failure of either is a consistency
    error, never a plain False.
    """
    if g.n >= 2 and not is_under_closed_local(delta_complex(g, 1)):
        raise InputError(
            "the edge complex of g is not under closed with the given labels; "
            "obtain a labeling from find_under_closed_labeling first")
    cliques = sorted(g.maximal_cliques(), key=lambda c: (c[0], c[-1]))
    spans = {(c[0], c[-1]) for c in cliques}
    if len(spans) != len(cliques):
        raise ConsistencyError("two maximal cliques share their minimum and maximum")
    first = {}
    last = {}
    for idx, clique in enumerate(cliques, start=1):
        for v in clique:
            first.setdefault(v, idx)
            last[v] = idx
    for v in g.vertices:
        for idx in range(first[v], last[v] + 1):
            if v not in cliques[idx - 1]:
                raise ConsistencyError(
                    f"clique membership of vertex {v} is not consecutive")
    for u, v in itertools.combinations(g.vertices, 2):
        overlap = first[u] <= last[v] and first[v] <= last[u]
        if overlap != g.has_edge(u, v):
            raise ConsistencyError(
                f"clique intervals disagree with adjacency on ({u}, {v})")
    system = IntervalSystem(tuple(
        (Fraction(first[v]), Fraction(last[v])) for v in g.vertices))
    return RecognitionResult(found=True, labeling=tuple(range(1, g.n + 1)),
                             representation=system)


# ---------------------------------------------------------------------------
# graph-class recognition with component composition

_LABELING_CLASSES = {
    "under_closed": (find_under_closed_labeling, predicates.is_under_closed_local),
    "unit_interval": (find_unit_interval_labeling, predicates.is_unit_interval),
    "exchange": (find_conditional_exchange_labeling, predicates.satisfies_conditional_exchange),
}

_STRONG_CLASSES = {
    "strong_interval": "general",
    "strong_unit": "unit",
    "strong_proper": "proper",
}


def _recognize_component(g: Graph, d: int, cls: str,
                         labeling_guard: int, strong_guard: int) -> RecognitionResult:
    if g.n < d + 1:
        if cls in _LABELING_CLASSES:
            return RecognitionResult(found=True, labeling=tuple(range(1, g.n + 1)))
        system = _trivial_disjoint_system(g.n)
        return RecognitionResult(found=True,
                                 labeling=representation_sort_labeling(system),
                                 representation=system)
    c = delta_complex(g, d)
    if cls in _LABELING_CLASSES:
        finder, _ = _LABELING_CLASSES[cls]
        return finder(c, guard=labeling_guard)
    return find_strong_interval_representation(c, _STRONG_CLASSES[cls], guard=strong_guard)


def _compose_labelings(parts: Sequence[tuple], results: Sequence[RecognitionResult],
                       n: int) -> tuple:
    labeling = [0] * n
    offset = 0
    for verts, res in zip(parts, results):
        for local, orig in enumerate(verts, start=1):
            labeling[orig - 1] = offset + res.labeling[local - 1]
        offset += len(verts)
    return tuple(labeling)


def _compose_representations(parts: Sequence[tuple], results: Sequence[RecognitionResult],
                             n: int, mode: str) -> IntervalSystem:
    systems = []
    for res in results:
        system = res.representation
        if mode == "unit":
            lengths = {r - l for l, r in system.intervals}
            length = lengths.pop() if lengths else Fraction(1)
            if length != 1:
                system = system.scale(Fraction(1, length) if length else 1)
        systems.append(system)
    intervals: list = [None] * n
    base = Fraction(0)
    for verts, system in zip(parts, systems):
        low = min(l for l, _ in system.intervals)
        high = max(r for _, r in system.intervals)
        for local, orig in enumerate(verts, start=1):
            l, r = system.intervals[local - 1]
            intervals[orig - 1] = (l - low + base, r - low + base)
        base += high - low + 1
    return IntervalSystem(tuple(intervals))


def recognize_graph_class(g: Graph, d: int, cls: str,
                          labeling_guard: int = LABELING_GUARD,
                          strong_guard: int = STRONG_GUARD) -> RecognitionResult:
    """Build the connected-subset complex of g at dimension d and decide
    membership in the requested class, searching each connected
    component independently and composing the certificates."""
    if cls not in GRAPH_CLASSES:
        raise InputError(f"class must be one of {GRAPH_CLASSES}, got {cls!r}")
    if not isinstance(d, int) or d < 1:
        raise InputError(f"d must be a positive integer, got {d!r}")
    if d + 1 > g.n:
        raise InputError(f"facet size d+1 = {d + 1} exceeds the vertex count {g.n}")

    components = g.connected_components()
    parts = []
    results = []
    for verts in components:
        sub, _ = g.induced_subgraph(verts)
        parts.append(verts)
        results.append(_recognize_component(sub, d, cls, labeling_guard, strong_guard))

    nodes = sum(res.nodes_explored for res in results)
    misses = [res for res in results if not res.found]
    if misses:
        exhaustive = any(res.search_exhaustive for res in misses)
        return RecognitionResult(found=False, nodes_explored=nodes,
                                 search_exhaustive=exhaustive)

    whole = delta_complex(g, d)
    if cls in _LABELING_CLASSES:
        labeling = _compose_labelings(parts, results, g.n)
        _, predicate = _LABELING_CLASSES[cls]
        if not predicate(whole.relabel(labeling)):
            raise ConsistencyError(
                f"component labelings composed to {labeling}, which fails revalidation")
        return RecognitionResult(found=True, labeling=labeling, nodes_explored=nodes)

    mode = _STRONG_CLASSES[cls]
    system = _compose_representations(parts, results, g.n, mode)
    if not validate_interval_representation(whole, system):
        raise ConsistencyError("component representations composed to an invalid system")
    if mode == "unit" and not system.unit:
        raise ConsistencyError("composed representation lost the unit property")
    if mode == "proper" and not system.proper:
        raise ConsistencyError("composed representation lost the proper property")
    return RecognitionResult(found=True, labeling=representation_sort_labeling(system),
                             representation=system, nodes_explored=nodes)
