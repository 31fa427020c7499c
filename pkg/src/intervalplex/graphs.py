"""Simple undirected graphs on the vertex set {1, ..., n}.

Vertices are contiguous integers starting at 1 and the labeling is part
of the data: relabeling a graph gives a different (if isomorphic) object.
Adjacency is kept as a frozenset of sorted edge pairs plus per-vertex
bitmasks (bit v-1 set when v is a neighbor), which makes connectivity
checks over vertex subsets cheap.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InputError

ENUMERATION_GUARD = 8
CANONICAL_GUARD = 7


def vertices_to_bits(vertices: Iterable[int], n: int) -> int:
    """Pack distinct vertices from 1..n into a bitmask (bit v-1 for v)."""
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or not 1 <= v <= n:
            raise InputError(f"vertex {v!r} outside 1..{n}")
        bit = 1 << (v - 1)
        if mask & bit:
            raise InputError(f"repeated vertex {v}")
        mask |= bit
    return mask


def bits_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def all_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in the fixed edge-bit order (1,2),(1,3),...,(n-1,n)."""
    return list(itertools.combinations(range(1, n + 1), 2))


def validate_labeling(labeling: Sequence[int], n: int) -> tuple[int, ...]:
    """Check that `labeling` is a bijection 1..n -> 1..n.

    Position v-1 holds the label assigned to vertex v.
    """
    perm = tuple(labeling)
    if len(perm) != n or sorted(perm) != list(range(1, n + 1)):
        raise InputError(f"labeling {labeling!r} is not a permutation of 1..{n}")
    return perm


@dataclass(frozen=True)
class Graph:
    """Simple graph; `edges` is a frozenset of (u, v) pairs with u < v."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        normalized = set()
        for e in self.edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise InputError(f"edge {e!r} is not a vertex pair") from None
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InputError(f"edge {{{u},{v}}} leaves the vertex range 1..{self.n}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _adjacency(self) -> tuple[int, ...]:
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        return tuple(adj)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 1 <= v <= self.n:
            raise InputError(f"vertex {v} outside 1..{self.n}")
        return bits_to_vertices(self._adjacency[v])

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise InputError(f"vertex {v} outside 1..{self.n}")
        return self._adjacency[v].bit_count()

    def _closure(self, seed: int, mask: int) -> int:
        """Vertices of `mask` reachable from the seed bits inside G[mask]."""
        adj = self._adjacency
        seen = seed & mask
        frontier = seen
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                grow |= adj[low.bit_length()]
            frontier = grow & mask & ~seen
            seen |= frontier
        return seen

    def is_connected_subset(self, subset: Iterable[int]) -> bool:
        """True iff the induced subgraph on `subset` is connected.

        A single vertex counts as connected; the empty set is rejected.
        """
        mask = vertices_to_bits(subset, self.n)
        if mask == 0:
            raise InputError("connectivity of the empty vertex set is undefined")
        return self._closure(mask & -mask, mask) == mask

    def is_d_independent(self, subset: Iterable[int], d: int) -> bool:
        """True iff every component of the induced subgraph has <= d vertices."""
        if not isinstance(d, int) or d < 1:
            raise InputError(f"d must be a positive integer, got {d!r}")
        mask = vertices_to_bits(subset, self.n)
        while mask:
            comp = self._closure(mask & -mask, mask)
            if comp.bit_count() > d:
                return False
            mask &= ~comp
        return True

    def connected_components(self) -> list[tuple[int, ...]]:
        """Components as sorted vertex tuples, ordered by smallest vertex."""
        comps = []
        mask = (1 << self.n) - 1
        while mask:
            comp = self._closure(mask & -mask, mask)
            comps.append(bits_to_vertices(comp))
            mask &= ~comp
        return comps

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        full = (1 << self.n) - 1
        return self._closure(1, full) == full

    def induced_edges(self, subset: Iterable[int]) -> frozenset:
        """Edges of G with both endpoints in `subset`, in original labels."""
        keep = set(bits_to_vertices(vertices_to_bits(subset, self.n)))
        return frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)

    def induced_subgraph(self, subset: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph re-indexed to 1..k, order preserving.

        Returns (graph, verts) where verts[i-1] is the original vertex
        carrying the new label i.
        """
        verts = bits_to_vertices(vertices_to_bits(subset, self.n))
        index = {v: i + 1 for i, v in enumerate(verts)}
        edges = frozenset(
            (index[u], index[v]) for (u, v) in self.edges if u in index and v in index
        )
        return Graph(len(verts), edges), verts

    def relabel(self, labeling: Sequence[int]) -> "Graph":
        """Rename vertex v to labeling[v-1] for every v."""
        perm = validate_labeling(labeling, self.n)
        edges = frozenset(
            (perm[u - 1], perm[v - 1]) if perm[u - 1] < perm[v - 1] else (perm[v - 1], perm[u - 1])
            for (u, v) in self.edges
        )
        return Graph(self.n, edges)

    def maximal_cliques(self) -> list[tuple[int, ...]]:
        """Inclusion-maximal cliques as sorted tuples, in lexicographic order.

        Pivoted recursive enumeration over bitmasks; isolated vertices come
        out as singleton cliques.
        """
        adj = self._adjacency
        found: list[int] = []

        def expand(r: int, p: int, x: int) -> None:
            if p == 0 and x == 0:
                found.append(r)
                return
            pux = p | x
            pivot, best = 0, -1
            m = pux
            while m:
                low = m & -m
                m ^= low
                cnt = (adj[low.bit_length()] & p).bit_count()
                if cnt > best:
                    pivot, best = low.bit_length(), cnt
            cand = p & ~adj[pivot]
            while cand:
                low = cand & -cand
                cand ^= low
                v = low.bit_length()
                expand(r | low, p & adj[v], x & adj[v])
                p &= ~low
                x |= low

        if self.n > 0:
            expand(0, (1 << self.n) - 1, 0)
        return sorted(bits_to_vertices(m) for m in found)


# ---------------------------------------------------------------------------
# edge-bitmask encoding (drives the enumeration order everywhere)

def graph_to_mask(g: Graph) -> int:
    pairs = all_pairs(g.n)
    index = {p: i for i, p in enumerate(pairs)}
    mask = 0
    for e in g.edges:
        mask |= 1 << index[e]
    return mask


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = all_pairs(n)
    if not 0 <= mask < (1 << len(pairs)):
        raise InputError(f"edge mask {mask} out of range for n={n}")
    edges = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
    return Graph(n, edges)


def enumerate_graphs(n: int, connected_only: bool = False,
                     canonical: bool = False) -> Iterator[Graph]:
    """All labeled graphs on 1..n in edge-bitmask ascending order.

    With `canonical=True` only one representative per isomorphism class is
    yielded (the one whose edge bitmask is minimal over all vertex
    permutations); this needs n <= 7, plain enumeration allows n <= 8.
    """
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    if n > ENUMERATION_GUARD:
        raise InputError(f"graph enumeration is capped at n <= {ENUMERATION_GUARD}")
    if canonical:
        if n > CANONICAL_GUARD:
            raise InputError(f"isomorphism-reduced enumeration is capped at n <= {CANONICAL_GUARD}")
        from .canonical import canonical_representatives

        for mask in canonical_representatives(n):
            g = mask_to_graph(n, mask)
            if connected_only and not g.is_connected():
                continue
            yield g
        return
    for mask in range(1 << (n * (n - 1) // 2)):
        g = mask_to_graph(n, mask)
        if connected_only and not g.is_connected():
            continue
        yield g


def _tree_from_pruefer(seq: Sequence[int], n: int) -> Graph:
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v) if leaf < v else (v, leaf))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w) if u < w else (w, u))
    return Graph(n, frozenset(edges))


def enumerate_trees(n: int, distinct: bool = False) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on 1..n via Pruefer sequences.

    With `distinct=True`, one tree per isomorphism class.
    """
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    if n > ENUMERATION_GUARD:
        raise InputError(f"tree enumeration is capped at n <= {ENUMERATION_GUARD}")
    if distinct and n > CANONICAL_GUARD:
        raise InputError(f"isomorphism-reduced enumeration is capped at n <= {CANONICAL_GUARD}")
    if n == 1:
        yield Graph(1)
        return
    seen = set()
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        tree = _tree_from_pruefer(seq, n)
        if distinct:
            from .canonical import canonical_edge_mask

            canon = canonical_edge_mask(n, graph_to_mask(tree))
            if canon in seen:
                continue
            seen.add(canon)
        yield tree


# ---------------------------------------------------------------------------
# small factories and shape tests

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(all_pairs(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    edges = {(i, i + 1) for i in range(1, n)} | {(1, n)}
    return Graph(n, frozenset(edges))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center labeled 1."""
    return Graph(leaves + 1, frozenset((1, v) for v in range(2, leaves + 2)))


def is_path_graph(g: Graph) -> bool:
    if g.n == 1:
        return g.edge_count == 0
    if not g.is_connected() or g.edge_count != g.n - 1:
        return False
    return all(g.degree(v) <= 2 for v in g.vertices)


def is_forest(g: Graph) -> bool:
    return g.edge_count + len(g.connected_components()) == g.n


def has_isolated_vertex(g: Graph) -> bool:
    return any(g.degree(v) == 0 for v in g.vertices)


# ---------------------------------------------------------------------------
# corona

def corona(g: Graph, attachments: Mapping[int, Graph],
           namespaces: Mapping[int, Sequence[int]] | None = None) -> tuple[Graph, dict]:
    """Corona of g with the family `attachments`.

    `attachments[x]` is a graph on its own vertex range 1..m for each
    vertex x of g; every vertex of g must have an entry (use empty graphs
    for vertices with nothing attached). `namespaces[x]`, when given,
    names the vertices of attachments[x] in the combined world (position
    i-1 names its vertex i); names must be pairwise distinct across the
    family and disjoint from g's vertices 1..n. When omitted, fresh names
    n+1, n+2, ... are assigned in (x, local vertex) order.

    The result is relabeled to a contiguous range 1..N: g's vertices keep
    their labels and attachment vertices follow in (x, local vertex)
    order. Returns (graph, mapping) where mapping sends every original
    name (g vertex or namespace name) to its new label.
    """
    if set(attachments) != set(g.vertices):
        raise InputError("attachments must be indexed by exactly the vertices of g")
    if namespaces is None:
        namespaces = {}
        fresh = g.n
        for x in g.vertices:
            size = attachments[x].n
            namespaces[x] = tuple(range(fresh + 1, fresh + size + 1))
            fresh += size
    if set(namespaces) != set(g.vertices):
        raise InputError("namespaces must be indexed by exactly the vertices of g")
    taken = set(g.vertices)
    for x in g.vertices:
        names = tuple(namespaces[x])
        if len(names) != attachments[x].n:
            raise InputError(f"namespace for vertex {x} must name {attachments[x].n} vertices")
        for name in names:
            if name in taken:
                raise InputError(f"vertex name {name} is used twice across the corona")
            taken.add(name)

    mapping: dict = {v: v for v in g.vertices}
    next_label = g.n
    for x in g.vertices:
        for name in namespaces[x]:
            next_label += 1
            mapping[name] = next_label

    edges = set(g.edges)
    for x in g.vertices:
        h = attachments[x]
        names = tuple(namespaces[x])
        for (u, v) in h.edges:
            a, b = mapping[names[u - 1]], mapping[names[v - 1]]
            edges.add((a, b) if a < b else (b, a))
        for name in names:
            w = mapping[name]
            edges.add((x, w) if x < w else (w, x))
    return Graph(next_label, frozenset(edges)), mapping


def corona_graphs(g: Graph, attachments: Mapping[int, Graph]) -> Graph:
    """Corona with automatic vertex naming; returns just the graph."""
    combined, _ = corona(g, attachments)
    return combined


# ---------------------------------------------------------------------------
# text format

def parse_graph(text: str) -> Graph:
    """Read the graph text format.

    Header line `n <count>`, then one `u v` line per edge with u < v.
    Blank lines and lines starting with `#` are ignored.
    """
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise InputError(f"line {lineno}: expected header 'n <count>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: vertex count {parts[1]!r} is not an integer") from None
            if n < 0:
                raise InputError(f"line {lineno}: vertex count must be nonnegative")
            continue
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected an edge 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: edge endpoints must be integers, got {line!r}") from None
        if not 1 <= u < v <= n:
            raise InputError(f"line {lineno}: edge must satisfy 1 <= u < v <= {n}, got {u} {v}")
        if (u, v) in edges:
            raise InputError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add((u, v))
    if n is None:
        raise InputError("missing header line 'n <count>'")
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
