"""Pure simplicial complexes given by their facet sets, plus the two
graph-to-complex builders: the connected-subset complex (facets are the
(d+1)-subsets inducing connected subgraphs) and the d-independence
complex (faces are the sets whose induced components have at most d
vertices each).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError
from .graphs import Graph, validate_labeling


@dataclass(frozen=True)
class PureComplex:
    """Pure d-complex: every facet is a sorted (d+1)-tuple of 1..n."""

    n: int
    d: int
    facets: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        if not isinstance(self.d, int) or self.d < 0:
            raise InputError(f"dimension must be a nonnegative integer, got {self.d!r}")
        normalized = set()
        for f in self.facets:
            facet = tuple(sorted(f))
            if len(facet) != self.d + 1 or len(set(facet)) != self.d + 1:
                raise InputError(f"facet {tuple(f)!r} must have {self.d + 1} distinct vertices")
            if facet[0] < 1 or facet[-1] > self.n:
                raise InputError(f"facet {facet!r} leaves the vertex range 1..{self.n}")
            normalized.add(facet)
        object.__setattr__(self, "facets", frozenset(normalized))

    @classmethod
    def _unsafe(cls, n: int, d: int, facets: frozenset) -> "PureComplex":
        """Skip validation for facet sets built by trusted internal code."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "d", d)
        object.__setattr__(obj, "facets", facets)
        return obj

    @property
    def facet_count(self) -> int:
        return len(self.facets)

    def is_facet(self, vertices: Iterable[int]) -> bool:
        return tuple(sorted(vertices)) in self.facets

    @cached_property
    def covered_vertices(self) -> frozenset:
        return frozenset(v for f in self.facets for v in f)

    @cached_property
    def has_uncovered_vertices(self) -> bool:
        return len(self.covered_vertices) < self.n

    @cached_property
    def cofacet_pairs(self) -> frozenset:
        """Vertex pairs (u, v), u < v, that share at least one facet."""
        pairs = set()
        for f in self.facets:
            pairs.update(itertools.combinations(f, 2))
        return frozenset(pairs)

    def k_skeleton(self, k: int) -> "PureComplex":
        """Pure k-complex whose facets are all (k+1)-subsets of facets."""
        if not isinstance(k, int) or not 0 <= k <= self.d:
            raise InputError(f"skeleton index must lie in 0..{self.d}, got {k!r}")
        faces = set()
        for f in self.facets:
            faces.update(itertools.combinations(f, k + 1))
        return PureComplex._unsafe(self.n, k, frozenset(faces))

    def is_connected_complex(self) -> bool:
        """True iff facet-overlap walks join every pair of covered vertices.

        Vertices lying in no facet are ignored here; inspect
        `has_uncovered_vertices` to detect them.
        """
        if not self.facets:
            raise InputError("connectivity of a complex with no facets is undefined")
        facets = list(self.facets)
        masks = [sum(1 << (v - 1) for v in f) for f in facets]
        seen = masks[0]
        active = True
        pending = masks[1:]
        while active:
            active = False
            rest = []
            for m in pending:
                if m & seen:
                    seen |= m
                    active = True
                else:
                    rest.append(m)
            pending = rest
        return not pending

    def relabel(self, labeling: Sequence[int]) -> "PureComplex":
        """Rename vertex v to labeling[v-1] in every facet."""
        perm = validate_labeling(labeling, self.n)
        facets = frozenset(tuple(sorted(perm[v - 1] for v in f)) for f in self.facets)
        return PureComplex._unsafe(self.n, self.d, facets)


@dataclass(frozen=True)
class FaceSet:
    """All faces of one cardinality t, as sorted t-tuples."""

    t: int
    faces: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.t, int) or self.t < 0:
            raise InputError(f"face cardinality must be a nonnegative integer, got {self.t!r}")
        normalized = set()
        for f in self.faces:
            face = tuple(sorted(f))
            if len(face) != self.t or len(set(face)) != self.t:
                raise InputError(f"face {tuple(f)!r} must have {self.t} distinct vertices")
            normalized.add(face)
        object.__setattr__(self, "faces", frozenset(normalized))


# ---------------------------------------------------------------------------
# builders

def delta_complex(g: Graph, d: int) -> PureComplex:
    """Facets are the (d+1)-subsets of V(g) inducing connected subgraphs."""
    if not isinstance(d, int) or d < 1:
        raise InputError(f"d must be a positive integer, got {d!r}")
    if d + 1 > g.n:
        raise InputError(f"facet size d+1 = {d + 1} exceeds the vertex count {g.n}")
    facets = frozenset(
        c for c in itertools.combinations(g.vertices, d + 1) if g.is_connected_subset(c)
    )
    return PureComplex._unsafe(g.n, d, facets)


def independence_faces(g: Graph, d: int, t: int) -> FaceSet:
    """All t-subsets of V(g) that are d-independent."""
    if not isinstance(d, int) or d < 1:
        raise InputError(f"d must be a positive integer, got {d!r}")
    if not isinstance(t, int) or not 0 <= t <= g.n:
        raise InputError(f"face cardinality must lie in 0..{g.n}, got {t!r}")
    faces = frozenset(
        c for c in itertools.combinations(g.vertices, t) if g.is_d_independent(c, d)
    )
    return FaceSet(t, faces)


def independence_facets(g: Graph, d: int) -> list[tuple[int, ...]]:
    """Inclusion-maximal d-independent sets, sorted by (size, vertices)."""
    if not isinstance(d, int) or d < 1:
        raise InputError(f"d must be a positive integer, got {d!r}")
    independent = [
        c for size in range(g.n + 1)
        for c in itertools.combinations(g.vertices, size)
        if g.is_d_independent(c, d)
    ]
    facets = []
    for c in independent:
        members = set(c)
        extendable = any(
            g.is_d_independent(c + (v,), d) for v in g.vertices if v not in members
        )
        if not extendable:
            facets.append(c)
    return sorted(facets, key=lambda f: (len(f), f))


def independence_face_sets(g: Graph, d: int) -> list[FaceSet]:
    """FaceSets for every cardinality 1..max over d-independent sets.

    d-independence is hereditary, so the listed cardinalities have no
    gaps; the list feeds the sortability checks directly.
    """
    sets = []
    for t in range(1, g.n + 1):
        fs = independence_faces(g, d, t)
        if not fs.faces:
            break
        sets.append(fs)
    return sets


# ---------------------------------------------------------------------------
# text format

def parse_complex(text: str) -> PureComplex:
    """Read the complex text format.

    Header line `n <count> d <dim>`, then one facet per line as d+1
    strictly increasing vertices. Blank lines and `#` comments are
    ignored.
    """
    n = d = None
    facets = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 4 or parts[0] != "n" or parts[2] != "d":
                raise InputError(f"line {lineno}: expected header 'n <count> d <dim>', got {line!r}")
            try:
                n, d = int(parts[1]), int(parts[3])
            except ValueError:
                raise InputError(f"line {lineno}: header values must be integers, got {line!r}") from None
            if n < 0 or d < 0:
                raise InputError(f"line {lineno}: header values must be nonnegative")
            continue
        try:
            vertices = tuple(int(p) for p in parts)
        except ValueError:
            raise InputError(f"line {lineno}: facet vertices must be integers, got {line!r}") from None
        if len(vertices) != d + 1:
            raise InputError(f"line {lineno}: facet must list {d + 1} vertices, got {len(vertices)}")
        if any(b <= a for a, b in zip(vertices, vertices[1:])):
            raise InputError(f"line {lineno}: facet vertices must be strictly increasing")
        if vertices[0] < 1 or vertices[-1] > n:
            raise InputError(f"line {lineno}: facet leaves the vertex range 1..{n}")
        if vertices in facets:
            raise InputError(f"line {lineno}: duplicate facet {line!r}")
        facets.add(vertices)
    if n is None:
        raise InputError("missing header line 'n <count> d <dim>'")
    return PureComplex(n, d, frozenset(facets))


def format_complex(c: PureComplex) -> str:
    lines = [f"n {c.n} d {c.d}"]
    lines.extend(" ".join(str(v) for v in f) for f in sorted(c.facets))
    return "\n".join(lines) + "\n"
