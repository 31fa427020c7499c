import itertools

import pytest

from intervalplex import (
    Graph,
    InputError,
    complete_graph,
    cycle_graph,
    enumerate_graphs,
    find_d_claw,
    find_d_paw,
    find_induced_cycle_geq,
    is_chordal_graph,
    path_graph,
    star_graph,
)

from conftest import ref_connected

PAW = Graph(4, {(1, 2), (2, 3), (2, 4), (3, 4)})
SPIDER = Graph(7, {(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)})


def induced_degrees(g, subset):
    members = set(subset)
    return [sum(1 for u in members if u != v and g.has_edge(u, v)) for v in subset]


def has_induced_long_cycle(g, length):
    for size in range(length, g.n + 1):
        for subset in itertools.combinations(range(1, g.n + 1), size):
            if ref_connected(g.edges, subset) and \
                    all(deg == 2 for deg in induced_degrees(g, subset)):
                return True
    return False


def has_d_paw(g, d):
    if d == 1 or d + 2 > g.n:
        return False
    for subset in itertools.combinations(range(1, g.n + 1), d + 2):
        if ref_connected(g.edges, subset) and \
                sorted(induced_degrees(g, subset)).count(1) == 3:
            return True
    return False


def check_claw_witness(g, d, w):
    """Validate a claw witness against the structural definition."""
    assert w.kind == "claw"
    assert w.center is not None
    parts = [set(p) for p in w.parts]
    assert len(parts) == 3
    union = set()
    for part in parts:
        assert w.center in part
        assert 2 <= len(part) <= d + 1
        assert ref_connected(g.edges, part)
        union |= part
    for a, b in itertools.combinations(parts, 2):
        assert a & b == {w.center}
        assert len(a | b) >= d + 1
    assert tuple(sorted(union)) == w.vertices
    for a, b in itertools.combinations(parts, 2):
        for u in a - {w.center}:
            for v in b - {w.center}:
                assert not g.has_edge(u, v)


# ---------------------------------------------------------------------------
# induced cycles

def test_cycle_finder_examples():
    w = find_induced_cycle_geq(cycle_graph(5), 4)
    assert w.kind == "cycle"
    assert w.vertices == (1, 2, 3, 4, 5)
    assert find_induced_cycle_geq(cycle_graph(5), 6) is None
    chorded = Graph(4, {(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)})
    assert find_induced_cycle_geq(chorded, 4) is None
    with pytest.raises(InputError):
        find_induced_cycle_geq(cycle_graph(5), 2)


def test_cycle_finder_against_oracle():
    for n in range(3, 6):
        for g in enumerate_graphs(n):
            for length in (4, 5):
                found = find_induced_cycle_geq(g, length)
                assert (found is not None) == has_induced_long_cycle(g, length)
                if found is not None:
                    assert ref_connected(g.edges, found.vertices)
                    assert all(deg == 2 for deg in
                               induced_degrees(g, found.vertices))
                    assert len(found.vertices) >= length


def test_is_chordal_graph():
    assert is_chordal_graph(path_graph(5))
    assert is_chordal_graph(complete_graph(4))
    assert is_chordal_graph(PAW)
    assert not is_chordal_graph(cycle_graph(4))
    assert not is_chordal_graph(cycle_graph(6))


# ---------------------------------------------------------------------------
# claws

def test_claw_finder_examples():
    for d in (1, 2):
        w = find_d_claw(star_graph(3), d)
        assert w is not None
        assert w.center == 1
        check_claw_witness(star_graph(3), d, w)
    # the spider with three legs of length two carries claws for d <= 2
    for d in (1, 2):
        w = find_d_claw(SPIDER, d)
        assert w is not None
        check_claw_witness(SPIDER, d, w)


def test_claw_finder_negatives():
    assert find_d_claw(path_graph(7), 2) is None
    assert find_d_claw(cycle_graph(6), 2) is None
    assert find_d_claw(complete_graph(5), 2) is None
    assert find_d_claw(PAW, 1) is None


def test_claw_witnesses_validate():
    for n in range(4, 7):
        for g in enumerate_graphs(n, connected_only=True, canonical=True):
            for d in (1, 2, 3):
                w = find_d_claw(g, d)
                if w is not None:
                    check_claw_witness(g, d, w)


def test_claw_requires_center_degree_three():
    # every part holds a neighbor of the center, so max degree < 3
    # rules claws out entirely
    for n in range(3, 8):
        assert find_d_claw(path_graph(n), 1) is None
        assert find_d_claw(path_graph(n), 2) is None


# ---------------------------------------------------------------------------
# paws

def test_paw_finder_examples():
    assert find_d_paw(star_graph(3), 2).vertices == (1, 2, 3, 4)
    assert find_d_paw(star_graph(3), 3) is None
    assert find_d_paw(PAW, 2) is None
    assert find_d_paw(path_graph(5), 3) is None
    # spider legs shortened to one vertex on a 5-vertex star-of-paths
    g = Graph(5, {(1, 2), (1, 3), (1, 4), (4, 5)})
    w = find_d_paw(g, 3)
    assert w is not None
    assert w.kind == "paw"


def test_no_1_paw_exists():
    for n in range(3, 6):
        for g in enumerate_graphs(n):
            assert find_d_paw(g, 1) is None


def test_paw_finder_against_oracle():
    for n in range(3, 6):
        for g in enumerate_graphs(n):
            for d in (2, 3):
                found = find_d_paw(g, d)
                assert (found is not None) == has_d_paw(g, d)
                if found is not None:
                    assert len(found.vertices) == d + 2
                    assert ref_connected(g.edges, found.vertices)
                    assert sorted(induced_degrees(g, found.vertices)).count(1) == 3


def test_pattern_kind_validation():
    with pytest.raises(InputError):
        find_d_claw(PAW, 0)
    with pytest.raises(InputError):
        find_d_paw(PAW, -1)
