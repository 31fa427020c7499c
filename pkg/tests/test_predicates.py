import itertools
import random
from fractions import Fraction

import pytest

from intervalplex import (
    Graph,
    InputError,
    IntervalSystem,
    PureComplex,
    cycle_graph,
    delta_complex,
    is_chordal_complex,
    is_closed_graph,
    is_under_closed_def,
    is_under_closed_local,
    is_unit_interval,
    path_graph,
    satisfies_conditional_exchange,
    satisfies_strict_exchange,
    satisfies_witnessed_exchange,
    union_is_interval,
    validate_interval_representation,
)
from intervalplex.predicates import (
    COMPLEX_PREDICATES,
    GRAPH_PREDICATES,
    pushed_down_tuples,
    representation_flags,
    unit_interval_violations,
    under_closed_def_violations,
    under_closed_local_violations,
)
from intervalplex.graphs import enumerate_graphs

from conftest import ref_union_is_interval

PAW = Graph(4, {(1, 2), (2, 3), (2, 4), (3, 4)})


def all_pure_complexes(n_max):
    for n in range(2, n_max + 1):
        for d in range(1, n):
            pool = list(itertools.combinations(range(1, n + 1), d + 1))
            for bits in range(1, 1 << len(pool)):
                yield PureComplex(n, d, [pool[i] for i in range(len(pool))
                                         if bits >> i & 1])


# ---------------------------------------------------------------------------
# pushed-down tuples

def test_pushed_down_tuples_by_hand():
    # same minimum, coordinatewise <=, strictly increasing
    assert sorted(pushed_down_tuples((2, 4, 5))) == [
        (2, 3, 4), (2, 3, 5), (2, 4, 5),
    ]
    assert list(pushed_down_tuples((1, 2))) == [(1, 2)]
    assert sorted(pushed_down_tuples((1, 4))) == [(1, 2), (1, 3), (1, 4)]


def test_pushed_down_tuples_characterization():
    facet = (2, 5, 7)
    produced = set(pushed_down_tuples(facet))
    expected = {
        t for t in itertools.combinations(range(1, 8), 3)
        if t[0] == facet[0] and all(a <= b for a, b in zip(t, facet))
    }
    assert produced == expected


# ---------------------------------------------------------------------------
# the two under-closed forms

def test_under_closed_forms_coincide_at_d1():
    for n in range(2, 6):
        for g in enumerate_graphs(n, connected_only=True):
            c = delta_complex(g, 1)
            for perm in itertools.permutations(range(1, n + 1)):
                cc = c.relabel(perm)
                assert is_under_closed_def(cc) == is_under_closed_local(cc)


def test_under_closed_forms_diverge_at_d2():
    # Delta_2 of the path 2-1-3-4: the local form passes (the only
    # in-span outsider is 2 inside facet 134, and 123 is a facet) while
    # the definition form needs the pushed-down tuple 124, which is
    # missing. Relabeling by the path order repairs the definition form.
    c = PureComplex(4, 2, {(1, 2, 3), (1, 3, 4)})
    assert is_under_closed_local(c)
    assert not is_under_closed_def(c)
    first = next(under_closed_def_violations(c))
    assert first == {"facet": (1, 3, 4), "tuple": (1, 2, 4)}
    relabeled = c.relabel((2, 1, 3, 4))
    assert relabeled.facets == frozenset({(1, 2, 3), (2, 3, 4)})
    assert is_under_closed_def(relabeled)
    assert is_under_closed_local(relabeled)


def test_definition_form_implies_local_form():
    for c in all_pure_complexes(4):
        for perm in itertools.permutations(range(1, c.n + 1)):
            cc = c.relabel(perm)
            if is_under_closed_def(cc):
                assert is_under_closed_local(cc)


def test_under_closed_cycle_edge_complex():
    c = delta_complex(cycle_graph(4), 1)
    assert not is_under_closed_local(c)
    first = next(under_closed_local_violations(c))
    assert first == {"facet": (1, 4), "j": 3, "tuple": (1, 3)}
    # no labeling of C_4 at d=1 is under closed
    for perm in itertools.permutations(range(1, 5)):
        assert not is_under_closed_local(c.relabel(perm))


def test_under_closed_path_edge_complex():
    assert is_under_closed_local(delta_complex(path_graph(5), 1))
    assert is_under_closed_def(delta_complex(path_graph(5), 1))


# ---------------------------------------------------------------------------
# unit interval

def test_unit_interval_examples():
    c5 = delta_complex(cycle_graph(5), 3)
    assert is_unit_interval(c5)
    paw2 = delta_complex(PAW, 2)
    assert not is_unit_interval(paw2)
    first = next(unit_interval_violations(paw2))
    assert first == {"facet": (1, 2, 4), "tuple": (1, 3, 4)}


def test_unit_interval_ignores_tight_spans():
    c = PureComplex(5, 1, {(1, 2), (4, 5)})
    assert is_unit_interval(c)


def test_unit_implies_both_under_closed_forms_and_chordal():
    for c in all_pure_complexes(4):
        for perm in itertools.permutations(range(1, c.n + 1)):
            cc = c.relabel(perm)
            if is_unit_interval(cc):
                assert is_under_closed_def(cc)
                assert is_under_closed_local(cc)
                assert is_chordal_complex(cc)


# ---------------------------------------------------------------------------
# exchange conditions

def test_unit_strict_witnessed_agree_per_labeling():
    for n in range(2, 6):
        for g in enumerate_graphs(n, connected_only=True):
            for d in (1, 2, 3):
                if d + 1 > n:
                    continue
                c = delta_complex(g, d)
                for perm in itertools.permutations(range(1, n + 1)):
                    cc = c.relabel(perm)
                    u = is_unit_interval(cc)
                    assert satisfies_strict_exchange(cc) == u
                    assert satisfies_witnessed_exchange(cc) == u


def test_conditional_exchange_is_weaker_than_unit():
    for c in all_pure_complexes(4):
        if is_unit_interval(c):
            assert satisfies_conditional_exchange(c)


def test_conditional_exchange_matches_closed_graph_at_d1():
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            c = delta_complex(g, 1)
            for perm in itertools.permutations(range(1, n + 1)):
                assert is_closed_graph(g.relabel(perm)) == \
                    satisfies_conditional_exchange(c.relabel(perm))


# ---------------------------------------------------------------------------
# chordal complexes and closed graphs

def test_chordal_complex_examples():
    assert is_chordal_complex(PureComplex(5, 2, {(1, 3, 5)}))
    # two facets sharing their maximum with a full union skeleton
    assert is_chordal_complex(PureComplex(4, 1, {(1, 4), (2, 4), (1, 2)}))
    # same pair without the third edge
    assert not is_chordal_complex(PureComplex(4, 1, {(1, 4), (2, 4)}))
    # facets not sharing a maximum impose nothing
    assert is_chordal_complex(PureComplex(4, 1, {(1, 3), (2, 4)}))


def test_closed_graph_examples():
    assert is_closed_graph(path_graph(4))
    assert not is_closed_graph(cycle_graph(4))
    assert is_closed_graph(Graph(3, {(1, 2), (2, 3), (1, 3)}))
    # star with the center labeled 1: 1-2 and 1-3 force 2-3
    assert not is_closed_graph(Graph(3, {(1, 2), (1, 3)}))
    # the same star labeled through the center passes
    assert is_closed_graph(Graph(3, {(1, 2), (2, 3)}))


# ---------------------------------------------------------------------------
# interval systems

def test_interval_system_normalizes_to_fractions():
    r = IntervalSystem(((0, 1), ("1/2", "3/2"), (Fraction(2), Fraction(3))))
    assert r.interval(2) == (Fraction(1, 2), Fraction(3, 2))
    assert len(r) == 3


def test_interval_system_validation():
    with pytest.raises(InputError):
        IntervalSystem(((1, 0),))
    with pytest.raises(InputError):
        IntervalSystem((("a", 1),))
    with pytest.raises(InputError):
        IntervalSystem(((1,),))
    with pytest.raises(InputError):
        IntervalSystem(((0, 1),)).interval(2)


def test_unit_and_proper_flags():
    assert IntervalSystem(((0, 1), (1, 2))).unit
    assert IntervalSystem(((0, 1), (1, 2))).proper
    r = IntervalSystem(((0, 3), (1, 2)))
    assert not r.unit
    assert not r.proper
    # equal intervals do not count as proper containment
    assert IntervalSystem(((0, 1), (0, 1))).proper
    stretched = IntervalSystem(((0, 2), (1, 3)))
    assert stretched.unit and stretched.proper


def test_shift_and_scale():
    r = IntervalSystem(((0, 1), (2, 3)))
    shifted = r.shift(Fraction(1, 3))
    assert shifted.intervals == ((Fraction(1, 3), Fraction(4, 3)),
                                 (Fraction(7, 3), Fraction(10, 3)))
    scaled = r.scale(2)
    assert scaled.intervals == ((0, 2), (4, 6))
    with pytest.raises(InputError):
        r.scale(0)


def test_union_is_interval_examples():
    assert union_is_interval([(0, 1), (1, 2)])
    assert not union_is_interval([(0, 1), (2, 3)])
    assert union_is_interval([(0, 5), (1, 2), (3, 4)])
    with pytest.raises(InputError):
        union_is_interval([])


def test_union_is_interval_against_sampling_oracle():
    rng = random.Random(67)
    for _ in range(300):
        intervals = []
        for _ in range(rng.randint(1, 5)):
            left = Fraction(rng.randint(0, 12), rng.randint(1, 4))
            length = Fraction(rng.randint(0, 8), rng.randint(1, 4))
            intervals.append((left, left + length))
        assert union_is_interval(intervals) == ref_union_is_interval(intervals)


def test_validate_representation_worked_example():
    r = IntervalSystem(((0, 1), (1, 2), (2, 3), (2, 3)))
    assert validate_interval_representation(delta_complex(PAW, 1), r)
    assert representation_flags(r) == {"unit": True, "proper": True}


def test_validate_representation_rejects_wrong_graph():
    r = IntervalSystem(((0, 1), (1, 2), (2, 3), (2, 3)))
    assert not validate_interval_representation(delta_complex(cycle_graph(4), 1), r)


def test_validate_representation_is_translation_invariant():
    r = IntervalSystem(((0, 1), (1, 2), (2, 3), (2, 3)))
    c = delta_complex(PAW, 1)
    for offset in (Fraction(7, 3), -2, Fraction(1, 9)):
        assert validate_interval_representation(c, r.shift(offset))


def test_validate_representation_checks_length():
    with pytest.raises(InputError):
        validate_interval_representation(delta_complex(PAW, 1),
                                         IntervalSystem(((0, 1),)))


def test_validate_representation_higher_dimension():
    # three unit intervals chained: every triple whose union is an
    # interval must be a facet and vice versa
    r = IntervalSystem(((0, 1), (1, 2), (2, 3), (5, 6)))
    c = PureComplex(4, 2, {(1, 2, 3)})
    assert validate_interval_representation(c, r)


# ---------------------------------------------------------------------------
# registries

def test_registries_expose_consistent_pairs():
    assert set(COMPLEX_PREDICATES) == {
        "under-closed", "under-closed-def", "unit-interval", "exchange-strict",
        "exchange-witnessed", "exchange-conditional", "chordal-complex",
    }
    assert set(GRAPH_PREDICATES) == {"closed-graph"}
    rng = random.Random(71)
    complexes = [c for c in all_pure_complexes(4)]
    sample = rng.sample(complexes, 60)
    for holds, violations in COMPLEX_PREDICATES.values():
        for c in sample:
            assert holds(c) == (next(violations(c), None) is None)
    holds, violations = GRAPH_PREDICATES["closed-graph"]
    for n in range(2, 5):
        for g in enumerate_graphs(n):
            assert holds(g) == (next(violations(g), None) is None)
