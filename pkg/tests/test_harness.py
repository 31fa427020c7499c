"""Tests for the exhaustive verification harness.

Instance counts and failure counts for small parameters are pinned; they were
cross-checked by hand against the enumeration sizes in test_graphs.py.
"""

import json

import pytest

from intervalplex.errors import InputError
from intervalplex.harness import SUITE_IDS, run_suite

# suite, kwargs, expected verdict, instances, failures
SMALL_RUNS = [
    ("UNDER_CLOSED_EQUIV", dict(n_max=3), True, 50, 0),
    ("UNDER_CLOSED_EQUIV", dict(n_max=4), False, 2786, 144),
    ("UNIT_EXCHANGE_EQUIV", dict(n_max=4), True, 2786, 0),
    ("EXCHANGE_THEOREM", dict(n_max=4), True, 123, 0),
    ("CLOSED_IS_PROPER", dict(n_max=4), True, 43, 0),
    ("STRONG_IMPLIES_UNDER_CLOSED", dict(n_max=4), True, 94, 0),
    ("MONOTONE", dict(n_max=4), True, 2128, 0),
    ("SORTABLE_EQUIV", dict(n_max=4), False, 210, 23),
    ("INTERVAL_GRAPHS", dict(n_max=4), True, 43, 0),
    ("FORBIDDEN", dict(n_max=5), True, 145, 0),
    ("UNIT_IMPLIES_CHORDAL", dict(n_max=5), True, 13084, 0),
    ("CYCLES", dict(n_max=6), True, 28, 0),
    ("FORESTS", dict(n_max=5), True, 333, 0),
    ("SORTABLE_FORBIDDEN", dict(n_max=5), False, 94, 19),
    ("CORONA", dict(n_max=5, seed=7), True, 20, 0),
]


class TestSmallRuns:
    @pytest.mark.parametrize("suite,kwargs,verdict,instances,n_failures", SMALL_RUNS)
    def test_pinned_result(self, suite, kwargs, verdict, instances, n_failures):
        report = run_suite(suite, **kwargs)
        assert report.passed == verdict
        assert report.instances_checked == instances
        assert len(report.failures) == n_failures

    def test_under_closed_mismatches_are_one_sided(self):
        report = run_suite("UNDER_CLOSED_EQUIV", n_max=4)
        assert any("local form only" in obs for obs in report.observations)
        for failure in report.failures:
            assert failure["actual"] == "definition form False, local form True"

    def test_sortable_equiv_notes_the_d1_scope(self):
        report = run_suite("SORTABLE_EQUIV", n_max=4)
        assert any("d=1" in obs for obs in report.observations)

    def test_failures_are_sorted_and_json_safe(self):
        report = run_suite("SORTABLE_FORBIDDEN", n_max=5)
        keys = [json.dumps(f, sort_keys=True) for f in report.failures]
        assert keys == sorted(keys)


class TestMutation:
    def test_cycles_mutation_is_caught(self):
        report = run_suite("CYCLES", n_max=6, mutate=True)
        assert not report.passed
        assert len(report.failures) >= 1
        # the four-cycle at d=1 must be among the detected discrepancies
        assert any(f["d"] == 1 and f["instance"].startswith("n 4") for f in report.failures)

    def test_under_closed_mutation_is_caught(self):
        report = run_suite("UNDER_CLOSED_EQUIV", n_max=3, mutate=True)
        assert not report.passed
        assert len(report.failures) == 6

    def test_mutation_unwired_suites_reject(self):
        with pytest.raises(InputError):
            run_suite("FORESTS", n_max=4, mutate=True)

    def test_clean_run_of_mutable_suite_passes(self):
        assert run_suite("UNDER_CLOSED_EQUIV", n_max=3).passed


class TestDeterminism:
    def test_repeat_runs_agree_except_timing(self):
        a = run_suite("FORBIDDEN", n_max=5).to_json()
        b = run_suite("FORBIDDEN", n_max=5).to_json()
        a.pop("elapsed_ms")
        b.pop("elapsed_ms")
        assert a == b

    def test_worker_count_does_not_change_results(self):
        a = run_suite("SORTABLE_EQUIV", n_max=4).to_json()
        b = run_suite("SORTABLE_EQUIV", n_max=4, jobs=2).to_json()
        a.pop("elapsed_ms")
        b.pop("elapsed_ms")
        assert a == b

    def test_corona_runs_reproduce_with_the_same_seed(self):
        a = run_suite("CORONA", n_max=5, seed=11, samples=8).to_json()
        b = run_suite("CORONA", n_max=5, seed=11, samples=8).to_json()
        a.pop("elapsed_ms")
        b.pop("elapsed_ms")
        assert a == b
        assert a["instances"] == 8

    def test_corona_different_seeds_usually_differ(self):
        a = run_suite("CORONA", n_max=5, seed=1, samples=6)
        b = run_suite("CORONA", n_max=5, seed=2, samples=6)
        assert a.passed and b.passed
        assert a.params["seed"] != b.params["seed"]


class TestParamsAndReport:
    def test_report_json_shape(self):
        report = run_suite("CYCLES", n_max=6)
        payload = report.to_json()
        assert sorted(payload.keys()) == [
            "elapsed_ms", "failures", "instances", "observations", "params",
            "schema", "suite",
        ]
        assert payload["schema"] == 1
        assert payload["suite"] == "CYCLES"
        assert payload["params"]["n_max"] == 6
        assert payload["params"]["d_range"] == [1, 2, 3, 4, 5, 6]
        json.dumps(payload)  # must be serializable as-is

    def test_corona_params_include_samples(self):
        report = run_suite("CORONA", n_max=5, seed=3, samples=5)
        assert report.params["samples"] == 5
        assert report.params["seed"] == 3

    def test_non_sampling_params_omit_samples(self):
        report = run_suite("CYCLES", n_max=6)
        assert "samples" not in report.params

    def test_every_suite_id_is_runnable(self):
        for suite in SUITE_IDS:
            kwargs = dict(n_max=4)
            if suite == "CORONA":
                kwargs["seed"] = 1
                kwargs["samples"] = 2
            if suite == "CYCLES":
                kwargs["n_max"] = 5
            report = run_suite(suite, **kwargs)
            assert report.instances_checked >= 1

    def test_unknown_suite(self):
        with pytest.raises(InputError):
            run_suite("NOPE")

    def test_bad_n_max(self):
        with pytest.raises(InputError):
            run_suite("CYCLES", n_max=0)

    def test_bad_d_range(self):
        with pytest.raises(InputError):
            run_suite("CYCLES", n_max=6, d_range=[0])

    def test_corona_requires_seed(self):
        with pytest.raises(InputError):
            run_suite("CORONA", n_max=5)
