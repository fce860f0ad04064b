import json

import pytest

from dagx import (
    Dag,
    LimitExceededError,
    UnknownClaimError,
    VerificationReport,
    find_separations,
    parse_edge_list,
    verify_box_props,
    verify_claim,
    verify_clique_bound,
    verify_closure,
    verify_equivalence_transitive,
    verify_implications,
    verify_theorem_bound,
    verify_turan_bound,
)
from dagx.harness import CHORDED_CHAIN_EDGES

from conftest import CHORDED_CHAIN

# Exhaustively computed class maxima (independent prototype enumeration):
# at n = 6 the largest DAG with longest path ell has t(6, ell+1) edges.
TURAN_MAX_N6 = {0: 0, 1: 9, 2: 12, 3: 13, 4: 14, 5: 15}


def stripped(report: VerificationReport) -> dict:
    d = report.to_dict()
    d["elapsed_ms"] = 0
    return d


class TestReportShape:
    def test_json_schema_field_order(self):
        report = verify_turan_bound(3)
        data = json.loads(report.to_json())
        assert list(data) == ["claim", "range", "checked", "violations", "witnesses", "elapsed_ms", "params"]

    def test_ok_iff_no_violations(self):
        report = verify_turan_bound(3)
        assert report.ok and report.violations == []


class TestTuranClaim:
    def test_counts(self):
        report = verify_turan_bound(5)
        assert report.checked == 1 + 2 + 8 + 64 + 1024
        assert report.ok

    def test_observed_max_table(self):
        report = verify_turan_bound(6)
        assert report.ok
        observed = report.params["observed_max"]
        for ell, expected in TURAN_MAX_N6.items():
            assert observed[f"6,{ell}"] == expected

    def test_limit(self):
        with pytest.raises(LimitExceededError):
            verify_turan_bound(8)


class TestTheoremClaim:
    @pytest.mark.parametrize("klass", ["extremely", "strongly", "reduced"])
    def test_small(self, klass):
        report = verify_theorem_bound(5, klass)
        assert report.ok
        for row in report.params["tightness"]:
            assert row["class_max"] == row["bound"] == row["generator_edges"]

    def test_alternative_split_is_one_vertex_short(self):
        report = verify_theorem_bound(5, "extremely")
        rows = [r for r in report.params["tightness"] if r["ell"] >= 2]
        assert rows
        for row in rows:
            assert row["alt_split_vertices"] == row["n"] - 1
            assert row["alt_split_edges"] < row["bound"]
        assert "corrected layer split" in report.params["note"]

    def test_bad_class(self):
        with pytest.raises(Exception):
            verify_theorem_bound(4, "weirdly")


class TestImplicationsClaim:
    def test_exhaustive_plus_random(self):
        report = verify_implications(4, random_trials=100)
        assert report.ok
        assert report.checked == 75 + 100

    def test_random_trials_deterministic(self):
        a = stripped(verify_implications(3, random_trials=50, seed=9))
        b = stripped(verify_implications(3, random_trials=50, seed=9))
        assert a == b


class TestEquivalenceAndClosure:
    def test_equiv(self):
        report = verify_equivalence_transitive(5)
        assert report.ok
        assert report.params["transitive_graphs"] == 407

    def test_closure(self):
        report = verify_closure(5)
        assert report.ok
        assert report.params["reduced_inputs"] == 965


class TestSeparations:
    def test_witnesses(self):
        report = find_separations(5)
        assert report.ok
        kinds = {w["kind"]: w for w in report.witnesses}
        assert set(kinds) == {"reduced-not-strongly", "strongly-not-extremely"}
        first_a = parse_edge_list(kinds["reduced-not-strongly"]["graph"])
        assert first_a == Dag(5, CHORDED_CHAIN)
        assert first_a == Dag(5, CHORDED_CHAIN_EDGES)
        first_b = parse_edge_list(kinds["strongly-not-extremely"]["graph"])
        assert first_b == Dag(5, [(0, 1), (1, 2), (2, 3), (3, 4)])

    def test_none_below_five(self):
        report = find_separations(4)
        assert report.ok
        assert report.witnesses == []

    def test_stops_after_smallest(self):
        report = find_separations(6)
        assert report.checked == 1 + 2 + 8 + 64 + 1024


class TestCliqueBound:
    def test_confirmed_through_n8(self):
        report = verify_clique_bound(8)
        assert report.ok
        assert report.checked == sum(n for n in range(2, 9))

    def test_detects_a_wrong_bound(self):
        # Sanity-check the search itself: 11 deletions cannot hit all
        # triangles of the 8-clique, but 12 can.
        from dagx.harness import _clique_edge_masks, _cover_within

        triangles = _clique_edge_masks(8, 3)
        assert not _cover_within(triangles, 11)
        assert _cover_within(triangles, 12)


class TestBoxClaim:
    def test_small_run(self):
        report = verify_box_props(trials=40, seed=7)
        assert report.ok
        assert report.checked == 40 + 40 + 5 * 4 * 6

    def test_deterministic(self):
        assert stripped(verify_box_props(25, seed=3)) == stripped(verify_box_props(25, seed=3))


class TestWorkers:
    @pytest.mark.parametrize(
        "run",
        [
            lambda w: verify_turan_bound(5, workers=w),
            lambda w: verify_theorem_bound(5, "strongly", workers=w),
            lambda w: verify_implications(4, random_trials=60, workers=w),
            lambda w: verify_equivalence_transitive(5, workers=w),
            lambda w: verify_closure(5, workers=w),
            lambda w: find_separations(5, workers=w),
        ],
        ids=["turan", "theorem", "implications", "equiv", "closure", "separations"],
    )
    def test_sharded_reports_identical(self, run):
        base = stripped(run(1))
        for workers in (2, 3, 5):
            assert stripped(run(workers)) == base


class TestVerifyClaim:
    def test_unknown(self):
        with pytest.raises(UnknownClaimError):
            verify_claim("nonsense")

    def test_theorem_fans_out(self):
        reports = verify_claim("theorem", max_n=4)
        assert [r.claim for r in reports] == [
            "theorem-bound:extremely",
            "theorem-bound:strongly",
            "theorem-bound:reduced",
        ]

    def test_all_runs_every_claim(self):
        reports = verify_claim("all", max_n=3, trials=10, random_trials=10)
        assert len(reports) == 9
        assert all(r.ok for r in reports)

    def test_limit_propagates(self):
        with pytest.raises(LimitExceededError):
            verify_claim("closure", max_n=5, limit=4)
