"""The pair scanner: classification, dedup, conjecture observations, determinism."""

import pytest

from permsieve.scan import (
    KNOWN_INSTANCES,
    conjecture_suite,
    dedupe,
    instance_applies,
    scan,
)

SMALL_STATS = ["st018", "st021", "st039", "st223", "st539", "st031"]
SMALL_MAPS = ["reverse", "complement", "corteel", "rotation", "inverse"]


@pytest.fixture(scope="module")
def small_report():
    return scan(4, 5, stats=SMALL_STATS, maps=SMALL_MAPS)


class TestScan:
    def test_every_pair_appears_once(self, small_report):
        pairs = [v.pair for v in small_report.verdicts]
        assert len(pairs) == len(set(pairs)) == len(SMALL_STATS) * len(SMALL_MAPS)

    def test_rows_schema(self, small_report):
        row = small_report.rows[0]
        assert row.pair == f"{row.stat_key}|{row.map_key}"
        assert row.table[0] == (24 if row.n == 4 else 120)

    def test_known_positive(self, small_report):
        verdicts = {v.pair: v for v in small_report.verdicts}
        assert verdicts["st039|corteel"].status == "apparent"
        assert verdicts["st018|rotation"].status == "apparent"

    def test_known_negative_records_witness(self, small_report):
        verdicts = {v.pair: v for v in small_report.verdicts}
        v = verdicts["st539|reverse"]
        assert v.status == "fail"
        assert v.failing_n == 4
        assert v.witness_d == 1

    def test_inverse_map_never_apparent(self, small_report):
        for v in small_report.verdicts:
            if v.map_key == "inverse":
                assert v.status == "fail"

    def test_range_validation(self):
        with pytest.raises(ValueError):
            scan(3, 9)

    def test_trivial_range_all_pass(self):
        report = scan(1, 1, stats=["st018", "st021", "st031"], maps=["reverse", "rotation"])
        assert all(v.status == "apparent" for v in report.verdicts)

    def test_undefined_statistic_skipped(self):
        report = scan(2, 3, stats=["st1520", "st018"], maps=["reverse"])
        verdicts = {v.pair: v for v in report.verdicts}
        assert verdicts["st1520|reverse"].status == "skipped"
        assert verdicts["st018|reverse"].status in ("apparent", "fail")

    def test_worker_count_does_not_change_report(self, small_report):
        parallel = scan(4, 5, stats=SMALL_STATS, maps=SMALL_MAPS, workers=2)
        assert parallel == small_report


class TestDedupe:
    def test_reverse_complement_share_class(self, small_report):
        for c in small_report.classes:
            members = set(c.members)
            if "st018|reverse" in members:
                assert "st018|complement" in members

    def test_crossing_family_collapses(self):
        report = scan(4, 5, stats=["st039", "st223"], maps=["corteel"])
        assert len(report.classes) == 1
        assert set(report.classes[0].members) == {"st039|corteel", "st223|corteel"}

    def test_different_fixed_counts_split(self):
        report = scan(4, 5, stats=["extrema_sum"], maps=["corteel", "alexandersson_kebede"])
        assert len(report.classes) == 2

    def test_classes_are_disjoint(self, small_report):
        seen = set()
        for c in small_report.classes:
            for m in c.members:
                assert m not in seen
                seen.add(m)

    def test_dedupe_function_matches_report(self, small_report):
        assert dedupe(small_report) == small_report.classes


class TestKnownInstances:
    def test_catalog_covers_both_2n1_involutions(self):
        maps_for_039 = {m for s, m, _ in KNOWN_INSTANCES if s == "st039"}
        assert maps_for_039 == {"corteel", "invert_laguerre_heap"}

    def test_condition_parser(self):
        assert instance_applies("even", 4) and not instance_applies("even", 5)
        assert instance_applies("odd", 5) and not instance_applies("odd", 4)
        assert instance_applies("n>=4", 7) and not instance_applies("n>=4", 3)

    def test_unconditional_instances_apparent_in_default_scan(self):
        """No paper-proven all-n pair may scan as a failure (no false negatives)."""
        report = scan(4, 6)
        verdicts = {v.pair: v for v in report.verdicts}
        for stat, mp, condition in KNOWN_INSTANCES:
            if condition == "n>=4":
                assert verdicts[f"{stat}|{mp}"].status == "apparent", (stat, mp)

    def test_parity_conditioned_instances_hold_on_their_ns(self):
        from permsieve.sieving import csp_check

        for stat, mp, condition in KNOWN_INSTANCES:
            if condition in ("even", "odd"):
                for n in (4, 5, 6):
                    if instance_applies(condition, n):
                        assert csp_check(stat, mp, n).holds, (stat, mp, n)


@pytest.fixture(scope="module")
def suite():
    return conjecture_suite(6)


class TestConjectureSuite:
    def test_equidistribution_observation(self, suite):
        assert all(suite["equidistribution_373_317"].values())

    def test_dist3_vanishing(self, suite):
        assert suite["inv_distance_3_at_minus_one"][4] == 0
        assert suite["inv_distance_3_at_minus_one"][5] == 0
        assert suite["inv_distance_3_at_minus_one"][6] == 0

    def test_width_k_consistency(self, suite):
        assert all(row["consistent"] for row in suite["width_k"])

    def test_descent_variant_observation(self, suite):
        for row in suite["descent_variant_closed_form"].values():
            assert not row["matches_distribution"]

    def test_range_limit(self):
        with pytest.raises(ValueError):
            conjecture_suite(11)
