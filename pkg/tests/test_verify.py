import pytest

from euclid import verify
from euclid.errors import UnknownProposition
from euclid.verify import compare, generate_instance, run_suite


class TestSuites:
    def test_i1_all_pass(self):
        report = run_suite("I.1", 20, seed=7)
        assert report.failures == 0
        assert report.runs == 20

    def test_i44_superposition_ledger(self):
        report = run_suite("I.44", 10, seed=7)
        assert report.failures == 0
        totals = report.superposition_totals()
        assert totals["euclid_superposition"] == 10
        assert totals["alnayrizi"] == 0
        assert totals["robert_of_chester"] == 0
        assert totals["campanus"] == 0
        assert totals["tinemue_equal_case"] == 0

    def test_i43_exact(self):
        report = run_suite("I.43", 15, seed=7)
        assert report.failures == 0

    def test_theorem_suite(self):
        report = run_suite("I.41", 15, seed=3)
        assert report.failures == 0

    def test_unknown_id(self):
        with pytest.raises(UnknownProposition):
            run_suite("I.99", 1, seed=0)

    def test_deterministic(self):
        a = run_suite("I.23.proclus", 5, seed=11)
        b = run_suite("I.23.proclus", 5, seed=11)
        assert a.lines() == b.lines()

    def test_strategy_suffix(self):
        report = run_suite("I.44.chester", 5, seed=2)
        assert report.failures == 0
        assert report.superposition_totals() == {"robert_of_chester": 0}


class TestCompare:
    def test_i23_euclid_vs_proclus(self):
        import random

        from euclid.number import new_context

        new_context()
        rng = random.Random(5)
        kwargs = generate_instance("I.23", rng)
        report = compare("I.23", ["euclid", "proclus"], kwargs)
        assert all(oc.passed for oc in report.outcomes.values())
        eu = report.outcomes["euclid"]
        pr = report.outcomes["proclus"]
        assert eu.postulates[2] == pr.postulates[2] == 2
        assert eu.postulates[0] != pr.postulates[0]

    def test_i44_superposition_difference(self):
        import random

        from euclid.number import new_context

        new_context()
        rng = random.Random(6)
        kwargs = generate_instance("I.44", rng)
        report = compare("I.44", ["euclid_superposition", "alnayrizi"], kwargs)
        assert report.outcomes["euclid_superposition"].superpositions == 1
        assert report.outcomes["alnayrizi"].superpositions == 0

    def test_i46_identical_vertex_sets(self):
        import random

        from euclid.number import new_context

        new_context()
        rng = random.Random(8)
        kwargs = generate_instance("I.46", rng)
        from euclid.elements import p46_square

        a = p46_square(**dict(kwargs, strategy="campanus_first"))
        b = p46_square(**dict(kwargs, strategy="campanus_second"))
        assert set(a.result.vertices) == set(b.result.vertices)

    def test_records_export(self):
        import random

        from euclid.number import new_context

        new_context()
        rng = random.Random(5)
        kwargs = generate_instance("I.42", rng)
        report = compare("I.42", ["euclid", "alnayrizi"], kwargs)
        recs = report.records()
        assert len(recs) == 2
        assert {r["strategy"] for r in recs} == {"euclid", "alnayrizi"}
        assert all(r["passed"] for r in recs)


class TestGenerators:
    @pytest.mark.parametrize("prop_id", verify.SUITE_IDS)
    def test_small_suite_everywhere(self, prop_id):
        report = run_suite(prop_id, 4, seed=13)
        assert report.failures == 0, "\n".join(report.lines())
