import json
import random
from fractions import Fraction

import pytest

from gspcheck import suites
from gspcheck.suites import Check, RunConfig


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(suite="nope")
    with pytest.raises(ValueError):
        RunConfig(n_max=0)
    with pytest.raises(ValueError):
        RunConfig(samples=-1)
    assert "timing" not in RunConfig(timing=True).to_json()


def test_check_ids_are_unique_and_grouped():
    ids = [c.id for c in suites.CHECKS]
    assert len(ids) == len(set(ids))
    assert {c.suite for c in suites.CHECKS} == set(suites.SUITES)
    assert len(suites.selected_checks("all")) == len(ids)
    assert [c.id for c in suites.selected_checks("satake", ["satake.phi_invariance"])] == ["satake.phi_invariance"]


def test_report_schema_and_order():
    report = suites.run(RunConfig(suite="satake", n_max=2, samples=1))
    data = json.loads(report.dumps())
    assert set(data) == {"schema", "config", "checks", "passed"}
    assert data["schema"] == suites.SCHEMA
    ids = [c["id"] for c in data["checks"]]
    assert ids == sorted(ids)
    for c in data["checks"]:
        assert set(c) == {"id", "paper_location", "cases_run", "cases_passed", "first_counterexample", "wall_time"}
        assert 0 <= c["cases_passed"] <= c["cases_run"]
    assert data["passed"] is True


def test_corpus_contains_pinned_vectors_and_grid():
    cfg = RunConfig(n_max=3, samples=0)
    corpus = list(suites.vector_corpus(cfg, random.Random(0)))
    for v in [(1, 1), (1, -1), (-1, 2), (-1, -1, 3)]:
        assert tuple(Fraction(x) for x in v) in corpus
    assert len(corpus) == 4 + 7 + 49 + 343


def test_corpus_depends_on_seed_only():
    cfg = RunConfig(n_max=5, samples=20)
    tail = lambda seed: list(suites.vector_corpus(cfg, random.Random(f"{seed}:x")))[-20:]
    assert tail(1) == tail(1)
    assert tail(1) != tail(2)
    positive = list(suites.vector_corpus(cfg, random.Random(0), positive=True))
    assert all(sum(v) > 0 for v in positive)


def test_random_rationals_stay_in_range():
    rng = random.Random(3)
    for _ in range(200):
        q = suites.random_rational(rng)
        assert q.denominator in (1, 2, 3) and abs(q) <= 6


def test_first_counterexample_is_recorded():
    def cases(cfg, rng):
        yield {"k": 1}, lambda: None
        yield {"k": 2}, lambda: {"why": "first"}
        yield {"k": 3}, lambda: {"why": "second"}

    rec = suites.run_check(Check("demo.check", "appendix", "demo", cases), RunConfig())
    assert (rec.cases_run, rec.cases_passed) == (3, 1)
    assert rec.first_counterexample == {"input": {"k": 2}, "failure": {"why": "first"}}
    assert not rec.passed and rec.wall_time is None


def test_size_limits_become_error_records():
    rec = suites.run_check(suites.CHECKS_BY_ID["appendix.alternating_count"], RunConfig(n_max=11, samples=3, seed=5))
    assert rec.cases_run > rec.cases_passed
    failure = rec.first_counterexample["failure"]
    assert failure["error"] == "SizeOverflow"


def test_honest_failures_are_the_only_failures_in_endoscopy():
    report = suites.run(RunConfig(suite="endoscopy", n_max=4, samples=3))
    failing = sorted(c.id for c in report.checks if not c.passed)
    assert failing == ["endoscopy.n_MH_H", "endoscopy.outer_automorphisms_triple", "root_data.rho_mu_pairing"]


def test_herb_pairs():
    assert suites._herb_pairs(RunConfig(n_max=5)) == [
        (1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (0, 1), (1, 1), (2, 1), (3, 1), (0, 2), (1, 2),
    ]
    assert suites._herb_pairs(RunConfig(n_max=2)) == [(1, 0), (2, 0), (0, 1)]


def test_weight_route_only_for_half_integers():
    from gspcheck.root_data import Weight

    assert isinstance(suites._weight_or_vector((Fraction(1, 2), Fraction(-3))), Weight)
    y = (Fraction(1, 3), Fraction(1))
    assert suites._weight_or_vector(y) == y
