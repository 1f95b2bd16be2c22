"""Acceptance criteria, each run at its stated size and time budget.

Every test records one PASS/FAIL line that pytest prints in its terminal
summary under "acceptance criteria".
"""

import subprocess
import sys
import time

import pytest

from conftest import ACCEPTANCE_LINES
from gspcheck import suites
from gspcheck.suites import RunConfig

APPENDIX_LEMMAS = [
    "appendix.alternating_count",
    "appendix.signed_pair_expansion",
    "appendix.split_factorization",
    "appendix.paired_signed_expansion",
    "appendix.parity_lemmas",
    "appendix.rotation_lemma",
    "appendix.delta_reduction",
    "appendix.block_operations",
]
CONSTANTS_EXPECTED_TO_HOLD = [
    "endoscopy.tamagawa",
    "endoscopy.k_table",
    "endoscopy.iota",
    "endoscopy.n_M_G",
    "root_data.d_constant",
]
CONSTANTS_KNOWN_TO_DIFFER = ["endoscopy.n_MH_H", "root_data.rho_mu_pairing"]


def timed_run(cfg, ids):
    start = time.perf_counter()
    report = suites.run(cfg, ids)
    return report, time.perf_counter() - start


def record(key, ok, text):
    ACCEPTANCE_LINES[key] = f"{'PASS' if ok else 'FAIL'}  {text}"


def summary(report):
    return ", ".join(f"{c.id.split('.', 1)[1]} {c.cases_passed}/{c.cases_run}" for c in report.checks)


def failures(report):
    return {c.id: c.first_counterexample for c in report.checks if not c.passed}


def test_criterion_1_appendix_lemmas():
    report, secs = timed_run(RunConfig(suite="appendix", n_max=6, samples=500, seed=42), APPENDIX_LEMMAS)
    ok = report.passed and secs < 120
    record("1", ok, f"criterion 1 appendix lemmas, exhaustive n<=4 grid + 500 random each, {secs:.1f}s (<120s): {summary(report)}")
    assert failures(report) == {}
    positive_only = {"appendix.rotation_lemma", "appendix.delta_reduction"}
    for rec in report.checks:
        keep = (lambda v: sum(v) > 0) if rec.id in positive_only else (lambda v: True)
        grid = sum(1 for n in range(1, 5) for v in suites.grid_vectors(n) if keep(v))
        assert rec.cases_run >= grid + 500, rec.id
    assert secs < 120


def test_criterion_2_constants():
    report, _ = timed_run(RunConfig(suite="endoscopy", n_max=6, samples=0, seed=42), CONSTANTS_EXPECTED_TO_HOLD + CONSTANTS_KNOWN_TO_DIFFER)
    bad = sorted(failures(report))
    record(
        "2",
        not bad,
        "criterion 2 pinned constants: "
        + summary(report)
        + (f"; disagreeing: {', '.join(bad)} (see xfail tests and the decision ledger)" if bad else ""),
    )
    held = {c.id: c.passed for c in report.checks if c.id in CONSTANTS_EXPECTED_TO_HOLD}
    assert all(held.values()), held


@pytest.mark.xfail(strict=True, reason="pairing is n(n+1)/4 with rho and the Shimura cocharacter as implemented")
def test_criterion_2_rho_mu_pairing_full_strength():
    report = suites.run(RunConfig(suite="endoscopy", n_max=6, samples=0), ["root_data.rho_mu_pairing"])
    assert report.passed, failures(report)


@pytest.mark.xfail(strict=True, reason="closed formula is twice the root-data value when m2 = 0 and r2 >= 1")
def test_criterion_2_n_MH_H_full_strength():
    report = suites.run(RunConfig(suite="endoscopy", n_max=6, samples=0), ["endoscopy.n_MH_H"])
    assert report.passed, failures(report)


def test_criterion_3_double_counting():
    report, secs = timed_run(RunConfig(suite="endoscopy", n_max=4, samples=50, seed=42), ["endoscopy.double_counting"])
    rec = report.checks[0]
    ok = rec.passed and secs < 10 and rec.cases_run == 3 * 51
    record("3", ok, f"criterion 3 double counting n=2,3,4 with indicator + 50 random phi each, {secs:.1f}s (<10s): {summary(report)}")
    assert rec.passed, rec.first_counterexample
    assert rec.cases_run == 3 * 51
    assert secs < 10


def test_criterion_4_satake():
    report, secs = timed_run(RunConfig(suite="satake", n_max=4, samples=0, seed=42), None)
    ok = report.passed and secs < 30
    record("4", ok, f"criterion 4 Satake factorizations and invariance, n<=4, a in {{1,2}}, {secs:.1f}s (<30s): {summary(report)}")
    assert failures(report) == {}
    assert secs < 30


def test_criterion_5_kostant_oracle():
    ids = ["kostant.oracle_agreement", "kostant.euler_characteristic"]
    report, secs = timed_run(RunConfig(suite="kostant", n_max=2, samples=0, seed=42), ids)
    ok = report.passed and secs < 60
    record("5", ok, f"criterion 5 Kostant vs cochain complex, n<=2, dim V<=200, {secs:.1f}s (<60s): {summary(report)}")
    assert failures(report) == {}
    assert secs < 60


def test_criterion_6_herb_reduction():
    report, secs = timed_run(RunConfig(suite="appendix", n_max=6, samples=100, seed=42), ["appendix.herb_reduction"])
    rec = report.checks[0]
    pairs = suites._herb_pairs(RunConfig(n_max=6))
    grid = sum(len(suites.TIE_GRID) ** (r + 2 * t) for r, t in pairs)
    record("6", rec.passed, f"criterion 6 Herb reduction, r+2t<=5, full tie grid + 100 random each, {secs:.1f}s: {summary(report)}")
    assert rec.passed, rec.first_counterexample
    assert rec.cases_run == grid + 100 * len(pairs)


def test_criterion_7_byte_identical_reports(tmp_path):
    args = [sys.executable, "-m", "gspcheck", "verify", "--suite", "all", "--n-max", "3", "--samples", "20", "--seed", "11"]
    outs = []
    for name in ("first.json", "second.json"):
        path = tmp_path / name
        proc = subprocess.run(args + ["--out", str(path)], capture_output=True, text=True)
        assert proc.returncode in (0, 1), proc.stderr
        outs.append(path.read_bytes())
    same = outs[0] == outs[1]
    record("7", same, f"criterion 7 two separate processes, same seed: reports {'byte-identical' if same else 'differ'} ({len(outs[0])} bytes)")
    assert same
