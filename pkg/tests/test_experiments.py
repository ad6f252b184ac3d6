import json

import pytest

from statelab import StatelabError, run_experiment
from statelab.experiments import (
    REGISTRY_ORDER,
    ExperimentReport,
    _lsb_word,
    _subset_rows,
    random_automaton,
    run_core_crosscheck,
)
from statelab.words import Alphabet


def test_registry_order_is_stable():
    assert REGISTRY_ORDER == [
        "rabin-claim",
        "exp-alt",
        "hierarchy:2",
        "primes-hs",
        "primes-linear",
        "gallery-equiv",
        "core-crosscheck",
    ]


def test_unknown_experiment_is_rejected():
    with pytest.raises(StatelabError, match="rabin-claim"):
        run_experiment("nope")
    with pytest.raises(StatelabError):
        run_experiment("hierarchy:x")
    with pytest.raises(StatelabError):
        run_experiment("hierarchy:1")


def test_subset_rows_enumeration():
    alpha = Alphabet("01")
    rows = _subset_rows(1, alpha, reverse_blocks=False)
    assert rows == ["", "#0", "#1", "#0#1"]
    reversed_rows = _subset_rows(2, alpha, reverse_blocks=True)
    assert reversed_rows[0] == ""
    assert "#10" in reversed_rows  # block for the word "01"
    assert len(reversed_rows) == 16


def test_lsb_word_encoding():
    assert _lsb_word(1) == "1"
    assert _lsb_word(13) == "1011"
    with pytest.raises(StatelabError):
        _lsb_word(0)


def test_rabin_claim_small_run_passes():
    report = run_experiment("rabin-claim", n=3)
    assert report.passed
    assert report.parameters == {"n": 3}
    assert report.measured["orders"]["3"]["pairs"] == 28
    assert report.measured["orders"]["3"]["distinct_quotients"] == 8


def test_exp_alt_small_run_passes():
    report = run_experiment("exp-alt", n=1)
    assert report.passed
    assert report.measured == {"1": {"profiles": 4, "required": 4}}


def test_hierarchy_run_passes_and_validates_shape():
    report = run_experiment("hierarchy:2")
    assert report.passed
    assert report.parameters == {"power": 2, "n": 2, "order": 4}
    assert report.measured == {"profiles": 16, "required": 16}
    with pytest.raises(StatelabError, match="multiple"):
        run_experiment("hierarchy:2", n=3)


def test_primes_linear_small_run_passes():
    report = run_experiment("primes-linear", n=2, limit=10**6)
    assert report.passed
    entry = report.measured["2"]
    assert entry["k_by_residue"] == {"1": 13, "3": 52}
    assert entry["profiles"] == 2
    assert entry["single_hit"] is True
    assert entry["isolation_recheck"] is True


def test_primes_hs_small_run_passes():
    report = run_experiment("primes-hs", n=3)
    assert report.passed
    assert report.measured["3"]["undistinguished"] == 0
    assert report.measured["3"]["classes"] >= 4


def test_core_crosscheck_is_deterministic_for_a_seed():
    r1 = run_core_crosscheck(seed=7, count=25, mono_pairs=200)
    r2 = run_core_crosscheck(seed=7, count=25, mono_pairs=200)
    assert r1.passed and r2.passed
    assert r1.canonical_json() == r2.canonical_json()


def test_random_automata_have_bounded_shape():
    import random

    rng = random.Random(3)
    for _ in range(50):
        m = random_automaton(rng)
        assert 1 <= len(m.states) <= 5
        assert m.initial == 0
        assert list(m.alphabet) == ["a", "b"]


def test_canonical_json_excludes_duration():
    report = run_experiment("exp-alt", n=1)
    payload = json.loads(report.canonical_json())
    assert set(payload) == {
        "experiment", "claim", "parameters", "measured", "bound", "verdict",
    }
    assert report.duration_seconds >= 0


def test_reports_render_as_text():
    report = run_experiment("exp-alt", n=1)
    text = report.to_text()
    assert "exp-alt" in text
    assert "verdict: pass" in text


def test_run_all_respects_registry_order(monkeypatch):
    import statelab.experiments as exps

    def fake(name):
        def runner(**overrides):
            return ExperimentReport(
                experiment=name, claim="", parameters={}, measured={},
                bound="", verdict="pass",
            )
        return runner

    fake_registry = {"one": fake("one"), "two": fake("two"), "three": fake("three")}
    monkeypatch.setattr(exps, "REGISTRY", fake_registry)
    monkeypatch.setattr(exps, "REGISTRY_ORDER", list(fake_registry))
    serial = exps.run_all()
    threaded = exps.run_all(parallel=3)
    assert [r.experiment for r in serial] == ["one", "two", "three"]
    assert [r.experiment for r in threaded] == ["one", "two", "three"]
