"""
Tests for the verification suites, reports, configuration and logging.

Usage:
    pytest tests/test_verification.py -v
"""

import logging

import pytest

from src.config import load_config
from src.errors import InputError
from src.generators import cycle_h, path_h, path_q, path_r
from src.logging_config import resolve_level, setup_logging
from src.reports import CheckResult, SuiteReport
from src.spectral import oriented
from src.verification import SUITES, run_suite


class TestSuites:
    """Suites on explicit small objects."""

    def test_names(self):
        assert SUITES == ("coherence", "adjunction", "weakwalk", "census")

    def test_unknown_suite(self):
        with pytest.raises(InputError):
            run_suite("speed")

    def test_census(self, g_doubled):
        report = run_suite("census", [g_doubled], k_max=1)
        assert report.ok, report.to_text()
        assert any("6 vertices, 6 edges" in note for note in report.notes)

    def test_weakwalk_on_oriented_document(self, g_four_document):
        og = oriented(g_four_document.obj, g_four_document.orientation)
        report = run_suite("weakwalk", [og], k_max=2)
        assert report.ok, report.to_text()
        assert report.notes

    def test_coherence(self):
        report = run_suite("coherence", [path_q(1), cycle_h(1), path_r(1)], size=1)
        assert report.ok, report.to_text()

    def test_coherence_checks_naturality_and_functor_laws(self):
        report = run_suite("coherence", [path_q(1), cycle_h(1), path_r(1)], size=1)
        names = [check.name for check in report.checks]
        for prefix in ("Psi #0: natural", "Phi #0: natural", "psi #0: natural"):
            assert any(name.startswith(prefix) for name in names)
        for functor in ("U", "D", "N", "Del", "I", "UpsilonDiamond"):
            assert f"{functor} #0: preserves identities" in names
        assert report.ok, report.to_text()

    def test_adjunction(self):
        report = run_suite("adjunction", [path_q(1), path_h(1), path_r(1)], size=1)
        assert report.ok, report.to_text()

    def test_other_categories_are_skipped_by_spectral_suites(self, g_doubled):
        report = run_suite("census", [path_q(1), g_doubled], k_max=1)
        assert report.ok
        assert all(check.name.startswith("#0 ") for check in report.checks)



@pytest.mark.slow
class TestAcceptanceSizes:
    """Suites on seeded random corpora of release size."""

    def test_weakwalk_on_twenty_objects(self):
        report = run_suite("weakwalk", seed=0, size=20, k_max=4)
        assert report.ok, report.to_text()
        objects = {check.name.split(":")[0] for check in report.checks}
        assert objects == {f"#{n}" for n in range(20)}
        assert any("H̄^4" in check.name for check in report.checks)

    def test_census_up_to_four_incidences(self):
        report = run_suite("census", seed=0, size=10, k_max=4)
        assert report.ok, report.to_text()
        runs = {check.name.split(":")[0] for check in report.checks}
        assert runs == {f"#{n} k={k}" for n in range(10) for k in range(1, 5)}

    def test_adjunction_on_ten_triples(self):
        report = run_suite("adjunction", seed=0, size=10)
        assert report.ok, report.to_text()
        runs = {check.name.split(":")[0] for check in report.checks}
        for kind in ("box-q", "box-h", "box-m", "box-r", "laplacian"):
            assert {f"{kind} #{n}" for n in range(10)} <= runs

    def test_coherence_on_ten_pairs(self):
        report = run_suite("coherence", seed=0, size=10)
        assert report.ok, report.to_text()
        names = {check.name for check in report.checks}
        for n in range(10):
            assert f"duality #{n}: dual moves to the right factor" in names
            assert f"duality #{n}: duality composites are isomorphisms" in names

class TestReports:
    """Deterministic report text."""

    def test_text_layout(self):
        report = SuiteReport("demo")
        report.add("first", True)
        report.add("second", False, "2 != 3")
        report.note("signs differ at k=2")
        assert report.to_text() == (
            "PASS first\n"
            "FAIL second: 2 != 3\n"
            "NOTE signs differ at k=2\n"
            "demo: 1/2 checks passed\n"
        )
        assert not report.ok
        assert report.failures == [CheckResult("second", False, "2 != 3")]

    def test_extend(self):
        report = SuiteReport("all")
        other = SuiteReport("part")
        other.add("x", True)
        other.note("n")
        assert report.extend(other).ok
        assert report.notes == ["n"]


class TestConfig:
    """Environment-driven settings."""

    def test_size_guard_is_clamped(self, monkeypatch, tmp_path):
        monkeypatch.setenv("HYPERBOX_SIZE_GUARD", "0")
        assert load_config(tmp_path / "missing.env").size_guard == 1

    def test_bad_integer_falls_back(self, monkeypatch, tmp_path):
        monkeypatch.setenv("HYPERBOX_KMAX", "three")
        assert load_config(tmp_path / "missing.env").default_kmax == 4

    def test_env_file(self, monkeypatch, tmp_path):
        monkeypatch.delenv("HYPERBOX_CORPUS_MAX_EDGES", raising=False)
        env = tmp_path / ".env"
        env.write_text("HYPERBOX_CORPUS_MAX_EDGES=3\n", encoding="utf-8")
        assert load_config(env).corpus_max_edges == 3

    def test_release_defaults(self, monkeypatch, tmp_path):
        for key in ("HYPERBOX_WEAKWALK_SIZE", "HYPERBOX_KMAX", "HYPERBOX_CORPUS_SIZE"):
            monkeypatch.delenv(key, raising=False)
        config = load_config(tmp_path / "missing.env")
        assert config.weakwalk_size == 20
        assert config.default_kmax == 4
        assert config.corpus_size == 10

    def test_session_settings(self, tmp_path):
        config = load_config(tmp_path / "missing.env")
        assert config.log_to_file is False
        assert config.corpus_size == 3
        assert config.weakwalk_size == 3
        assert config.log_level == "WARNING"


class TestLogging:
    """Console-only logging setup."""

    def test_console_handler_on_stderr(self, tmp_path):
        config = load_config(tmp_path / "missing.env")
        root = setup_logging("test", config)
        try:
            assert root.level == logging.WARNING
            assert len(root.handlers) == 1
            assert isinstance(root.handlers[0], logging.StreamHandler)
        finally:
            root.handlers.clear()

    def test_level_override(self, tmp_path):
        config = load_config(tmp_path / "missing.env")
        root = setup_logging("test", config, level="debug")
        try:
            assert root.level == logging.DEBUG
            assert logging.getLogger("graphviz").level == logging.INFO
        finally:
            root.handlers.clear()
            root.setLevel(logging.WARNING)

    @pytest.mark.parametrize("name,expected", [
        ("error", logging.ERROR),
        (None, logging.INFO),
        ("LOUD", logging.INFO),
    ])
    def test_resolve_level(self, name, expected):
        assert resolve_level(name) == expected
