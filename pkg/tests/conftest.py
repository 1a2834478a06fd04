"""
Pytest configuration and fixtures.

This module provides:
- Environment for tests (no log files, fixed seed, small corpus)
- Worked-example incidence hypergraphs loaded from fixture documents
- Small generator objects shared by the product and exponential tests
"""

import os
from pathlib import Path

import pytest

from src.config import reload_config
from src.corpus import four_vertex, doubled_incidence
from src.documents import parse
from src.generators import (
    cycle_h,
    cycle_q,
    edge_unit_q,
    incidence_unit_r,
    path_h,
    path_q,
    path_r,
)

# Project root for fixture paths
PROJECT_ROOT = Path(__file__).parent.parent


# =============================================================================
# Paths
# =============================================================================

FIXTURES_DIR = Path(__file__).parent / "fixtures"
OBJECTS_DIR = FIXTURES_DIR / "objects"


def fixture_path(name: str) -> Path:
    """Path of an object document under tests/fixtures/objects."""
    return OBJECTS_DIR / name


# =============================================================================
# Environment
# =============================================================================

TEST_ENV = {
    "HYPERBOX_LOG_FILE": "false",
    "HYPERBOX_SEED": "0",
    "HYPERBOX_CORPUS_SIZE": "3",
    "HYPERBOX_KMAX": "2",
    "HYPERBOX_WEAKWALK_SIZE": "3",
    "HYPERBOX_SIZE_GUARD": "16",
    "LOG_LEVEL": "WARNING",
}


@pytest.fixture(autouse=True, scope="session")
def test_environment():
    """Pin the configuration for the whole session and restore it afterwards."""
    saved = {key: os.environ.get(key) for key in TEST_ENV}
    os.environ.update(TEST_ENV)
    reload_config(FIXTURES_DIR / "missing.env")
    yield
    for key, value in saved.items():
        if value is None:
            os.environ.pop(key, None)
        else:
            os.environ[key] = value
    reload_config()


# =============================================================================
# Worked examples
# =============================================================================

@pytest.fixture(scope="session")
def g_four():
    """Four vertices, five edges, ten incidences."""
    return four_vertex()


@pytest.fixture(scope="session")
def g_doubled():
    """Three vertices, two edges, six incidences with a doubled incidence at (v1, e2)."""
    return doubled_incidence()


@pytest.fixture(scope="session")
def g_four_document():
    """The four-vertex example with a mixed orientation, as loaded from its document."""
    return parse(fixture_path("four_vertex_oriented.json"))


# =============================================================================
# Generators
# =============================================================================

@pytest.fixture(scope="session")
def p_half():
    """Incidence path with one incidence."""
    return path_r(1)


@pytest.fixture(scope="session")
def p_one():
    """Incidence path with two incidences."""
    return path_r(2)


@pytest.fixture(scope="session")
def one():
    """The single-incidence object (terminal)."""
    return incidence_unit_r()


@pytest.fixture(scope="session")
def arrow():
    return edge_unit_q()


@pytest.fixture(scope="session")
def directed_cycle2():
    return cycle_q(2)


@pytest.fixture(scope="session")
def directed_path2():
    return path_q(2)


@pytest.fixture(scope="session")
def graph_path1():
    return path_h(1)


@pytest.fixture(scope="session")
def graph_cycle2():
    return cycle_h(2)
