from __future__ import annotations

import copy
import json
from pathlib import Path

import pytest

from daogauge.catalog import RunCatalog
from daogauge.fixtures import EXAMPLE_SNAPSHOT, write_corpus

# The golden scoring case; kept alongside the corpus generator so the
# shared score-vector export works from the same document.
UNISWAP_DOC = EXAMPLE_SNAPSHOT

EMPTY_DOC = {"dao_name": "Hollow Guild", "chain_id": 1, "timestamp": "2025-01-01T00:00:00"}


@pytest.fixture
def uniswap_doc() -> dict:
    return copy.deepcopy(UNISWAP_DOC)


@pytest.fixture
def empty_doc() -> dict:
    return copy.deepcopy(EMPTY_DOC)


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory: pytest.TempPathFactory) -> Path:
    """The standard 50-DAO generated corpus (seed 7)."""
    root = tmp_path_factory.mktemp("corpus")
    write_corpus(root, n=50, seed=7)
    return root


@pytest.fixture(scope="session")
def corpus_catalog(tmp_path_factory: pytest.TempPathFactory, corpus_dir: Path) -> RunCatalog:
    """A catalog with the standard corpus imported once."""
    catalog = RunCatalog(tmp_path_factory.mktemp("catalog"))
    summary = catalog.import_directory(corpus_dir)
    assert summary.ok and summary.imported == 50
    return catalog


def write_doc(path: Path, doc: dict) -> Path:
    path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    return path
