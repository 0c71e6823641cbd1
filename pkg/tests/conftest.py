"""
Pytest Configuration & Shared Fixtures
"""

import json
import pytest
import sys
from pathlib import Path

import numpy as np

# Füge src zum Python-Path hinzu
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli.documents import MatrixDocument
from src.stp.bridge import bridge_cache

FIXTURES_DIR = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> np.ndarray:
    """Matrix-Dokument aus tests/fixtures lesen"""
    payload = json.loads((FIXTURES_DIR / f"{name}.json").read_text(encoding="utf-8"))
    return np.array(MatrixDocument.model_validate(payload).to_matrix())


def assert_close(actual, expected, rtol: float = 1e-10):
    """Vergleich mit Toleranz relativ zur Größe von expected"""
    expected = np.asarray(expected, dtype=np.float64)
    scale = max(1.0, float(np.max(np.abs(expected))) if expected.size else 1.0)
    np.testing.assert_allclose(np.asarray(actual), expected, rtol=rtol, atol=rtol * scale)


@pytest.fixture
def rng():
    """Reproduzierbarer Zufallsgenerator"""
    return np.random.default_rng(20240501)


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture
def A3x4():
    """3×4 Beispielmatrix mit ganzzahligen Einträgen"""
    return load_fixture("wide_3x4")


@pytest.fixture
def A3x4_decimal():
    """3×4 Beispielmatrix mit vier Nachkommastellen"""
    return load_fixture("decimal_3x4")


@pytest.fixture
def lie_basis():
    """Drei 2×3 Matrizen A, B, C mit ihren ad-Matrizen"""
    return {
        name: (load_fixture(f"lie_{name}"), load_fixture(f"lie_ad_{name}"))
        for name in ("A", "B", "C")
    }


@pytest.fixture
def fresh_cache():
    """Leerer Brückenmatrix-Cache für Tests, die Cache-Einträge zählen"""
    bridge_cache().clear()
    yield bridge_cache()
    bridge_cache().clear()
