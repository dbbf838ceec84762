"""
Shared fixtures for the knot-move test suite
"""

import sys
from pathlib import Path

import pytest

# Backend modules are imported by bare name, as index.py does
backend_path = Path(__file__).parent.parent / "backend"
sys.path.insert(0, str(backend_path))

from catalog import load_catalog  # noqa: E402
from engine import InvariantEngine  # noqa: E402


@pytest.fixture(scope="session")
def engine():
    """Engine with the configured crossing limits"""
    return InvariantEngine()


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()
