import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

MARKERS = {
    "exactmath": "tests for rational polynomial arithmetic and Gröbner bases",
    "weyl": "tests for the Weyl algebra",
    "bfun": "tests for annihilators, b-functions and certificates",
    "newton": "tests for Newton polyhedra and multiplier ideals",
    "spectrum": "tests for Hodge spectra",
    "sources": "tests for data sources",
    "parsers": "tests for parsers",
    "routes": "tests for computation routes",
    "cli": "tests for the command-line interface",
}


def pytest_configure(config):
    """Configure pytest."""
    for name, description in MARKERS.items():
        config.addinivalue_line("markers", f"{name}: {description}")


def pytest_collection_modifyitems(items):
    """Add markers to test items based on module path."""
    for item in items:
        for name in MARKERS:
            if f"tests/{name}/" in item.nodeid:
                item.add_marker(getattr(pytest.mark, name))
                break
