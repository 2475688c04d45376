from __future__ import annotations

from pathlib import Path

import pytest

from groebner import PolyRing
from groebner.cli import parse_problem_file

FIXTURES = Path(__file__).parent / "fixtures"

CORPUS = [
    "worked",
    "katsura3",
    "katsura4",
    "cyclic4",
    "quadric_seed1",
    "quadric_seed2",
    "quadric_seed3",
    "quadric_seed4",
    "quadric_seed5",
]

# everything except the one instance that is expensive in lex
SMALL_CORPUS = [name for name in CORPUS if name != "katsura4"]

QUADRICS = [name for name in CORPUS if name.startswith("quadric")]


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.ideal"


def load_ideal(name: str, order: str | None = None):
    """(ring, generators) for a corpus fixture, optionally under another order."""
    pf = parse_problem_file(str(fixture_path(name)))
    ring = pf.ring(order)
    return ring, pf.generators(ring)


@pytest.fixture
def lex_ring():
    return PolyRing(7, "x,y", "lex")


@pytest.fixture
def grevlex_ring():
    return PolyRing(7, "x,y", "grevlex")
