"""Shared fixtures: verified chains and traced monodromies, built once."""

import pytest

from toricarr.arrangement import verify_chain
from toricarr.fixtures import EXAMPLES, standard_chain
from toricarr.tracer import stage_monodromy

CHAIN_NAMES = (
    "example-a",
    "circuit-6-3",
    "circuit-4-2",
    "circuit-6-2",
    "type-c-1",
    "type-c-2",
    "type-c-3",
    "type-c-4",
)

# fixtures small enough to trace every stage inside the suite budget
TRACED_NAMES = ("example-a", "circuit-6-3", "circuit-4-2", "type-c-1",
                "type-c-2")


@pytest.fixture(scope="session")
def chains():
    out = {}
    for name in CHAIN_NAMES:
        arr = EXAMPLES[name]()
        out[name] = verify_chain(arr, standard_chain(name, arr))
    return out


@pytest.fixture(scope="session")
def monodromies(chains):
    """name -> {stage j -> list of TraceResult, one per base generator}."""
    out = {}
    for name in TRACED_NAMES:
        ch = chains[name]
        out[name] = {j: stage_monodromy(ch, j)
                     for j in range(2, ch.arrangement.dim + 1)}
    return out
