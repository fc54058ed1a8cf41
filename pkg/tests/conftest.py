"""Shared corpus of seeded random frameworks and cached fast enumerations.

The corpus pins the cross-validation surface: 200 frameworks, argument
counts cycling 1..9, attack probability 0.25, self-attack probability 0.1,
seeds 0..199.
"""

import pytest

from afsem.oracle import random_framework
from afsem.scc_semantics import enumerate_semantics

CORPUS_SIZE = 200
EDGE_PROB = 0.25
SELF_ATTACK_PROB = 0.1
TABLE_SEMANTICS = (
    "naive", "stage", "cf2", "stg2", "icf2", "istg2", "cf1.5", "stg1.5",
)
SCC_SEMANTICS = ("cf2", "stg2", "icf2", "istg2", "cf1.5", "stg1.5")


def corpus_framework(seed: int):
    n = (seed % 9) + 1
    return random_framework(n, EDGE_PROB, SELF_ATTACK_PROB, seed)


@pytest.fixture(scope="session")
def corpus():
    return [(seed, corpus_framework(seed)) for seed in range(CORPUS_SIZE)]


@pytest.fixture(scope="session")
def corpus_fast(corpus):
    """Fast-path extension sets for every corpus framework and all eight
    table semantics."""
    out = {}
    for seed, f in corpus:
        out[seed] = {
            sem: enumerate_semantics(f, sem) for sem in TABLE_SEMANTICS
        }
    return out
