import pytest

from tgs.enumeration import classify, enumerate_structures

CORPUS_SHAPES = ((1, 1), (2, 1), (3, 1), (4, 1), (2, 2))


@pytest.fixture(scope="session")
def corpus():
    """Every axiom-passing structure at the shipped shapes, pre-dedup."""
    return tuple((n, m, s) for n, m in CORPUS_SHAPES
                 for s in enumerate_structures(n, m))


@pytest.fixture(scope="session")
def corpus_reps():
    """Classification representatives keyed by (order, gamma_size)."""
    return {(n, m): classify(n, m).representatives for n, m in CORPUS_SHAPES}
