import random

import pytest

from coloring import EdgeColoring, TargetGraph
from constructions import paley_coloring, pentagon_coloring, rook_coloring
from services.corpus import build_corpus, substitution_coloring


@pytest.fixture
def rng():
    return random.Random(1729)


@pytest.fixture
def pentagon():
    return pentagon_coloring()


@pytest.fixture
def paley17():
    return paley_coloring(17)


@pytest.fixture
def rook3():
    return rook_coloring(3)


@pytest.fixture
def c4():
    return TargetGraph.parse("C4")


@pytest.fixture(scope="session")
def gallai_corpus():
    """Substitution-built Gallai colorings of assorted orders and palettes."""
    gen = random.Random(20170101)
    out = []
    for _ in range(60):
        n, k = gen.randint(2, 12), gen.randint(1, 4)
        out.append(substitution_coloring(n, k, gen))
    return out


@pytest.fixture(scope="session")
def random_colorings():
    """Uniform random colorings small enough for the brute-force checks."""
    gen = random.Random(99)
    out = []
    for _ in range(80):
        n, k = gen.randint(2, 7), gen.randint(1, 3)
        out.append(EdgeColoring.from_function(n, k, lambda u, v: gen.randrange(k)))
    return out


@pytest.fixture(scope="session")
def large_random_colorings():
    """1000 uniform random colorings up to K12 with up to five colors."""
    gen = random.Random(4096)
    out = []
    for _ in range(1000):
        n, k = gen.randint(2, 12), gen.randint(1, 5)
        out.append(EdgeColoring.from_function(n, k, lambda u, v: gen.randrange(k)))
    return out


@pytest.fixture(scope="session")
def generated_corpus():
    """(name, kind, coloring): substitution and repaired Gallai colorings plus the named witnesses."""
    return build_corpus(seed=20170101, substitution=400, repaired=120, max_order=15, max_colors=5)
