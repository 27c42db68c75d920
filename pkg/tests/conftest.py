import pytest

from khtwist.cli import load_bundled_corpus
from khtwist.families import figure_eight, hopf, kink, trefoil, twist_chain

HOPF_PD = "X 1 4 2 3\nX 3 2 4 1"


@pytest.fixture
def hopf_diagram():
    return hopf()


@pytest.fixture
def trefoil_diagram():
    return trefoil()


@pytest.fixture
def kink_diagram():
    return kink()


@pytest.fixture
def figure_eight_diagram():
    return figure_eight()


@pytest.fixture(scope="session")
def corpus():
    return load_bundled_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [d for d in corpus if d.n <= 6]
