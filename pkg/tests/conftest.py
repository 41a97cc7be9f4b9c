"""Shared fixtures for tests: a small corpus of algebras, representations and pairs."""

from pathlib import Path

import pytest

from bihom_lie.core.bihom_core import (
    BiHomAlgebra,
    BracketTensor,
    adjoint_representation,
    semidirect_product,
    yau_twist,
)
from bihom_lie.core.compatible import CompatiblePair, nijenhuis_deform, rb_compatible_pair
from bihom_lie.core.qlinalg import RationalMatrix

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"


def _g2_bracket():
    # [e1, e2] = e2
    return BracketTensor.from_rules(2, {(0, 1): {1: 1}}, skew=True)


def _heisenberg_bracket():
    # [e1, e2] = e3
    return BracketTensor.from_rules(3, {(0, 1): {2: 1}}, skew=True)


@pytest.fixture
def data_dir():
    """Directory of canonical input documents."""
    return DATA_DIR


@pytest.fixture
def golden_dir():
    """Directory of committed machine-format reports."""
    return GOLDEN_DIR


@pytest.fixture
def abelian1():
    """One-dimensional abelian algebra with identity twists."""
    return BiHomAlgebra.untwisted(BracketTensor.zero(1))


@pytest.fixture
def g2():
    """Two-dimensional non-abelian Lie algebra, [e1, e2] = e2."""
    return BiHomAlgebra.untwisted(_g2_bracket())


@pytest.fixture
def heisenberg():
    """Three-dimensional Heisenberg algebra, [e1, e2] = e3."""
    return BiHomAlgebra.untwisted(_heisenberg_bracket())


@pytest.fixture
def g2_yau(g2):
    """Yau twist of g2 by a = diag(1, 2), b = diag(1, 3)."""
    return yau_twist(g2, RationalMatrix.diagonal([1, 2]), RationalMatrix.diagonal([1, 3]))


@pytest.fixture
def heisenberg_yau(heisenberg):
    """Yau twist of the Heisenberg algebra by a = diag(1, 2, 2), b = diag(1, 3, 3)."""
    return yau_twist(heisenberg, RationalMatrix.diagonal([1, 2, 2]),
                     RationalMatrix.diagonal([1, 3, 3]))


@pytest.fixture
def g2_semidirect(g2):
    """Semidirect product of g2 with its adjoint representation."""
    return semidirect_product(g2, adjoint_representation(g2))


@pytest.fixture
def non_jacobi():
    """Skew bracket [e1, e2] = e1, [e2, e3] = e2 whose Jacobiator is e1 at (e1, e2, e3)."""
    bracket = BracketTensor.from_rules(3, {(0, 1): {0: 1}, (1, 2): {1: 1}}, skew=True)
    return BiHomAlgebra.untwisted(bracket)


@pytest.fixture
def regular_corpus(abelian1, g2, heisenberg, g2_yau, heisenberg_yau, g2_semidirect):
    """Every regular single-bracket algebra of the corpus, by name."""
    return {
        "abelian1": abelian1,
        "g2": g2,
        "heisenberg": heisenberg,
        "g2_yau": g2_yau,
        "heisenberg_yau": heisenberg_yau,
        "g2_semidirect": g2_semidirect,
    }


@pytest.fixture
def abelian1_pair(abelian1):
    """Pair of zero brackets on a line."""
    zero = abelian1.bracket()
    return CompatiblePair.from_brackets(zero, zero, abelian1.alpha, abelian1.beta)


@pytest.fixture
def nijenhuis_g2(g2):
    """Nijenhuis pair of g2 with N = diag(1, 0); the deformed bracket equals the original."""
    return nijenhuis_deform(g2, RationalMatrix.diagonal([1, 0]))


@pytest.fixture
def nijenhuis_heisenberg(heisenberg):
    """Nijenhuis pair of the Heisenberg algebra with N = diag(2, 0, 0)."""
    return nijenhuis_deform(heisenberg, RationalMatrix.diagonal([2, 0, 0]))


@pytest.fixture
def rota_baxter_g2(g2):
    """Rota-Baxter pair on g2 from R = 0 and S = -id with weight 1."""
    return rb_compatible_pair(g2, RationalMatrix.zeros(2, 2),
                              RationalMatrix.identity(2).scale(-1), 0, 0, 1)


@pytest.fixture
def yau_pair(g2_yau):
    """The Yau-twisted g2 bracket paired with twice itself."""
    mu = g2_yau.bracket()
    return CompatiblePair.from_brackets(mu, mu.scale(2), g2_yau.alpha, g2_yau.beta)


@pytest.fixture
def swap_pair():
    """[e1, e2]_1 = e2 and [e1, e2]_2 = e1 on a plane."""
    mu1 = BracketTensor.from_rules(2, {(0, 1): {1: 1}}, skew=True)
    mu2 = BracketTensor.from_rules(2, {(0, 1): {0: 1}}, skew=True)
    identity = RationalMatrix.identity(2)
    return CompatiblePair.from_brackets(mu1, mu2, identity, identity)


@pytest.fixture
def split_pair():
    """[e1, e2]_1 = e2 and [e1, e3]_2 = e3; e1 acts on one line per bracket."""
    mu1 = BracketTensor.from_rules(3, {(0, 1): {1: 1}}, skew=True)
    mu2 = BracketTensor.from_rules(3, {(0, 2): {2: 1}}, skew=True)
    return CompatiblePair(BiHomAlgebra.untwisted(mu1, mu2))


@pytest.fixture
def split_yau_pair(split_pair):
    """Yau twist of the split pair by a = diag(1, 2, 3), b = diag(1, 3, 2)."""
    twisted = yau_twist(split_pair.algebra, RationalMatrix.diagonal([1, 2, 3]),
                        RationalMatrix.diagonal([1, 3, 2]))
    return CompatiblePair(twisted)


@pytest.fixture
def pair_corpus(abelian1_pair, nijenhuis_g2, nijenhuis_heisenberg, rota_baxter_g2, yau_pair,
                swap_pair, split_pair, split_yau_pair):
    """Every compatible pair of the corpus, by name."""
    return {
        "abelian1": abelian1_pair,
        "nijenhuis_g2": nijenhuis_g2,
        "nijenhuis_heisenberg": nijenhuis_heisenberg,
        "rota_baxter_g2": rota_baxter_g2,
        "yau_g2": yau_pair,
        "swap_g2": swap_pair,
        "split3": split_pair,
        "split3_yau": split_yau_pair,
    }
