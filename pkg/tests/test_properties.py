"""Seeded property checks of the Nijenhuis-Richardson bracket and the pair sweep."""

import pytest

from bihom_lie.core.bihom_core import yau_twist
from bihom_lie.core.cochains import graded_jacobi_defect, nr_bracket
from bihom_lie.core.compatible import CompatiblePair, MCPair, check_compatible_pair, mc_pair_check
from bihom_lie.core.qlinalg import RationalMatrix
from bihom_lie.core.samples import (
    DEFAULT_SEED,
    make_rng,
    random_compatible_sweep,
    random_skew_bracket,
    random_skew_cochain,
)


def _operand(rng, dim, degree):
    return random_skew_cochain(degree, dim, dim, rng)


class TestGradedBracket:
    """The bracket is graded antisymmetric and graded Jacobi with identity twists."""

    def test_graded_antisymmetry(self, heisenberg):
        """[P, Q] = -(-1)^(pq) [Q, P] on 50 random pairs."""
        rng = make_rng(1)
        for _ in range(50):
            m, n = (int(x) for x in rng.integers(1, 3, size=2))
            P, Q = _operand(rng, 3, m + 1), _operand(rng, 3, n + 1)
            sign = -1 if (m * n) % 2 else 1
            assert nr_bracket(P, Q, heisenberg) == -(nr_bracket(Q, P, heisenberg).scale(sign))

    def test_graded_jacobi(self, heisenberg):
        """The cyclic defect vanishes on 20 random triples."""
        rng = make_rng(2)
        for _ in range(20):
            degrees = [int(x) for x in rng.integers(1, 3, size=3)]
            P, Q, R = (_operand(rng, 3, d) for d in degrees)
            assert graded_jacobi_defect(P, Q, R, heisenberg).is_zero()

    def test_random_brackets_are_skew(self):
        rng = make_rng(3)
        bracket = random_skew_bracket(3, rng)
        assert bracket.is_plain_skew()


class TestCompatibleSweep:
    """The axiom check and the Maurer-Cartan check agree on random pairs."""

    def test_default_sweep(self):
        summary = random_compatible_sweep(100)
        assert summary.seed == DEFAULT_SEED
        assert summary.samples == 100
        assert summary.all_agree
        assert summary.disagreements == []

    def test_sweep_is_reproducible(self):
        first = random_compatible_sweep(10, seed=11)
        second = random_compatible_sweep(10, seed=11)
        assert (first.agreements, first.compatible) == (second.agreements, second.compatible)

    @pytest.mark.parametrize("fixture", ["nijenhuis_heisenberg", "nijenhuis_g2"])
    def test_twisted_pairs_agree(self, request, fixture):
        """Yau twists of compatible pairs stay compatible and Maurer-Cartan."""
        pair = request.getfixturevalue(fixture)
        n = pair.dim
        a = RationalMatrix.diagonal([1] + [2] * (n - 1))
        b = RationalMatrix.diagonal([1] + [3] * (n - 1))
        twisted = CompatiblePair(yau_twist(pair.algebra, a, b))
        assert check_compatible_pair(twisted).passed
        assert mc_pair_check(MCPair.from_pair(twisted), twisted.algebra)
