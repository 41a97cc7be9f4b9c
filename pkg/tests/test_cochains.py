"""Tests for twisted cochains, the Nijenhuis-Richardson bracket and the coboundary."""

import pytest

from bihom_lie.core.bihom_core import (
    BiHomAlgebra,
    BracketTensor,
    Representation,
    adjoint_representation,
    check_bihom_lie,
)
from bihom_lie.core.cochains import (
    Cochain,
    basis_coboundaries,
    ce_coboundary,
    coboundary_matrix,
    coboundary_vs_nr,
    cochain_in_space,
    cochain_space_basis,
    cohomology_dim,
    increasing_tuples,
    mc_check,
    nr_bracket,
    nr_coboundary_sign,
    nr_diamond,
    permutation_sign,
    shuffles,
)
from bihom_lie.core.qlinalg import RationalMatrix, vector, zero_tensor
from bihom_lie.io.exceptions import (
    ClosureError,
    CochainSpaceError,
    ComplexError,
    NonRegularError,
    ShapeMismatchError,
)


class TestCombinatorics:
    """Test signs and shuffles."""

    def test_permutation_sign(self):
        """Transpositions are odd, 3-cycles even."""
        assert permutation_sign((0, 1, 2)) == 1
        assert permutation_sign((1, 0, 2)) == -1
        assert permutation_sign((1, 2, 0)) == 1

    def test_shuffles(self):
        """Sh(1, 2) has three unshuffles with alternating signs."""
        result = list(shuffles(3, 1))
        assert result == [((0,), (1, 2), 1), ((1,), (0, 2), -1), ((2,), (0, 1), 1)]

    def test_increasing_tuples(self):
        """Strictly increasing tuples in lexicographic order."""
        assert increasing_tuples(3, 2) == [(0, 1), (0, 2), (1, 2)]
        assert increasing_tuples(2, 0) == [()]


class TestCochain:
    """Test cochain storage and arithmetic."""

    def test_skew_extension(self):
        """Values on increasing tuples determine the full tensor."""
        f = Cochain.from_increasing(2, 2, 1, {(0, 1): [3]})
        assert list(f.value((1, 0))) == [-3]
        assert list(f.value((0, 0))) == [0]
        assert f.is_skew()

    def test_coordinates_round_trip(self):
        """Coordinates are the increasing-tuple values."""
        f = Cochain.from_coordinates(2, 3, 1, [1, 2, 3])
        assert list(f.coordinates()) == [1, 2, 3]
        assert f.to_pairs() == [([0, 1], ["1"]), ([0, 2], ["2"]), ([1, 2], ["3"])]

    def test_wrong_coordinate_count(self):
        """Coordinate vectors must have the right length."""
        with pytest.raises(ShapeMismatchError):
            Cochain.from_coordinates(1, 2, 2, [1, 2, 3])

    def test_evaluate(self):
        """Multilinear evaluation on arbitrary vectors."""
        f = Cochain.from_increasing(2, 2, 1, {(0, 1): [1]})
        assert list(f.evaluate([vector([1, 2]), vector([3, 4])])) == [1 * 4 - 2 * 3]

    def test_from_matrix(self):
        """A linear map is the 1-cochain of its columns."""
        f = Cochain.from_matrix(RationalMatrix([[1, 2], [3, 4]]))
        assert list(f.value((1,))) == [2, 4]

    def test_arithmetic(self):
        """Sums, differences and scaling."""
        f = Cochain.from_coordinates(1, 2, 1, [1, 2])
        assert f + f == f.scale(2)
        assert (f - f).is_zero()
        assert -f == f.scale(-1)

    def test_mismatched_spaces(self):
        """Cochains of different degrees cannot be added."""
        with pytest.raises(ShapeMismatchError):
            Cochain.zero(1, 2, 2) + Cochain.zero(2, 2, 2)


class TestCochainSpace:
    """Test the twist-intertwining cochain spaces."""

    def test_untwisted_dimensions(self, g2):
        """With identity twists C^n has the full skew dimension."""
        adjoint = adjoint_representation(g2)
        dims = [cochain_space_basis(g2, adjoint, n).dimension for n in range(4)]
        assert dims == [2, 4, 2, 0]

    def test_fixed_vectors(self, g2):
        """Degree 0 is the common fixed space of the module twists."""
        module = Representation(2, 2, (zero_tensor((2, 2, 2)),),
                                RationalMatrix.diagonal([1, 2]), RationalMatrix.identity(2))
        assert cochain_space_basis(g2, module, 0).dimension == 1

    def test_diagonal_maps(self, g2):
        """Linear maps commuting with diag(1, 2) are diagonal."""
        algebra = BiHomAlgebra(2, g2.brackets, RationalMatrix.diagonal([1, 2]),
                               RationalMatrix.identity(2))
        space = cochain_space_basis(algebra, adjoint_representation(algebra), 1)
        assert space.dimension == 2
        assert space.ambient_dimension == 4

    def test_twisted_heisenberg_dimensions(self, heisenberg_yau):
        """C^1 = 5, C^2 = 4 and C^3 = 0 for the twisted Heisenberg algebra."""
        adjoint = adjoint_representation(heisenberg_yau)
        dims = [cochain_space_basis(heisenberg_yau, adjoint, n).dimension for n in range(4)]
        assert dims == [1, 5, 4, 0]

    def test_basis_lies_in_space(self, g2_yau):
        """Every basis element intertwines the twists."""
        adjoint = adjoint_representation(g2_yau)
        for n in range(3):
            for f in cochain_space_basis(g2_yau, adjoint, n).basis:
                assert cochain_in_space(g2_yau, adjoint, f)
                assert f.is_skew()

    def test_negative_degree(self, g2):
        """Negative degrees are rejected."""
        with pytest.raises(ComplexError):
            cochain_space_basis(g2, adjoint_representation(g2), -1)


class TestNijenhuisRichardson:
    """Test the diamond product and the NR bracket."""

    def test_zero_bracket(self, heisenberg):
        """Diamonds with a zero operand vanish."""
        zero = Cochain.zero(2, 3, 3)
        assert nr_diamond(zero, zero, heisenberg).is_zero()

    def test_linear_maps_compose(self, g2):
        """For degree-1 operands the diamond is composition."""
        p = RationalMatrix([[1, 2], [0, 1]])
        q = RationalMatrix([[0, 1], [1, 0]])
        result = nr_diamond(Cochain.from_matrix(p), Cochain.from_matrix(q), g2)
        assert result == Cochain.from_matrix(p @ q)

    def test_heisenberg_square(self, heisenberg):
        """mu <> mu vanishes on (e1, e2, e3) for the Heisenberg bracket."""
        mu = Cochain.from_bracket(heisenberg.bracket())
        assert nr_diamond(mu, mu, heisenberg).is_zero()

    def test_square_of_odd_element(self, g2):
        """For a degree-2 operand [P, P] = 2 P <> P."""
        mu = Cochain.from_bracket(g2.bracket())
        assert nr_bracket(mu, mu, g2) == nr_diamond(mu, mu, g2).scale(2)

    def test_graded_antisymmetry_spot(self, g2):
        """[P, Q] = -[Q, P] for P of degree 1 and Q of degree 2."""
        p = Cochain.from_matrix(RationalMatrix([[1, 2], [3, 4]]))
        q = Cochain.from_bracket(g2.bracket())
        assert nr_bracket(p, q, g2) == -nr_bracket(q, p, g2)

    def test_degree_zero_rejected(self, g2):
        """The shifted complex starts in degree 1."""
        with pytest.raises(ComplexError):
            nr_bracket(Cochain.zero(0, 2, 2), Cochain.zero(1, 2, 2), g2)

    def test_non_multiplicative_twist_rejected(self):
        """Operands must intertwine the twists; alpha = diag(2, 1) breaks the g2 bracket."""
        bracket = BracketTensor.from_rules(2, {(0, 1): {1: 1}}, skew=True)
        algebra = BiHomAlgebra(2, (bracket,), RationalMatrix.diagonal([2, 1]),
                               RationalMatrix.identity(2))
        mu = Cochain.from_bracket(bracket)
        for i in range(2):
            g = Cochain.from_increasing(1, 2, 2, {(i,): [1 if k == i else 0 for k in range(2)]})
            with pytest.raises(CochainSpaceError):
                nr_bracket(mu, g, algebra)

    def test_non_commuting_twists_leave_space(self):
        """so(3) twisted by two non-commuting rotations: mu is in the space, [mu, mu] is not."""
        cross = BracketTensor.from_rules(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}},
                                         skew=True)
        cycle = RationalMatrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
        flip = RationalMatrix.diagonal([1, -1, -1])
        algebra = BiHomAlgebra(3, (cross,), cycle, flip)
        mu = Cochain.from_bracket(cross)
        assert cochain_in_space(algebra, adjoint_representation(algebra), mu)
        with pytest.raises(ClosureError):
            nr_bracket(mu, mu, algebra)


class TestMaurerCartan:
    """Test the Maurer-Cartan characterisation of brackets."""

    @pytest.mark.parametrize("name", ["abelian1", "g2", "heisenberg", "g2_semidirect"])
    def test_lie_brackets_square_to_zero(self, request, name):
        """Lie brackets are Maurer-Cartan elements."""
        assert mc_check(request.getfixturevalue(name))

    def test_non_jacobi(self, non_jacobi):
        """A bracket failing Jacobi is not Maurer-Cartan."""
        assert not mc_check(non_jacobi)

    @pytest.mark.parametrize("name", ["g2_yau", "heisenberg_yau"])
    def test_agrees_with_jacobi(self, request, name):
        """mc_check agrees with the Jacobi check on twisted algebras."""
        algebra = request.getfixturevalue(name)
        assert mc_check(algebra) == check_bihom_lie(algebra).jacobi_ok

    def test_bracket_outside_space(self):
        """A bracket not intertwining the twists is rejected."""
        bracket = BracketTensor.from_rules(2, {(0, 1): {0: 1}}, skew=True)
        algebra = BiHomAlgebra(2, (bracket,), RationalMatrix.diagonal([1, 2]),
                               RationalMatrix.identity(2))
        with pytest.raises(CochainSpaceError):
            mc_check(algebra)


class TestCoboundary:
    """Test the Chevalley-Eilenberg coboundary."""

    def test_zero_cochain(self, g2):
        """The coboundary of zero is zero."""
        adjoint = adjoint_representation(g2)
        assert ce_coboundary(g2, adjoint, Cochain.zero(1, 2, 2)).is_zero()

    def test_abelian_line(self, abelian1):
        """Every coboundary vanishes on the abelian line."""
        adjoint = adjoint_representation(abelian1)
        for n in range(3):
            for f, df in basis_coboundaries(abelian1, adjoint, n):
                assert df.is_zero()

    def test_degree_zero_twisted(self, g2_yau):
        """d e1 = diag(0, -4/3) on the twisted g2."""
        adjoint = adjoint_representation(g2_yau)
        basis = cochain_space_basis(g2_yau, adjoint, 0).basis
        assert len(basis) == 1
        assert list(basis[0].tensor) == [1, 0]
        expected = Cochain.from_matrix(RationalMatrix([[0, 0], [0, "-4/3"]]))
        assert ce_coboundary(g2_yau, adjoint, basis[0]) == expected

    def test_identity_on_twisted_g2(self, g2_yau):
        """d(id)(e1, e2) = -4 e2 on the twisted g2."""
        adjoint = adjoint_representation(g2_yau)
        df = ce_coboundary(g2_yau, adjoint, Cochain.from_matrix(RationalMatrix.identity(2)))
        assert list(df.value((0, 1))) == [0, -4]

    def test_requires_regular(self, g2):
        """Singular twists are rejected."""
        algebra = BiHomAlgebra(2, g2.brackets, RationalMatrix.diagonal([1, 0]),
                               RationalMatrix.diagonal([1, 0]))
        with pytest.raises(NonRegularError):
            ce_coboundary(algebra, adjoint_representation(algebra), Cochain.zero(1, 2, 2))

    def test_rejects_cochain_outside_space(self, g2_yau):
        """A non-intertwining cochain is rejected."""
        swap = Cochain.from_matrix(RationalMatrix([[0, 1], [1, 0]]))
        with pytest.raises(CochainSpaceError):
            ce_coboundary(g2_yau, adjoint_representation(g2_yau), swap)

    def test_squares_to_zero(self, regular_corpus):
        """d o d = 0 in degrees 0 to 3 on every regular corpus algebra."""
        for name, algebra in regular_corpus.items():
            adjoint = adjoint_representation(algebra)
            for n in range(4):
                for f, df in basis_coboundaries(algebra, adjoint, n):
                    assert ce_coboundary(algebra, adjoint, df).is_zero(), (name, n)

    def test_coboundary_matrix_shape(self, g2):
        """Columns are coordinates of the images."""
        adjoint = adjoint_representation(g2)
        basis = cochain_space_basis(g2, adjoint, 1).basis
        matrix = coboundary_matrix(g2, adjoint, basis)
        assert matrix.shape == (2, 4)


class TestCoboundaryVersusNR:
    """Test the comparison of the coboundary with the NR bracket."""

    def test_sign(self):
        """The sign alternates starting from +1 in degree 0."""
        assert [nr_coboundary_sign(n) for n in range(4)] == [1, -1, 1, -1]

    @pytest.mark.parametrize("name", ["abelian1", "g2", "heisenberg", "g2_semidirect"])
    def test_untwisted_algebras(self, request, name):
        """For untwisted algebras d f = sign [mu, f] on every basis cochain."""
        algebra = request.getfixturevalue(name)
        adjoint = adjoint_representation(algebra)
        for n in (1, 2):
            for f in cochain_space_basis(algebra, adjoint, n).basis:
                assert coboundary_vs_nr(algebra, f), (name, n)

    def test_twisted_identity_differs(self, g2_yau):
        """With non-trivial twists the comparison fails for f = id."""
        f = Cochain.from_matrix(RationalMatrix.identity(2))
        assert not coboundary_vs_nr(g2_yau, f)
        mu = Cochain.from_bracket(g2_yau.bracket())
        assert list(nr_bracket(mu, f, g2_yau).value((0, 1))) == [0, 5]


class TestCohomology:
    """Test cohomology dimensions on small examples."""

    def test_abelian_line(self, abelian1):
        """H^0 = 1, H^1 = 1, H^2 = 0 on the abelian line."""
        adjoint = adjoint_representation(abelian1)
        assert [cohomology_dim(abelian1, adjoint, n) for n in range(3)] == [1, 1, 0]

    def test_g2_adjoint(self, g2):
        """The adjoint cohomology of g2 vanishes in low degrees."""
        adjoint = adjoint_representation(g2)
        assert [cohomology_dim(g2, adjoint, n) for n in range(3)] == [0, 0, 0]

    def test_trivial_coefficients(self, heisenberg):
        """H^1 of the Heisenberg algebra with trivial coefficients is 2."""
        one = RationalMatrix.identity(1)
        trivial = Representation(3, 1, (zero_tensor((3, 1, 1)),), one, one)
        assert cohomology_dim(heisenberg, trivial, 0) == 1
        assert cohomology_dim(heisenberg, trivial, 1) == 2
