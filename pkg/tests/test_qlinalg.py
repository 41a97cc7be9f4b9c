"""Tests for exact rational linear algebra."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihom_lie.core.qlinalg import (
    RationalMatrix,
    basis_vector,
    determinant,
    format_rational,
    format_vector,
    inverse,
    minor,
    nullspace_basis,
    parse_rational,
    rank,
    rref,
    span_rank,
    vector,
)
from bihom_lie.io.exceptions import MalformedRationalError, NonRegularError, ShapeMismatchError

small = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_rows=4, max_cols=4):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    entries = draw(st.lists(st.lists(small, min_size=cols, max_size=cols),
                            min_size=rows, max_size=rows))
    return RationalMatrix(entries, cols=cols)


class TestParseRational:
    """Test parsing and formatting of rationals."""

    def test_integer_and_fraction_text(self):
        """Integers and p/q strings parse to reduced fractions."""
        assert parse_rational(3) == Fraction(3)
        assert parse_rational("-4/6") == Fraction(-2, 3)
        assert parse_rational(" 7 ") == Fraction(7)
        assert parse_rational(Fraction(1, 2)) == Fraction(1, 2)
        assert parse_rational(np.int64(5)) == Fraction(5)

    def test_zero_denominator(self):
        """A zero denominator is malformed."""
        with pytest.raises(MalformedRationalError):
            parse_rational("3/0")

    @pytest.mark.parametrize("value", ["1.5", "a/b", "", 0.5, True, None])
    def test_rejected_values(self, value):
        """Floats, booleans and non-integer text are rejected."""
        with pytest.raises(MalformedRationalError):
            parse_rational(value)

    def test_malformed_is_value_error(self):
        """MalformedRationalError can be caught as ValueError."""
        with pytest.raises(ValueError):
            parse_rational("x")

    def test_formatting(self):
        """Integers print without denominator."""
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-3, 4)) == "-3/4"
        assert format_vector(vector([0, "3/2", -1])) == "0,3/2,-1"


class TestRationalMatrix:
    """Test the immutable matrix type."""

    def test_ragged_rows(self):
        """Rows of different lengths are rejected."""
        with pytest.raises(ShapeMismatchError):
            RationalMatrix([[1, 2], [3]])

    def test_products_and_powers(self):
        """Matrix products, vector products and powers are exact."""
        a = RationalMatrix([[1, 2], [0, 1]])
        assert a @ a == RationalMatrix([[1, 4], [0, 1]])
        assert a.power(0) == RationalMatrix.identity(2)
        assert a.power(3) == RationalMatrix([[1, 6], [0, 1]])
        assert list(a @ vector([1, 1])) == [3, 1]

    def test_inverse(self):
        """Inverse of an invertible matrix; singular matrices raise."""
        a = RationalMatrix([[2, 1], [1, 1]])
        assert a @ a.inverse() == RationalMatrix.identity(2)
        assert a.is_invertible()
        with pytest.raises(NonRegularError):
            inverse(RationalMatrix([[1, 2], [2, 4]]))

    def test_block_diagonal(self):
        """Block-diagonal sum places blocks on the diagonal."""
        block = RationalMatrix.diagonal([1, 2]).block_diagonal(RationalMatrix([[3]]))
        assert block == RationalMatrix.diagonal([1, 2, 3])

    def test_commutation(self):
        """Diagonal matrices commute; a shear and a diagonal do not."""
        d = RationalMatrix.diagonal([1, 2])
        assert d.commutes_with(RationalMatrix.diagonal([5, 7]))
        assert not d.commutes_with(RationalMatrix([[1, 1], [0, 1]]))

    def test_column_images(self):
        """Column j holds the image of e_j."""
        a = RationalMatrix([[1, 2], [3, 4]])
        assert list(a.column(1)) == [2, 4]
        assert list(a @ basis_vector(2, 1)) == [2, 4]

    def test_strings(self):
        """Entries serialize as rational strings."""
        assert RationalMatrix([["1/2", 0]]).to_strings() == [["1/2", "0"]]


class TestEliminations:
    """Test rref, rank, nullspace and determinants."""

    def test_rref_example(self):
        """A rank-one matrix reduces to a single pivot row."""
        reduced = rref(RationalMatrix([[2, 4], [1, 2]]))
        assert reduced == RationalMatrix([[1, 2], [0, 0]])

    def test_nullspace_example(self):
        """Kernel of [1 1 1] has the free-column basis."""
        basis = nullspace_basis(RationalMatrix([[1, 1, 1]]))
        assert [list(v) for v in basis] == [[-1, 1, 0], [-1, 0, 1]]

    def test_determinant_and_minor(self):
        """Determinants, including the empty minor."""
        m = RationalMatrix([[2, 0, 1], [1, 3, 0], [0, 1, 1]])
        assert determinant(m) == 7
        assert minor(m, [0, 1], [0, 1]) == 6
        assert minor(m, [], []) == 1

    def test_span_rank(self):
        """Dependent vectors do not add rank."""
        vectors = [vector([1, 0, 1]), vector([2, 0, 2]), vector([0, 1, 0])]
        assert span_rank(vectors, 3) == 2
        assert span_rank([], 3) == 0

    @settings(max_examples=40, deadline=None)
    @given(matrices())
    def test_rref_idempotent(self, m):
        """Reducing a reduced matrix changes nothing."""
        once = rref(m)
        assert rref(once) == once

    @settings(max_examples=40, deadline=None)
    @given(matrices())
    def test_rank_nullity(self, m):
        """rank + nullity equals the number of columns."""
        assert rank(m) + len(nullspace_basis(m)) == m.cols

    @settings(max_examples=40, deadline=None)
    @given(matrices())
    def test_kernel_is_exact(self, m):
        """Every nullspace vector is mapped to zero exactly."""
        for v in nullspace_basis(m):
            assert all(x == 0 for x in m @ v)

    @settings(max_examples=30, deadline=None)
    @given(matrices(max_rows=3, max_cols=3))
    def test_transpose_preserves_rank(self, m):
        """Row rank equals column rank."""
        assert rank(m) == rank(m.transpose())
