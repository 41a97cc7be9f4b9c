"""Exact rational linear algebra.

Every cohomology dimension and constraint space in the package reduces to
row reduction over ``fractions.Fraction`` entries. There are no floats and
no tolerances anywhere: equality is exact equality of rationals.
"""

import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..io.exceptions import MalformedRationalError, NonRegularError, ShapeMismatchError

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[int, str, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse an exact rational.

    Parameters
    ----------
    value : int, str or Fraction
        Integer, ``Fraction`` or text of the form ``"p"`` or ``"p/q"``

    Returns
    -------
    Fraction
        The value in lowest terms with a positive denominator

    Raises
    ------
    MalformedRationalError
        If the text is not an integer ratio, the denominator is zero, or
        the value is a float/bool
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise MalformedRationalError(f"Boolean is not a rational: {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        numerator, sep, denominator = value.strip().partition("/")
        try:
            p = int(numerator)
            q = int(denominator) if sep else 1
        except ValueError:
            raise MalformedRationalError(f"Malformed rational: {value!r}") from None
        if q == 0:
            raise MalformedRationalError(f"Zero denominator in rational: {value!r}")
        return Fraction(p, q)
    raise MalformedRationalError(f"Unsupported rational value: {value!r}")


def format_rational(value: Fraction) -> str:
    """Format as ``"p"`` when the denominator is 1, else ``"p/q"``."""
    return str(Fraction(value))


def vector(values: Iterable[RationalLike]) -> np.ndarray:
    """Build a 1-D object array of Fractions."""
    items = [parse_rational(x) for x in values]
    out = np.empty(len(items), dtype=object)
    for i, x in enumerate(items):
        out[i] = x
    return out


def zero_vector(n: int) -> np.ndarray:
    """Zero vector of length n."""
    return zero_tensor((n,))


def zero_tensor(shape: Tuple[int, ...]) -> np.ndarray:
    """Object array of the given shape filled with exact zeros."""
    return np.full(shape, ZERO, dtype=object)


def basis_vector(n: int, i: int) -> np.ndarray:
    """Canonical basis vector e_i of length n."""
    out = zero_vector(n)
    out[i] = ONE
    return out


def is_zero(array: np.ndarray) -> bool:
    """True when every entry of the array is exactly zero."""
    return all(x == 0 for x in np.asarray(array, dtype=object).flat)


def format_vector(values: Iterable) -> str:
    """Comma-joined rationals, e.g. ``"0,3/2"``."""
    return ",".join(format_rational(x) for x in values)


class RationalMatrix:
    """Dense immutable matrix of exact rationals."""

    __slots__ = ("_data",)

    def __init__(self, entries: Sequence[Sequence[RationalLike]] = (),
                 cols: Optional[int] = None):
        """
        Build a matrix from rows.

        Parameters
        ----------
        entries : sequence of sequences
            Rows of rationals (ints, Fractions or ``"p/q"`` strings)
        cols : int, optional
            Column count; required when there are no rows

        Raises
        ------
        ShapeMismatchError
            If rows have different lengths or disagree with ``cols``
        """
        rows = [[parse_rational(x) for x in row] for row in entries]
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise ShapeMismatchError(f"Ragged matrix rows: lengths {sorted(widths)}")
        ncols = widths.pop() if widths else (cols or 0)
        if cols is not None and ncols != cols:
            raise ShapeMismatchError(f"Expected {cols} columns, got {ncols}")
        data = np.empty((len(rows), ncols), dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                data[i, j] = x
        data.flags.writeable = False
        self._data = data

    @classmethod
    def from_array(cls, array: np.ndarray) -> "RationalMatrix":
        """Wrap a 2-D array, converting every entry to a Fraction."""
        array = np.asarray(array, dtype=object)
        if array.ndim != 2:
            raise ShapeMismatchError(f"Expected a 2-D array, got shape {array.shape}")
        return cls([list(row) for row in array], cols=array.shape[1])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "RationalMatrix":
        n = len(values)
        return cls([[values[i] if i == j else ZERO for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: int) -> "RationalMatrix":
        """Matrix whose j-th column is ``columns[j]``."""
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(rows)],
                   cols=len(columns))

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        """Row-major entries."""
        return tuple(self._data.flat)

    def array(self) -> np.ndarray:
        """Writeable copy of the underlying object array."""
        return self._data.copy()

    def to_lists(self) -> List[List[Fraction]]:
        return [list(row) for row in self._data]

    def to_strings(self) -> List[List[str]]:
        return [[format_rational(x) for x in row] for row in self._data]

    def column(self, j: int) -> np.ndarray:
        return self._data[:, j].copy()

    def __getitem__(self, index):
        return self._data[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self._data.flat, other._data.flat)
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        return f"RationalMatrix({self.to_strings()})"

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._require_shape(other)
        return RationalMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
            cols=self.cols,
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._require_shape(other)
        return RationalMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
            cols=self.cols,
        )

    def __neg__(self) -> "RationalMatrix":
        return self.scale(-1)

    def scale(self, factor: RationalLike) -> "RationalMatrix":
        factor = parse_rational(factor)
        return RationalMatrix([[factor * x for x in row] for row in self._data], cols=self.cols)

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ShapeMismatchError(
                    f"Cannot multiply {self.shape} by {other.shape}"
                )
            return RationalMatrix(
                [[sum((self._data[i, k] * other._data[k, j] for k in range(self.cols)), ZERO)
                  for j in range(other.cols)] for i in range(self.rows)],
                cols=other.cols,
            )
        vec = np.asarray(other, dtype=object)
        if vec.ndim != 1 or vec.shape[0] != self.cols:
            raise ShapeMismatchError(f"Cannot apply {self.shape} matrix to vector of shape {vec.shape}")
        out = zero_vector(self.rows)
        for i in range(self.rows):
            out[i] = sum((self._data[i, k] * vec[k] for k in range(self.cols)), ZERO)
        return out

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([list(col) for col in self._data.T], cols=self.rows)

    def power(self, k: int) -> "RationalMatrix":
        """k-th power; the 0-th power is the identity."""
        if self.rows != self.cols:
            raise ShapeMismatchError(f"Power of non-square matrix {self.shape}")
        result = RationalMatrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def commutes_with(self, other: "RationalMatrix") -> bool:
        return (self @ other) == (other @ self)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == RationalMatrix.identity(self.rows)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and rank(self) == self.rows

    def inverse(self) -> "RationalMatrix":
        return inverse(self)

    def block_diagonal(self, other: "RationalMatrix") -> "RationalMatrix":
        """Block matrix ``diag(self, other)``."""
        rows = [list(row) + [ZERO] * other.cols for row in self._data]
        rows += [[ZERO] * self.cols + list(row) for row in other._data]
        return RationalMatrix(rows, cols=self.cols + other.cols)

    def _require_shape(self, other: "RationalMatrix") -> None:
        if self.shape != other.shape:
            raise ShapeMismatchError(f"Shape mismatch: {self.shape} vs {other.shape}")


def _row_reduce(rows: Sequence[Sequence], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Gauss-Jordan elimination; returns reduced rows and pivot columns."""
    work = [[Fraction(x) for x in row] for row in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        lead = work[r][c]
        if lead != 1:
            work[r] = [x / lead for x in work[r]]
        for i in range(len(work)):
            if i != r:
                factor = work[i][c]
                if factor != 0:
                    work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return work, pivots


def rref(matrix: RationalMatrix) -> RationalMatrix:
    """Reduced row echelon form: pivots are 1 and pivot columns are zero elsewhere."""
    reduced, _ = _row_reduce(matrix.to_lists(), matrix.cols)
    return RationalMatrix(reduced, cols=matrix.cols)


def rank(matrix: RationalMatrix) -> int:
    """Number of nonzero rows of the reduced row echelon form."""
    _, pivots = _row_reduce(matrix.to_lists(), matrix.cols)
    return len(pivots)


def nullspace_basis(matrix: RationalMatrix) -> List[np.ndarray]:
    """
    Basis of the kernel {v : Mv = 0}.

    One vector per free column, with a 1 in that column; the basis size is
    ``cols - rank``.
    """
    reduced, pivots = _row_reduce(matrix.to_lists(), matrix.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        v = zero_vector(matrix.cols)
        v[free] = ONE
        for row, p in enumerate(pivots):
            v[p] = -reduced[row][free]
        basis.append(v)
    return basis


def span_rank(vectors: Sequence[np.ndarray], length: int) -> int:
    """Rank of the span of equal-length vectors."""
    if not vectors:
        return 0
    _, pivots = _row_reduce([list(v) for v in vectors], length)
    return len(pivots)


def stack_rows(blocks: Sequence[Sequence[Sequence]], cols: int) -> RationalMatrix:
    """Concatenate row blocks into one matrix with ``cols`` columns."""
    rows = [list(row) for block in blocks for row in block]
    return RationalMatrix(rows, cols=cols)


def determinant(matrix: RationalMatrix) -> Fraction:
    """Exact determinant; the empty matrix has determinant 1."""
    if matrix.rows != matrix.cols:
        raise ShapeMismatchError(f"Determinant of non-square matrix {matrix.shape}")
    work = matrix.to_lists()
    n = matrix.rows
    det = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            det = -det
        lead = work[c][c]
        det *= lead
        for i in range(c + 1, n):
            factor = work[i][c] / lead
            if factor != 0:
                work[i] = [a - factor * b for a, b in zip(work[i], work[c])]
    return det


def minor(matrix: RationalMatrix, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    """Determinant of the submatrix on the given rows and columns (in that order)."""
    sub = [[matrix[i, j] for j in cols] for i in rows]
    return determinant(RationalMatrix(sub, cols=len(cols)))


def inverse(matrix: RationalMatrix) -> RationalMatrix:
    """
    Exact inverse via row reduction of ``[M | I]``.

    Raises
    ------
    NonRegularError
        If the matrix is not square or is singular
    """
    n = matrix.rows
    if n != matrix.cols:
        raise NonRegularError(f"Non-square matrix {matrix.shape} has no inverse")
    augmented = [row + [ONE if i == j else ZERO for j in range(n)]
                 for i, row in enumerate(matrix.to_lists())]
    reduced, pivots = _row_reduce(augmented, 2 * n)
    if pivots[:n] != list(range(n)):
        raise NonRegularError("Matrix is singular")
    return RationalMatrix([row[n:] for row in reduced], cols=n)
