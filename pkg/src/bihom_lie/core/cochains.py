"""
Twisted cochain spaces, the Nijenhuis-Richardson bracket and the
Chevalley-Eilenberg coboundary.

A degree-n cochain with values in V is stored as a full object tensor of
shape ``(dim_g,) * n + (dim_v,)``. Skew cochains are built from their values
on strictly increasing index tuples and extended by antisymmetry; their
coordinates are those increasing-tuple values, ordered lexicographically
by tuple and then by output index.
"""

import itertools
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..io.exceptions import (
    ClosureError,
    CochainSpaceError,
    ComplexError,
    DifferentialSquareError,
    NonRegularError,
    ShapeMismatchError,
)
from .bihom_core import BiHomAlgebra, BracketTensor, Representation, adjoint_representation
from .qlinalg import (
    RationalLike,
    RationalMatrix,
    basis_vector,
    format_rational,
    is_zero,
    minor,
    nullspace_basis,
    parse_rational,
    span_rank,
    stack_rows,
    zero_tensor,
)

logger = logging.getLogger(__name__)

Index = Tuple[int, ...]


def permutation_sign(order: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct integers."""
    inversions = sum(
        1 for a, b in itertools.combinations(range(len(order)), 2) if order[a] > order[b]
    )
    return -1 if inversions % 2 else 1


def increasing_tuples(dim: int, degree: int) -> List[Index]:
    return list(itertools.combinations(range(dim), degree))


def shuffles(total: int, head: int) -> Iterator[Tuple[Index, Index, int]]:
    """
    Unshuffles of ``range(total)`` into an increasing head and tail.

    Yields ``(head_positions, tail_positions, sign)``.
    """
    for chosen in itertools.combinations(range(total), head):
        chosen_set = set(chosen)
        rest = tuple(i for i in range(total) if i not in chosen_set)
        yield chosen, rest, permutation_sign(chosen + rest)


@dataclass(frozen=True, eq=False)
class Cochain:
    """An n-linear map from g to V, stored as a full tensor."""

    degree: int
    dim_g: int
    dim_v: int
    tensor: np.ndarray

    def __post_init__(self):
        shape = (self.dim_g,) * self.degree + (self.dim_v,)
        data = np.asarray(self.tensor, dtype=object)
        if data.size == 0 and 0 in shape:
            data = zero_tensor(shape)
        if data.shape != shape:
            raise ShapeMismatchError(f"Cochain tensor has shape {data.shape}, expected {shape}")
        data = data.copy()
        data.flags.writeable = False
        object.__setattr__(self, "tensor", data)

    @classmethod
    def zero(cls, degree: int, dim_g: int, dim_v: int) -> "Cochain":
        return cls(degree, dim_g, dim_v, zero_tensor((dim_g,) * degree + (dim_v,)))

    @classmethod
    def from_increasing(cls, degree: int, dim_g: int, dim_v: int,
                        values: Mapping[Index, Sequence]) -> "Cochain":
        """Skew extension of values given on strictly increasing tuples."""
        tensor = zero_tensor((dim_g,) * degree + (dim_v,))
        for index, value in values.items():
            value = np.asarray(value, dtype=object)
            if degree == 0:
                tensor[...] = value
                continue
            for order in itertools.permutations(range(degree)):
                target = tuple(index[i] for i in order)
                tensor[target] = value * permutation_sign(order)
        return cls(degree, dim_g, dim_v, tensor)

    @classmethod
    def from_coordinates(cls, degree: int, dim_g: int, dim_v: int,
                         coords: Sequence[RationalLike]) -> "Cochain":
        tuples = increasing_tuples(dim_g, degree)
        if len(coords) != len(tuples) * dim_v:
            raise ShapeMismatchError(
                f"Expected {len(tuples) * dim_v} coordinates, got {len(coords)}"
            )
        values = {
            t: [parse_rational(coords[r * dim_v + k]) for k in range(dim_v)]
            for r, t in enumerate(tuples)
        }
        return cls.from_increasing(degree, dim_g, dim_v, values)

    @classmethod
    def from_bracket(cls, bracket: BracketTensor) -> "Cochain":
        """The bracket as a g-valued 2-cochain, full tensor kept as is."""
        return cls(2, bracket.dim, bracket.dim, bracket.c)

    @classmethod
    def from_matrix(cls, matrix: RationalMatrix) -> "Cochain":
        """A linear map as a 1-cochain: ``f(e_i) = column i``."""
        return cls(1, matrix.cols, matrix.rows, matrix.array().T)

    @classmethod
    def from_vector(cls, value: Sequence, dim_g: int) -> "Cochain":
        """A vector of V as a 0-cochain over a ``dim_g``-dimensional algebra."""
        value = np.asarray(value, dtype=object)
        return cls(0, dim_g, value.shape[0], value)

    def coordinates(self) -> np.ndarray:
        """Values on increasing tuples, flattened."""
        tuples = increasing_tuples(self.dim_g, self.degree)
        out = np.empty(len(tuples) * self.dim_v, dtype=object)
        for r, t in enumerate(tuples):
            out[r * self.dim_v:(r + 1) * self.dim_v] = self.tensor[t]
        return out

    def value(self, index: Index) -> np.ndarray:
        return self.tensor[tuple(index)].copy()

    def evaluate(self, vectors: Sequence[np.ndarray]) -> np.ndarray:
        """Multilinear evaluation on ``degree`` vectors of g."""
        if len(vectors) != self.degree:
            raise ShapeMismatchError(f"Expected {self.degree} arguments, got {len(vectors)}")
        result = self.tensor
        for v in vectors:
            result = np.tensordot(np.asarray(v, dtype=object), result, axes=(0, 0))
        return result

    def pull_back(self, matrix: RationalMatrix) -> "Cochain":
        """``f o M^(x n)``: every argument mapped by M first."""
        result = self.tensor
        m = matrix.array()
        for _ in range(self.degree):
            result = np.tensordot(result, m, axes=([0], [0]))
        return Cochain(self.degree, self.dim_g, self.dim_v, np.moveaxis(result, 0, -1))

    def push_forward(self, matrix: RationalMatrix) -> "Cochain":
        """``M o f``."""
        result = np.tensordot(self.tensor, matrix.array(), axes=([-1], [1]))
        return Cochain(self.degree, self.dim_g, matrix.rows, result)

    def is_zero(self) -> bool:
        return is_zero(self.tensor)

    def is_skew(self) -> bool:
        """True when swapping two arguments negates the value."""
        for index in itertools.product(range(self.dim_g), repeat=self.degree):
            for a, b in itertools.combinations(range(self.degree), 2):
                swapped = list(index)
                swapped[a], swapped[b] = swapped[b], swapped[a]
                if any(x != -y for x, y in zip(self.tensor[index], self.tensor[tuple(swapped)])):
                    return False
        return True

    def scale(self, factor: RationalLike) -> "Cochain":
        return Cochain(self.degree, self.dim_g, self.dim_v, self.tensor * parse_rational(factor))

    def _require_same_space(self, other: "Cochain") -> None:
        if (self.degree, self.dim_g, self.dim_v) != (other.degree, other.dim_g, other.dim_v):
            raise ShapeMismatchError(
                f"Cochains live in different spaces: {(self.degree, self.dim_g, self.dim_v)} "
                f"vs {(other.degree, other.dim_g, other.dim_v)}"
            )

    def __add__(self, other: "Cochain") -> "Cochain":
        self._require_same_space(other)
        return Cochain(self.degree, self.dim_g, self.dim_v, self.tensor + other.tensor)

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._require_same_space(other)
        return Cochain(self.degree, self.dim_g, self.dim_v, self.tensor - other.tensor)

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            (self.degree, self.dim_g, self.dim_v) == (other.degree, other.dim_g, other.dim_v)
            and all(a == b for a, b in zip(self.tensor.flat, other.tensor.flat))
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.dim_g, self.dim_v, tuple(self.tensor.flat)))

    def to_pairs(self) -> List[Tuple[List[int], List[str]]]:
        """Serialization as ``(increasing tuple, value)`` pairs."""
        return [
            (list(t), [format_rational(x) for x in self.tensor[t]])
            for t in increasing_tuples(self.dim_g, self.degree)
        ]


@dataclass
class BiHomCochainSpace:
    """Basis of the twist-intertwining skew cochains of one degree."""

    degree: int
    dim_g: int
    dim_v: int
    basis: List[Cochain] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def ambient_dimension(self) -> int:
        return comb(self.dim_g, self.degree) * self.dim_v


def _twist_constraint_rows(twist: RationalMatrix, twist_v: RationalMatrix,
                           degree: int, dim_v: int) -> List[List]:
    """
    Rows of ``twist_V o f - f o twist^(x n) = 0`` in increasing-tuple coordinates.

    On a skew cochain ``f(twist e_t) = sum_c det(twist[c, t]) f(e_c)``.
    """
    tuples = increasing_tuples(twist.rows, degree)
    width = len(tuples) * dim_v
    minors = {(c, t): minor(twist, c, t) for c in tuples for t in tuples}
    rows = []
    for t_pos, t in enumerate(tuples):
        for k in range(dim_v):
            row = [0] * width
            for kk in range(dim_v):
                row[t_pos * dim_v + kk] += twist_v[k, kk]
            for c_pos, c in enumerate(tuples):
                row[c_pos * dim_v + k] -= minors[c, t]
            rows.append(row)
    return rows


def cochain_space_basis(A: BiHomAlgebra, V: Representation, n: int) -> BiHomCochainSpace:
    """
    Basis of the skew n-cochains intertwining (alpha, alpha_V) and (beta, beta_V).

    Parameters
    ----------
    A : BiHomAlgebra
        Source algebra; only its twists are used
    V : Representation
        Coefficients; only its twists are used
    n : int
        Degree, ``n >= 0``; degree 0 gives the common fixed space of alpha_V and beta_V

    Returns
    -------
    BiHomCochainSpace
        Nullspace basis of the stacked constraint matrix
    """
    if n < 0:
        raise ComplexError(f"Cochain degree must be non-negative, got {n}")
    width = comb(A.dim, n) * V.dim_v
    rows = (_twist_constraint_rows(A.alpha, V.alpha_v, n, V.dim_v)
            + _twist_constraint_rows(A.beta, V.beta_v, n, V.dim_v))
    constraints = stack_rows([rows], width)
    basis = [Cochain.from_coordinates(n, A.dim, V.dim_v, v) for v in nullspace_basis(constraints)]
    logger.debug(f"C^{n}: {len(basis)} of {width} skew coordinates survive the twist constraints")
    return BiHomCochainSpace(n, A.dim, V.dim_v, basis)


def cochain_in_space(A: BiHomAlgebra, V: Representation, f: Cochain) -> bool:
    """True when ``alpha_V o f = f o alpha`` and ``beta_V o f = f o beta``."""
    if f.dim_g != A.dim or f.dim_v != V.dim_v:
        raise ShapeMismatchError(
            f"Cochain maps {f.dim_g} -> {f.dim_v}, expected {A.dim} -> {V.dim_v}"
        )
    return (f.push_forward(V.alpha_v) == f.pull_back(A.alpha)
            and f.push_forward(V.beta_v) == f.pull_back(A.beta))


def _require_nr_operand(f: Cochain, A: BiHomAlgebra) -> None:
    if f.degree < 1:
        raise ComplexError("The Nijenhuis-Richardson bracket is defined from degree 1")
    if f.dim_g != A.dim or f.dim_v != A.dim:
        raise ShapeMismatchError(f"Operand must be g-valued on dimension {A.dim}")
    if not cochain_in_space(A, adjoint_representation(A), f):
        raise CochainSpaceError(f"Degree-{f.degree} operand does not intertwine the twists")


def nr_diamond(P: Cochain, Q: Cochain, A: BiHomAlgebra) -> Cochain:
    """
    ``(P <> Q)(p_1..p_{m+n+1}) = sum over Sh(n+1, m) of
    sign * P(Q(p_s1..p_s(n+1)), alpha beta^n p_s(n+2), ...)``.

    ``P`` has degree m+1 and ``Q`` degree n+1. Values are computed on
    increasing basis tuples and extended by antisymmetry.
    """
    _require_nr_operand(P, A)
    _require_nr_operand(Q, A)
    m, n = P.degree - 1, Q.degree - 1
    total = m + n + 1
    twist = A.alpha @ A.beta.power(n)
    twisted = [twist.column(i) for i in range(A.dim)]
    unshuffles = list(shuffles(total, n + 1))
    values: Dict[Index, np.ndarray] = {}
    for t in increasing_tuples(A.dim, total):
        acc = zero_tensor((A.dim,))
        for head, tail, sign in unshuffles:
            inner = Q.tensor[tuple(t[i] for i in head)]
            term = P.evaluate([inner] + [twisted[t[i]] for i in tail])
            acc = acc + term if sign > 0 else acc - term
        values[t] = acc
    return Cochain.from_increasing(total, A.dim, A.dim, values)


def nr_bracket(P: Cochain, Q: Cochain, A: BiHomAlgebra) -> Cochain:
    """
    ``[P, Q] = P <> Q - (-1)^(mn) Q <> P`` with m, n the shifted degrees.

    Raises
    ------
    CochainSpaceError
        If an operand does not intertwine the twists
    ClosureError
        If the result does not; this happens when alpha and beta do not commute
    """
    m, n = P.degree - 1, Q.degree - 1
    left = nr_diamond(P, Q, A)
    right = nr_diamond(Q, P, A)
    result = left - right if (m * n) % 2 == 0 else left + right
    if not cochain_in_space(A, adjoint_representation(A), result):
        raise ClosureError(
            f"Bracket of degrees {P.degree} and {Q.degree} leaves the twisted cochain space"
        )
    return result


def graded_jacobi_defect(P: Cochain, Q: Cochain, R: Cochain, A: BiHomAlgebra) -> Cochain:
    """
    Cyclic sum ``(-1)^(pr)[P,[Q,R]] + (-1)^(qp)[Q,[R,P]] + (-1)^(rq)[R,[P,Q]]``.

    Zero exactly when the graded Jacobi identity holds for the triple.
    """
    p, q, r = P.degree - 1, Q.degree - 1, R.degree - 1
    terms = (
        ((p * r) % 2, nr_bracket(P, nr_bracket(Q, R, A), A)),
        ((q * p) % 2, nr_bracket(Q, nr_bracket(R, P, A), A)),
        ((r * q) % 2, nr_bracket(R, nr_bracket(P, Q, A), A)),
    )
    total = terms[0][1].scale(-1 if terms[0][0] else 1)
    for odd, term in terms[1:]:
        total = total - term if odd else total + term
    return total


def mc_check(A: BiHomAlgebra, which: int = 0) -> bool:
    """
    True when the bracket squares to zero under the NR bracket.

    Raises
    ------
    CochainSpaceError
        If the bracket does not intertwine the twists
    """
    mu = Cochain.from_bracket(A.bracket(which))
    if not cochain_in_space(A, adjoint_representation(A), mu):
        raise CochainSpaceError(f"Bracket {which} does not intertwine alpha and beta")
    square = nr_bracket(mu, mu, A)
    ok = square.is_zero()
    if not ok:
        logger.debug(f"[mu, mu] is nonzero for bracket {which}")
    return ok


def ce_coboundary(A: BiHomAlgebra, V: Representation, f: Cochain,
                  which: int = 0, action: int = 0) -> Cochain:
    """
    Chevalley-Eilenberg coboundary of a twisted cochain.

    Degree 0: ``dv(p) = alpha beta^-1(p) . v``. Degree n >= 1:

    ``df(p_1..p_{n+1}) = sum_i (-1)^i alpha beta^(n-1)(p_i) . f(.., ^p_i, ..)
    + sum_{i<j} (-1)^(i+j+1) f([alpha^-1 beta p_i, p_j], beta p_1, .., ^p_i, .., ^p_j, ..)``

    with positions counted from 1.

    Raises
    ------
    NonRegularError
        If alpha or beta is singular
    CochainSpaceError
        If ``f`` does not intertwine the twists
    """
    A.require_regular()
    bracket = A.bracket(which)
    if not cochain_in_space(A, V, f):
        raise CochainSpaceError(f"Degree-{f.degree} cochain does not intertwine the twists")
    n = f.degree
    if n == 0:
        shift = A.alpha @ A.beta_inv
        values = {(i,): V.act(action, shift.column(i), f.tensor) for i in range(A.dim)}
        return Cochain.from_increasing(1, A.dim, V.dim_v, values)

    acting = A.alpha @ A.beta.power(n - 1)
    acting_e = [acting.column(i) for i in range(A.dim)]
    beta_e = [A.beta.column(i) for i in range(A.dim)]
    shift = A.alpha_inv @ A.beta
    shift_e = [shift.column(i) for i in range(A.dim)]
    basis = [basis_vector(A.dim, i) for i in range(A.dim)]

    values: Dict[Index, np.ndarray] = {}
    for t in increasing_tuples(A.dim, n + 1):
        acc = zero_tensor((V.dim_v,))
        for a in range(n + 1):
            rest = t[:a] + t[a + 1:]
            term = V.act(action, acting_e[t[a]], f.tensor[rest])
            acc = acc - term if a % 2 == 0 else acc + term
        for a, b in itertools.combinations(range(n + 1), 2):
            head = bracket(shift_e[t[a]], basis[t[b]])
            tail = [beta_e[t[c]] for c in range(n + 1) if c not in (a, b)]
            term = f.evaluate([head] + tail)
            acc = acc + term if (a + b + 1) % 2 == 0 else acc - term
        values[t] = acc
    return Cochain.from_increasing(n + 1, A.dim, V.dim_v, values)


def nr_coboundary_sign(n: int) -> int:
    """Sign s with ``ce_coboundary(f) = s [mu, f]_NR`` for a degree-n cochain."""
    return -1 if n % 2 else 1


def coboundary_vs_nr(A: BiHomAlgebra, f: Cochain, which: int = 0) -> bool:
    """
    Compare the adjoint coboundary with ``nr_coboundary_sign(n) [mu, f]_NR``.

    The identity holds for untwisted Lie algebras; with non-trivial twists
    the comparison is reported, not assumed.
    """
    V = adjoint_representation(A)
    delta = ce_coboundary(A, V, f, which, which)
    mu = Cochain.from_bracket(A.bracket(which))
    nr = nr_bracket(mu, f, A).scale(nr_coboundary_sign(f.degree))
    return delta == nr


def coboundary_matrix(A: BiHomAlgebra, V: Representation, basis: Sequence[Cochain],
                      which: int = 0, action: int = 0,
                      degree: Optional[int] = None) -> RationalMatrix:
    """Matrix whose columns are the coordinates of the coboundaries of ``basis``."""
    if degree is None:
        degree = basis[0].degree if basis else 0
    rows = comb(A.dim, degree + 1) * V.dim_v
    columns = [ce_coboundary(A, V, f, which, action).coordinates() for f in basis]
    return RationalMatrix.from_columns(columns, rows)


def _image_rank(A: BiHomAlgebra, V: Representation, basis: Sequence[Cochain],
                which: int, action: int) -> Tuple[int, List[Cochain]]:
    images = [ce_coboundary(A, V, f, which, action) for f in basis]
    length = comb(A.dim, basis[0].degree + 1) * V.dim_v if basis else 0
    return span_rank([g.coordinates() for g in images], length), images


def cohomology_dim(A: BiHomAlgebra, V: Representation, n: int,
                   which: int = 0, action: int = 0) -> int:
    """
    Dimension of the degree-n cohomology of the twisted cochain complex.

    Raises
    ------
    NonRegularError
        If either twist pair is singular
    DifferentialSquareError
        If the coboundary applied twice to a degree-(n-1) basis cochain is nonzero
    """
    A.require_regular()
    if not V.regular_v:
        raise NonRegularError("alpha_V and beta_V must be invertible")
    current = cochain_space_basis(A, V, n)
    kernel = current.dimension - _image_rank(A, V, current.basis, which, action)[0]
    image = 0
    if n > 0:
        previous = cochain_space_basis(A, V, n - 1)
        image, boundaries = _image_rank(A, V, previous.basis, which, action)
        for g in boundaries:
            if not ce_coboundary(A, V, g, which, action).is_zero():
                raise DifferentialSquareError(f"Coboundary squares to a nonzero map in degree {n - 1}")
    logger.debug(f"H^{n}: kernel {kernel}, image {image}")
    return kernel - image


def basis_coboundaries(A: BiHomAlgebra, V: Representation, n: int,
                       which: int = 0, action: int = 0) -> List[Tuple[Cochain, Cochain]]:
    """Pairs ``(f, df)`` over the degree-n basis."""
    space = cochain_space_basis(A, V, n)
    return [(f, ce_coboundary(A, V, f, which, action)) for f in space.basis]
