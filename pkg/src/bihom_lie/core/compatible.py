"""
Compatible BiHom-Lie structures.

A compatible pair is one algebra carrying two brackets ``mu1, mu2`` that
share the twists. This module checks the mixed Jacobi identity, builds pairs
from Nijenhuis and Rota-Baxter operators, encodes pairs as Maurer-Cartan
pairs for the Nijenhuis-Richardson bracket, and computes the compatible
cohomology whose degree-n space is n copies of the twisted cochain space.
"""

import itertools
import logging
from dataclasses import dataclass, replace
from functools import cached_property
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..io.exceptions import (
    CochainSpaceError,
    ComplexError,
    DifferentialSquareError,
    InvalidMCPairError,
    NonRegularError,
    PreconditionError,
    ShapeMismatchError,
    TwistCommutationError,
)
from .bihom_core import (
    AxiomReport,
    BiHomAlgebra,
    BracketTensor,
    Representation,
    Violation,
    adjoint_representation,
    check_bihom_lie,
    check_representation,
    combine_actions,
    combine_brackets,
    semidirect_bracket,
)
from .cochains import (
    Cochain,
    ce_coboundary,
    cochain_in_space,
    cochain_space_basis,
    nr_bracket,
    nr_coboundary_sign,
)
from .qlinalg import (
    RationalLike,
    RationalMatrix,
    basis_vector,
    is_zero,
    nullspace_basis,
    parse_rational,
    span_rank,
    zero_tensor,
)

logger = logging.getLogger(__name__)


def _prefixed(report: AxiomReport, prefix: str) -> AxiomReport:
    return AxiomReport(
        {f"{prefix}:{key}": ok for key, ok in report.checks.items()},
        [replace(v, axiom=f"{prefix}:{v.axiom}") for v in report.violations],
    )


def _columns(matrix: RationalMatrix) -> List[np.ndarray]:
    return [matrix.column(i) for i in range(matrix.cols)]


def _differs(lhs: np.ndarray, rhs: np.ndarray) -> bool:
    return any(a != b for a, b in zip(lhs, rhs))


def _six_term_report(A: BiHomAlgebra) -> AxiomReport:
    mu1, mu2 = A.bracket(0), A.bracket(1)
    n = A.dim
    alpha_e, beta_e = _columns(A.alpha), _columns(A.beta)
    beta2_e = _columns(A.beta @ A.beta)
    inner1 = {(j, k): mu1(beta_e[j], alpha_e[k]) for j, k in itertools.product(range(n), repeat=2)}
    inner2 = {(j, k): mu2(beta_e[j], alpha_e[k]) for j, k in itertools.product(range(n), repeat=2)}
    failures = []
    for i, j, k in itertools.product(range(n), repeat=3):
        total = zero_tensor((n,))
        for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
            total = total + mu2(beta2_e[x], inner1[y, z]) + mu1(beta2_e[x], inner2[y, z])
        if not is_zero(total):
            failures.append(Violation("mixed-jacobi", (i, j, k), total, zero_tensor((n,))))
    return AxiomReport().record("mixed-jacobi", failures)


@dataclass(frozen=True, eq=False)
class CompatiblePair:
    """An algebra with exactly two brackets sharing one twist pair."""

    algebra: BiHomAlgebra

    def __post_init__(self):
        if len(self.algebra.brackets) != 2:
            raise ShapeMismatchError(
                f"A compatible pair needs two brackets, got {len(self.algebra.brackets)}"
            )

    @classmethod
    def from_brackets(cls, mu1: BracketTensor, mu2: BracketTensor,
                      alpha: RationalMatrix, beta: RationalMatrix) -> "CompatiblePair":
        return cls(BiHomAlgebra(mu1.dim, (mu1, mu2), alpha, beta))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mu1(self) -> BracketTensor:
        return self.algebra.brackets[0]

    @property
    def mu2(self) -> BracketTensor:
        return self.algebra.brackets[1]

    @cached_property
    def status(self) -> Dict[str, AxiomReport]:
        return {
            "bracket1": check_bihom_lie(self.algebra, 0),
            "bracket2": check_bihom_lie(self.algebra, 1),
            "compatibility": _six_term_report(self.algebra),
        }

    @property
    def compatible(self) -> bool:
        return all(report.passed for report in self.status.values())

    def single(self, which: int) -> BiHomAlgebra:
        """One bracket of the pair as a single-bracket algebra."""
        return self.algebra.with_brackets(self.algebra.bracket(which))


@dataclass(frozen=True, eq=False)
class MCPair:
    """Two g-valued 2-cochains, candidates for a Maurer-Cartan pair."""

    theta1: Cochain
    theta2: Cochain

    @classmethod
    def from_pair(cls, P: CompatiblePair) -> "MCPair":
        return cls(Cochain.from_bracket(P.mu1), Cochain.from_bracket(P.mu2))

    def __add__(self, other: "MCPair") -> "MCPair":
        return MCPair(self.theta1 + other.theta1, self.theta2 + other.theta2)


@dataclass(frozen=True, eq=False)
class CompatibleCochain:
    """
    A compatible cochain: n components of degree n, or one 0-cochain in degree 0.
    """

    degree: int
    components: Tuple[Cochain, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        expected = max(self.degree, 1)
        if len(self.components) != expected:
            raise ShapeMismatchError(
                f"Degree-{self.degree} compatible cochain needs {expected} components"
            )
        if any(f.degree != self.degree for f in self.components):
            raise ShapeMismatchError("Component degrees disagree with the compatible degree")

    @classmethod
    def zero(cls, degree: int, dim_g: int, dim_v: int) -> "CompatibleCochain":
        return cls(degree, tuple(Cochain.zero(degree, dim_g, dim_v) for _ in range(max(degree, 1))))

    @property
    def vector(self) -> np.ndarray:
        if self.degree != 0:
            raise ComplexError("Only degree-0 compatible cochains are vectors")
        return self.components[0].tensor

    def coordinates(self) -> np.ndarray:
        parts = [f.coordinates() for f in self.components]
        return np.concatenate(parts) if parts else np.empty(0, dtype=object)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.components)

    def __add__(self, other: "CompatibleCochain") -> "CompatibleCochain":
        return CompatibleCochain(self.degree, tuple(a + b for a, b in zip(self.components, other.components)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompatibleCochain):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.components, other.components)
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.components))


def check_compatible_pair(P: CompatiblePair) -> AxiomReport:
    """
    Check both brackets and the six-term mixed Jacobi identity.

    ``[b2 p, [b q, a r]_1]_2 + cyclic + [b2 p, [b q, a r]_2]_1 + cyclic = 0``
    with ``a = alpha``, ``b = beta`` and ``b2 = beta^2``. Violations of the
    individual brackets come first in the report.
    """
    report = AxiomReport()
    report.merge(_prefixed(P.status["bracket1"], "bracket1"))
    report.merge(_prefixed(P.status["bracket2"], "bracket2"))
    report.merge(P.status["compatibility"])
    return report


def lambda_sum_bracket(P: CompatiblePair, lam: RationalLike, eta: RationalLike) -> BiHomAlgebra:
    """Single-bracket algebra with bracket ``lam mu1 + eta mu2``."""
    combined = combine_brackets((P.mu1, P.mu2), (lam, eta))
    return P.algebra.with_brackets(combined)


def _require_twist_commuting(A: BiHomAlgebra, operator: RationalMatrix, label: str) -> None:
    if operator.shape != (A.dim, A.dim):
        raise ShapeMismatchError(f"{label} has shape {operator.shape}, expected {(A.dim, A.dim)}")
    if not (operator.commutes_with(A.alpha) and operator.commutes_with(A.beta)):
        raise TwistCommutationError(f"{label} does not commute with alpha and beta")


def nijenhuis_bracket(A: BiHomAlgebra, N: RationalMatrix, which: int = 0) -> BracketTensor:
    """``[p, q]_N = [N p, q] - [N q, p] - N [p, q]``."""
    bracket = A.bracket(which)
    n_e = _columns(N)
    c = zero_tensor((A.dim,) * 3)
    for i, j in itertools.product(range(A.dim), repeat=2):
        c[i, j, :] = (bracket(n_e[i], basis_vector(A.dim, j))
                      - bracket(n_e[j], basis_vector(A.dim, i))
                      - N @ bracket.on_basis(i, j))
    return BracketTensor(c, A.dim)


def nijenhuis_check(A: BiHomAlgebra, N: RationalMatrix, which: int = 0) -> bool:
    """
    True when ``[N p, N q] = N([N p, q] - [N q, p] - N [p, q])`` on all basis pairs.

    Raises
    ------
    TwistCommutationError
        If N does not commute with alpha and beta
    """
    _require_twist_commuting(A, N, "Nijenhuis operator")
    bracket = A.bracket(which)
    deformed = nijenhuis_bracket(A, N, which)
    n_e = _columns(N)
    for i, j in itertools.product(range(A.dim), repeat=2):
        if _differs(bracket(n_e[i], n_e[j]), N @ deformed.on_basis(i, j)):
            logger.debug(f"Nijenhuis identity fails at ({i}, {j})")
            return False
    return True


def nijenhuis_deform(A: BiHomAlgebra, N: RationalMatrix, which: int = 0) -> CompatiblePair:
    """
    The compatible pair ``([., .], [., .]_N)`` of a Nijenhuis operator.

    Raises
    ------
    TwistCommutationError
        If N does not commute with the twists
    PreconditionError
        If the bracket is not BiHom-Lie, N is not Nijenhuis, or the result
        fails the compatibility check
    """
    base = check_bihom_lie(A, which)
    if not base.passed:
        raise PreconditionError("Nijenhuis deformation requires a BiHom-Lie bracket", base)
    if not nijenhuis_check(A, N, which):
        raise PreconditionError("Operator fails the Nijenhuis identity")
    pair = CompatiblePair.from_brackets(A.bracket(which), nijenhuis_bracket(A, N, which),
                                        A.alpha, A.beta)
    report = check_compatible_pair(pair)
    if not report.passed:
        raise PreconditionError("Nijenhuis deformation is not compatible", report)
    logger.info("Built Nijenhuis compatible pair")
    return pair


def _rb_shift(A: BiHomAlgebra, s: int, l: int) -> RationalMatrix:
    return A.alpha.power(s) @ A.beta.power(l)


def rb_induced_bracket(A: BiHomAlgebra, R: RationalMatrix, s: int, l: int,
                       lam: RationalLike, which: int = 0) -> BracketTensor:
    """
    ``[p, q]_R = [T R p, q] + [p, T R q] + lam [p, q]`` with ``T = alpha^s beta^l``.
    """
    _require_twist_commuting(A, R, "Rota-Baxter operator")
    lam = parse_rational(lam)
    bracket = A.bracket(which)
    shifted = _columns(_rb_shift(A, s, l) @ R)
    c = zero_tensor((A.dim,) * 3)
    for i, j in itertools.product(range(A.dim), repeat=2):
        c[i, j, :] = (bracket(shifted[i], basis_vector(A.dim, j))
                      + bracket(basis_vector(A.dim, i), shifted[j])
                      + bracket.on_basis(i, j) * lam)
    return BracketTensor(c, A.dim)


def rb_check(A: BiHomAlgebra, R: RationalMatrix, s: int, l: int, lam: RationalLike,
             which: int = 0) -> bool:
    """
    True when ``[R p, R q] = R([T R p, q] + [p, T R q] + lam [p, q])`` on all basis pairs.

    Raises
    ------
    TwistCommutationError
        If R does not commute with alpha and beta
    """
    induced = rb_induced_bracket(A, R, s, l, lam, which)
    bracket = A.bracket(which)
    r_e = _columns(R)
    for i, j in itertools.product(range(A.dim), repeat=2):
        if _differs(bracket(r_e[i], r_e[j]), R @ induced.on_basis(i, j)):
            logger.debug(f"Rota-Baxter identity fails at ({i}, {j})")
            return False
    return True


def rb_compatible_check(A: BiHomAlgebra, R: RationalMatrix, S: RationalMatrix, s: int, l: int,
                        lam: RationalLike, which: int = 0) -> bool:
    """
    True when ``[R p, S q] + [S p, R q] = R([T S p, q] + [p, T S q]) + S([T R p, q] + [p, T R q])``.

    Raises
    ------
    PreconditionError
        If R or S is not a Rota-Baxter operator for the same (s, l, lam)
    """
    for label, operator in (("R", R), ("S", S)):
        if not rb_check(A, operator, s, l, lam, which):
            raise PreconditionError(f"{label} is not a Rota-Baxter operator of weight {lam}")
    bracket = A.bracket(which)
    shift = _rb_shift(A, s, l)
    r_e, s_e = _columns(R), _columns(S)
    tr_e, ts_e = _columns(shift @ R), _columns(shift @ S)
    for i, j in itertools.product(range(A.dim), repeat=2):
        e_i, e_j = basis_vector(A.dim, i), basis_vector(A.dim, j)
        lhs = bracket(r_e[i], s_e[j]) + bracket(s_e[i], r_e[j])
        rhs = (R @ (bracket(ts_e[i], e_j) + bracket(e_i, ts_e[j]))
               + S @ (bracket(tr_e[i], e_j) + bracket(e_i, tr_e[j])))
        if _differs(lhs, rhs):
            logger.debug(f"Rota-Baxter compatibility fails at ({i}, {j})")
            return False
    return True


def rb_compatible_pair(A: BiHomAlgebra, R: RationalMatrix, S: RationalMatrix, s: int, l: int,
                       lam: RationalLike, which: int = 0) -> CompatiblePair:
    """The pair ``([., .]_R, [., .]_S)`` of two compatible Rota-Baxter operators."""
    if not rb_compatible_check(A, R, S, s, l, lam, which):
        raise PreconditionError("Rota-Baxter operators are not compatible")
    pair = CompatiblePair.from_brackets(
        rb_induced_bracket(A, R, s, l, lam, which),
        rb_induced_bracket(A, S, s, l, lam, which),
        A.alpha, A.beta,
    )
    report = check_compatible_pair(pair)
    if not report.passed:
        raise PreconditionError("Induced Rota-Baxter pair is not compatible", report)
    logger.info("Built Rota-Baxter compatible pair")
    return pair


def mc_pair_check(M: MCPair, A: BiHomAlgebra, d1: Optional[Cochain] = None,
                  d2: Optional[Cochain] = None) -> bool:
    """
    Maurer-Cartan pair equations for the Nijenhuis-Richardson bracket.

    ``d1 t1 + 1/2 [t1, t1] = 0``, ``d2 t2 + 1/2 [t2, t2] = 0`` and
    ``d1 t2 + d2 t1 + [t1, t2] = 0``. A differential is either ``None``
    (zero) or a 2-cochain ``phi`` acting as ``[phi, -]``.

    Raises
    ------
    CochainSpaceError
        If an operand does not intertwine the twists
    """
    adjoint = adjoint_representation(A)
    for label, theta in (("theta1", M.theta1), ("theta2", M.theta2)):
        if theta.degree != 2 or not cochain_in_space(A, adjoint, theta):
            raise CochainSpaceError(f"{label} is not a twisted 2-cochain")

    def d(phi: Optional[Cochain], x: Cochain) -> Cochain:
        if phi is None:
            return Cochain.zero(3, A.dim, A.dim)
        return nr_bracket(phi, x, A)

    half = parse_rational("1/2")
    first = d(d1, M.theta1) + nr_bracket(M.theta1, M.theta1, A).scale(half)
    second = d(d2, M.theta2) + nr_bracket(M.theta2, M.theta2, A).scale(half)
    mixed = d(d1, M.theta2) + d(d2, M.theta1) + nr_bracket(M.theta1, M.theta2, A)
    return first.is_zero() and second.is_zero() and mixed.is_zero()


def twisted_mc_routes(base: MCPair, increment: MCPair, A: BiHomAlgebra) -> Tuple[bool, bool]:
    """
    Both sides of the twisting equivalence.

    Returns ``(sum_is_mc, increment_is_twisted_mc)``: whether
    ``base + increment`` is a Maurer-Cartan pair, and whether ``increment``
    is one for the differentials ``[theta_i, -]``.

    Raises
    ------
    InvalidMCPairError
        If ``base`` is not a Maurer-Cartan pair
    """
    if not mc_pair_check(base, A):
        raise InvalidMCPairError("Base pair is not a Maurer-Cartan pair")
    direct = mc_pair_check(base + increment, A)
    twisted = mc_pair_check(increment, A, base.theta1, base.theta2)
    return direct, twisted


def twisted_mc_check(base: MCPair, increment: MCPair, A: BiHomAlgebra) -> bool:
    """
    True when ``base + increment`` is a Maurer-Cartan pair.

    Raises
    ------
    ComplexError
        If the direct and twisted computations disagree
    """
    direct, twisted = twisted_mc_routes(base, increment, A)
    if direct != twisted:
        raise ComplexError(
            f"Twisted Maurer-Cartan routes disagree: direct={direct}, twisted={twisted}"
        )
    return direct


def check_compatible_representation(P: CompatiblePair, V: Representation) -> AxiomReport:
    """
    Check both (bracket_i, action_i) representations and their compatibility.

    The mixed condition is ``[b p, q]_1 .2 bV(v) + [b p, q]_2 .1 bV(v) =
    ab(p) .1 (q .2 v) - b(q) .2 (a(p) .1 v) + ab(p) .2 (q .1 v) - b(q) .1 (a(p) .2 v)``.
    """
    A = P.algebra
    report = AxiomReport()
    report.merge(_prefixed(check_representation(A, V, 0, 0), "action1"))
    report.merge(_prefixed(check_representation(A, V, 1, 1), "action2"))

    n, m = A.dim, V.dim_v
    alpha_e, beta_e = _columns(A.alpha), _columns(A.beta)
    alphabeta_e = _columns(A.alpha @ A.beta)
    beta_v = _columns(V.beta_v)
    failures = []
    for i, j, a in itertools.product(range(n), range(n), range(m)):
        e_j, v_a = basis_vector(n, j), basis_vector(m, a)
        lhs = (V.act(1, P.mu1(beta_e[i], e_j), beta_v[a])
               + V.act(0, P.mu2(beta_e[i], e_j), beta_v[a]))
        rhs = (V.act(0, alphabeta_e[i], V.act(1, e_j, v_a))
               - V.act(1, beta_e[j], V.act(0, alpha_e[i], v_a))
               + V.act(1, alphabeta_e[i], V.act(0, e_j, v_a))
               - V.act(0, beta_e[j], V.act(1, alpha_e[i], v_a)))
        if _differs(lhs, rhs):
            failures.append(Violation("representation-compatibility", (i, j, a), lhs, rhs))
    report.record("representation-compatibility", failures)
    return report


def lambda_sum_representation(P: CompatiblePair, V: Representation, lam: RationalLike,
                              eta: RationalLike) -> Tuple[BiHomAlgebra, Representation]:
    """The algebra ``lam mu1 + eta mu2`` with the action ``lam .1 + eta .2``."""
    report = check_compatible_representation(P, V)
    if not report.passed:
        raise PreconditionError("Actions do not form a compatible representation", report)
    algebra = lambda_sum_bracket(P, lam, eta)
    module = V.with_actions(combine_actions((V.action(0), V.action(1)), (lam, eta)))
    result = check_representation(algebra, module)
    if not result.passed:
        raise PreconditionError("Summed action is not a representation", result)
    return algebra, module


def compatible_semidirect(P: CompatiblePair, V: Representation) -> CompatiblePair:
    """
    Semidirect product of a compatible pair with a compatible representation.

    Bracket i is ``[(p, a), (q, b)]_i = ([p, q]_i, p .i b - (alpha^-1 beta q) .i (alpha_V beta_V^-1 a))``.
    """
    A = P.algebra
    A.require_regular()
    if not V.regular_v:
        raise NonRegularError("alpha_V and beta_V must be invertible")
    report = check_compatible_representation(P, V)
    if not report.passed:
        raise PreconditionError("Semidirect product requires a compatible representation", report)
    pair = CompatiblePair.from_brackets(
        semidirect_bracket(A, V, 0, 0),
        semidirect_bracket(A, V, 1, 1),
        A.alpha.block_diagonal(V.alpha_v),
        A.beta.block_diagonal(V.beta_v),
    )
    result = check_compatible_pair(pair)
    if not result.passed:
        raise PreconditionError("Semidirect product is not a compatible pair", result)
    return pair


def lift_cochain(f: Cochain, P: CompatiblePair, V: Representation) -> Cochain:
    """``f~((p_1, v_1), ..., (p_n, v_n)) = (0, f(p_1, ..., p_n))`` on g + V."""
    n, m = P.dim, V.dim_v
    if (f.dim_g, f.dim_v) != (n, m):
        raise ShapeMismatchError(f"Cochain maps {f.dim_g} -> {f.dim_v}, expected {n} -> {m}")
    total = n + m
    tensor = zero_tensor((total,) * f.degree + (total,))
    tensor[(slice(0, n),) * f.degree + (slice(n, total),)] = f.tensor
    return Cochain(f.degree, total, total, tensor)


def _check_degree_zero(P: CompatiblePair, V: Representation, v: np.ndarray) -> None:
    A = P.algebra
    if not A.beta.is_invertible():
        raise NonRegularError("Degree-0 compatible cochains need an invertible beta")
    if _differs(V.alpha_v @ v, v) or _differs(V.beta_v @ v, v):
        raise CochainSpaceError("Degree-0 compatible cochain is not fixed by alpha_V and beta_V")
    shift = A.alpha @ A.beta_inv
    for i in range(A.dim):
        p = shift.column(i)
        if _differs(V.act(0, p, v), V.act(1, p, v)):
            raise CochainSpaceError(
                f"Degree-0 compatible cochain acts differently under the two actions at e{i + 1}"
            )


def compatible_coboundary(P: CompatiblePair, V: Representation,
                          F: CompatibleCochain) -> CompatibleCochain:
    """
    ``d_c(f_1..f_n) = (d1 f_1, ..., d1 f_i + d2 f_(i-1), ..., d2 f_n)``.

    In degree 0 the result is the single 1-cochain ``p -> alpha beta^-1(p) .1 v``.
    """
    A = P.algebra
    A.require_regular()
    if F.degree == 0:
        _check_degree_zero(P, V, F.vector)
        return CompatibleCochain(1, (ce_coboundary(A, V, F.components[0], 0, 0),))
    first = [ce_coboundary(A, V, f, 0, 0) for f in F.components]
    second = [ce_coboundary(A, V, f, 1, 1) for f in F.components]
    n = F.degree
    components = []
    for j in range(n + 1):
        if j == 0:
            components.append(first[0])
        elif j == n:
            components.append(second[n - 1])
        else:
            components.append(first[j] + second[j - 1])
    return CompatibleCochain(n + 1, tuple(components))


def anticommute_check(P: CompatiblePair, V: Representation, n: int) -> bool:
    """True when ``d1 d2 f + d2 d1 f = 0`` for every basis cochain of degree n."""
    A = P.algebra
    A.require_regular()
    for f in cochain_space_basis(A, V, n).basis:
        one_two = ce_coboundary(A, V, ce_coboundary(A, V, f, 1, 1), 0, 0)
        two_one = ce_coboundary(A, V, ce_coboundary(A, V, f, 0, 0), 1, 1)
        if not (one_two + two_one).is_zero():
            logger.debug(f"Coboundaries fail to anticommute in degree {n}")
            return False
    return True


def compatible_square_check(P: CompatiblePair, V: Representation, n: int) -> bool:
    """True when ``d_c d_c F = 0`` for every degree-n compatible basis cochain."""
    for F in compatible_cochain_basis(P, V, n):
        if not compatible_coboundary(P, V, compatible_coboundary(P, V, F)).is_zero():
            logger.debug(f"Compatible coboundary squares to a nonzero map in degree {n}")
            return False
    return True


def compatible_cochain_basis(P: CompatiblePair, V: Representation, n: int) -> List[CompatibleCochain]:
    """
    Basis of the degree-n compatible cochains.

    Degree n >= 1 gives n copies of the twisted cochain basis; degree 0 gives
    the fixed vectors on which both actions agree after ``alpha beta^-1``.
    """
    A = P.algebra
    fixed = cochain_space_basis(A, V, n).basis
    if n == 0:
        if not A.beta.is_invertible():
            raise NonRegularError("Degree-0 compatible cochains need an invertible beta")
        shift = A.alpha @ A.beta_inv
        rows = []
        for i in range(A.dim):
            p = shift.column(i)
            differences = [V.act(0, p, f.tensor) - V.act(1, p, f.tensor) for f in fixed]
            for k in range(V.dim_v):
                rows.append([d[k] for d in differences])
        solutions = nullspace_basis(RationalMatrix(rows, cols=len(fixed)))
        basis = []
        for y in solutions:
            v = zero_tensor((V.dim_v,))
            for coefficient, f in zip(y, fixed):
                v = v + f.tensor * coefficient
            basis.append(CompatibleCochain(0, (Cochain.from_vector(v, A.dim),)))
        return basis
    zero = Cochain.zero(n, A.dim, V.dim_v)
    return [
        CompatibleCochain(n, tuple(f if slot == copy else zero for slot in range(n)))
        for copy in range(n)
        for f in fixed
    ]


def _compatible_image_rank(P: CompatiblePair, V: Representation,
                           basis: Sequence[CompatibleCochain], degree: int):
    images = [compatible_coboundary(P, V, F) for F in basis]
    length = (degree + 1) * comb(P.dim, degree + 1) * V.dim_v
    return span_rank([G.coordinates() for G in images], length), images


def compatible_cohomology_dim(P: CompatiblePair, V: Representation, n: int) -> int:
    """
    Dimension of the degree-n compatible cohomology.

    Raises
    ------
    DifferentialSquareError
        If the compatible coboundary squares to a nonzero map on the instance
    """
    P.algebra.require_regular()
    current = compatible_cochain_basis(P, V, n)
    kernel = len(current) - _compatible_image_rank(P, V, current, n)[0]
    image = 0
    if n > 0:
        previous = compatible_cochain_basis(P, V, n - 1)
        image, boundaries = _compatible_image_rank(P, V, previous, n - 1)
        for G in boundaries:
            if not compatible_coboundary(P, V, G).is_zero():
                raise DifferentialSquareError(
                    f"Compatible coboundary squares to a nonzero map in degree {n - 1}"
                )
    logger.debug(f"H^{n}_c: kernel {kernel}, image {image}")
    return kernel - image


def sum_algebra(P: CompatiblePair, V: Representation) -> Tuple[BiHomAlgebra, Representation]:
    """The summed structure ``(mu1 + mu2, .1 + .2)`` with unchanged twists."""
    algebra = lambda_sum_bracket(P, 1, 1)
    module = V.with_actions(combine_actions((V.action(0), V.action(1)), (1, 1)))
    return algebra, module


def sum_morphism_phi(F: CompatibleCochain, P: CompatiblePair, V: Representation) -> Cochain:
    """
    ``phi_0(v) = v / 2`` and ``phi_n(f_1, ..., f_n) = f_1 + ... + f_n``.

    Raises
    ------
    ShapeMismatchError
        If the components do not map the algebra of ``P`` into ``V``
    """
    for f in F.components:
        if f.dim_g != P.dim or f.dim_v != V.dim_v:
            raise ShapeMismatchError(
                f"Component maps {f.dim_g} -> {f.dim_v}, expected {P.dim} -> {V.dim_v}"
            )
    if F.degree == 0:
        return F.components[0].scale(parse_rational("1/2"))
    total = F.components[0]
    for f in F.components[1:]:
        total = total + f
    return total


def chain_map_check(P: CompatiblePair, V: Representation, n: int) -> bool:
    """
    True when ``phi o d_c = d_+ o phi`` on every degree-n compatible basis cochain.

    ``d_+`` is the coboundary of the summed structure from :func:`sum_algebra`.
    """
    plus_algebra, plus_module = sum_algebra(P, V)
    for F in compatible_cochain_basis(P, V, n):
        lhs = sum_morphism_phi(compatible_coboundary(P, V, F), P, V)
        rhs = ce_coboundary(plus_algebra, plus_module, sum_morphism_phi(F, P, V))
        if lhs != rhs:
            logger.warning(f"Sum morphism fails to commute with the coboundaries in degree {n}")
            return False
    return True


def lifted_coboundary_check(f: Cochain, P: CompatiblePair, V: Representation,
                            which: int = 0) -> bool:
    """
    Check that lifting commutes with the coboundary of bracket ``which``.

    Compares the lift of the coboundary of ``f`` with the adjoint coboundary
    of the lift on the semidirect product. With identity twists the latter
    is also compared with ``nr_coboundary_sign(n) [pi, f~]_NR``.
    """
    A = P.algebra
    semidirect = compatible_semidirect(P, V)
    big = semidirect.algebra
    lifted = lift_cochain(f, P, V)
    lhs = lift_cochain(ce_coboundary(A, V, f, which, which), P, V)
    rhs = ce_coboundary(big, adjoint_representation(big), lifted, which, which)
    if lhs != rhs:
        return False
    if A.alpha.is_identity() and A.beta.is_identity() and f.degree > 0:
        pi = Cochain.from_bracket(big.bracket(which))
        return rhs == nr_bracket(pi, lifted, big).scale(nr_coboundary_sign(f.degree))
    return True
