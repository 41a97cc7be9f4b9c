"""
BiHom-Lie algebras, representations and their axiom checks.

Algebras are stored by structure constants: a bracket on a ``dim``-dimensional
space is a rank-3 object array ``c`` with ``[e_i, e_j] = sum_k c[i, j, k] e_k``.
The twist maps act on column vectors, so the image of ``e_i`` under ``alpha``
is column ``i`` of the matrix.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..io.exceptions import (
    BracketIndexError,
    NonRegularError,
    PreconditionError,
    ShapeMismatchError,
)
from .qlinalg import (
    RationalLike,
    RationalMatrix,
    basis_vector,
    format_rational,
    format_vector,
    is_zero,
    parse_rational,
    zero_tensor,
    zero_vector,
)

logger = logging.getLogger(__name__)


def contract(tensor: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Bilinear evaluation ``sum_ij x_i y_j tensor[i, j, :]``."""
    partial = np.tensordot(x, tensor, axes=(0, 0))
    return np.tensordot(y, partial, axes=(0, 0))


def _as_tensor(values: Any, shape: Tuple[int, ...]) -> np.ndarray:
    """Object array of Fractions with a checked shape."""
    raw = np.asarray(values, dtype=object)
    if raw.size == 0 and 0 in shape:
        return zero_tensor(shape)
    if raw.shape != shape:
        raise ShapeMismatchError(f"Expected tensor of shape {shape}, got {raw.shape}")
    out = np.empty(shape, dtype=object)
    for index in np.ndindex(*shape):
        out[index] = parse_rational(raw[index])
    return out


class BracketTensor:
    """Structure constants of one bilinear bracket."""

    __slots__ = ("_c",)

    def __init__(self, c: Any, dim: Optional[int] = None):
        if dim is None:
            dim = np.asarray(c, dtype=object).shape[0]
        data = _as_tensor(c, (dim, dim, dim))
        data.flags.writeable = False
        self._c = data

    @classmethod
    def zero(cls, dim: int) -> "BracketTensor":
        return cls(zero_tensor((dim, dim, dim)), dim)

    @classmethod
    def from_rules(cls, dim: int, rules: Mapping[Tuple[int, int], Mapping[int, RationalLike]],
                   skew: bool = False) -> "BracketTensor":
        """
        Build a bracket from ``{(i, j): {k: c}}`` with 0-based indices.

        With ``skew=True`` each rule also sets ``[e_j, e_i] = -[e_i, e_j]``.
        """
        c = zero_tensor((dim, dim, dim))
        for (i, j), image in rules.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise BracketIndexError(f"Bracket rule ({i}, {j}) outside dimension {dim}")
            for k, value in image.items():
                if not 0 <= k < dim:
                    raise BracketIndexError(f"Output index {k} outside dimension {dim}")
                c[i, j, k] = parse_rational(value)
                if skew:
                    c[j, i, k] = -c[i, j, k]
        return cls(c, dim)

    @property
    def dim(self) -> int:
        return self._c.shape[0]

    @property
    def c(self) -> np.ndarray:
        """Read-only view of the structure constants."""
        return self._c

    def __call__(self, p: np.ndarray, q: np.ndarray) -> np.ndarray:
        return contract(self._c, p, q)

    def on_basis(self, i: int, j: int) -> np.ndarray:
        return self._c[i, j, :].copy()

    def transform(self, left: RationalMatrix, right: RationalMatrix) -> "BracketTensor":
        """The bracket ``(p, q) -> [left(p), right(q)]``."""
        c = zero_tensor((self.dim,) * 3)
        for i, j in itertools.product(range(self.dim), repeat=2):
            c[i, j, :] = self(left.column(i), right.column(j))
        return BracketTensor(c, self.dim)

    def scale(self, factor: RationalLike) -> "BracketTensor":
        factor = parse_rational(factor)
        return BracketTensor(self._c * factor, self.dim)

    def __add__(self, other: "BracketTensor") -> "BracketTensor":
        if other.dim != self.dim:
            raise ShapeMismatchError(f"Bracket dimensions differ: {self.dim} vs {other.dim}")
        return BracketTensor(self._c + other._c, self.dim)

    def __neg__(self) -> "BracketTensor":
        return self.scale(-1)

    def __sub__(self, other: "BracketTensor") -> "BracketTensor":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BracketTensor):
            return NotImplemented
        return self.dim == other.dim and all(a == b for a, b in zip(self._c.flat, other._c.flat))

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self._c.flat)))

    def __repr__(self) -> str:
        nonzero = {
            (i, j): format_vector(self._c[i, j, :])
            for i, j in itertools.product(range(self.dim), repeat=2)
            if not is_zero(self._c[i, j, :])
        }
        return f"BracketTensor(dim={self.dim}, {nonzero})"

    def is_zero(self) -> bool:
        return is_zero(self._c)

    def is_plain_skew(self) -> bool:
        """True when ``c[i, j, :] == -c[j, i, :]`` for every pair."""
        return all(
            self._c[i, j, k] == -self._c[j, i, k]
            for i, j, k in itertools.product(range(self.dim), repeat=3)
        )

    def to_strings(self) -> List[List[List[str]]]:
        return [[[format_rational(x) for x in row] for row in plane] for plane in self._c]


@dataclass(frozen=True)
class BiHomAlgebra:
    """
    A vector space with one or more brackets and a twist pair (alpha, beta).

    Two brackets house a compatible structure. Axioms are not enforced at
    construction time; use :func:`check_bihom_lie` and friends.
    """

    dim: int
    brackets: Tuple[BracketTensor, ...]
    alpha: RationalMatrix
    beta: RationalMatrix

    def __post_init__(self):
        object.__setattr__(self, "brackets", tuple(self.brackets))
        if not self.brackets:
            raise ShapeMismatchError("An algebra needs at least one bracket")
        for t, bracket in enumerate(self.brackets):
            if bracket.dim != self.dim:
                raise ShapeMismatchError(f"Bracket {t} has dimension {bracket.dim}, expected {self.dim}")
        for label, twist in (("alpha", self.alpha), ("beta", self.beta)):
            if twist.shape != (self.dim, self.dim):
                raise ShapeMismatchError(f"{label} has shape {twist.shape}, expected {(self.dim, self.dim)}")

    @classmethod
    def untwisted(cls, *brackets: BracketTensor) -> "BiHomAlgebra":
        """Algebra with identity twists (an ordinary Lie-type algebra)."""
        dim = brackets[0].dim
        identity = RationalMatrix.identity(dim)
        return cls(dim, tuple(brackets), identity, identity)

    @cached_property
    def regular(self) -> bool:
        return self.alpha.is_invertible() and self.beta.is_invertible()

    @cached_property
    def alpha_inv(self) -> RationalMatrix:
        return self.alpha.inverse()

    @cached_property
    def beta_inv(self) -> RationalMatrix:
        return self.beta.inverse()

    def require_regular(self) -> None:
        if not self.regular:
            raise NonRegularError("alpha and beta must be invertible")

    def bracket(self, which: int = 0) -> BracketTensor:
        if not 0 <= which < len(self.brackets):
            raise BracketIndexError(
                f"Bracket index {which} out of range (algebra has {len(self.brackets)})"
            )
        return self.brackets[which]

    def with_brackets(self, *brackets: BracketTensor) -> "BiHomAlgebra":
        return BiHomAlgebra(self.dim, tuple(brackets), self.alpha, self.beta)


@dataclass(frozen=True, eq=False)
class AssociativeAlgebra:
    """A product ``p . q`` given by structure constants, with twists."""

    dim: int
    m: np.ndarray
    alpha: RationalMatrix
    beta: RationalMatrix

    def __post_init__(self):
        object.__setattr__(self, "m", _as_tensor(self.m, (self.dim,) * 3))

    def product(self, p: np.ndarray, q: np.ndarray) -> np.ndarray:
        return contract(self.m, p, q)


@dataclass(frozen=True, eq=False)
class Representation:
    """
    A module V with one or more actions and a twist pair (alpha_v, beta_v).

    Each action is an object array ``rho`` of shape ``(dim_g, dim_v, dim_v)``
    with ``e_i . v_a = sum_b rho[i, a, b] v_b``.
    """

    dim_g: int
    dim_v: int
    actions: Tuple[np.ndarray, ...]
    alpha_v: RationalMatrix
    beta_v: RationalMatrix

    def __post_init__(self):
        if not self.actions:
            raise ShapeMismatchError("A representation needs at least one action")
        shape = (self.dim_g, self.dim_v, self.dim_v)
        actions = tuple(_as_tensor(rho, shape) for rho in self.actions)
        for rho in actions:
            rho.flags.writeable = False
        object.__setattr__(self, "actions", actions)
        for label, twist in (("alpha_v", self.alpha_v), ("beta_v", self.beta_v)):
            if twist.shape != (self.dim_v, self.dim_v):
                raise ShapeMismatchError(f"{label} has shape {twist.shape}, expected {(self.dim_v,) * 2}")

    @cached_property
    def regular_v(self) -> bool:
        return self.alpha_v.is_invertible() and self.beta_v.is_invertible()

    def action(self, which: int = 0) -> np.ndarray:
        if not 0 <= which < len(self.actions):
            raise BracketIndexError(
                f"Action index {which} out of range (representation has {len(self.actions)})"
            )
        return self.actions[which]

    def act(self, which: int, p: np.ndarray, v: np.ndarray) -> np.ndarray:
        """``p . v`` under the chosen action."""
        return contract(self.action(which), p, v)

    def with_actions(self, *actions: np.ndarray) -> "Representation":
        return Representation(self.dim_g, self.dim_v, tuple(actions), self.alpha_v, self.beta_v)


@dataclass
class Violation:
    """One failing instance of an identity: basis indices and both sides."""

    axiom: str
    indices: Tuple[int, ...]
    lhs: Any
    rhs: Any

    def to_dict(self) -> Dict[str, Any]:
        return {
            "axiom": self.axiom,
            "indices": list(self.indices),
            "lhs": _format_value(self.lhs),
            "rhs": _format_value(self.rhs),
        }


def _format_value(value: Any) -> str:
    if isinstance(value, RationalMatrix):
        return ";".join(",".join(row) for row in value.to_strings())
    if isinstance(value, np.ndarray):
        return format_vector(value.flat)
    return str(value)


@dataclass
class AxiomReport:
    """Outcome of a set of identity checks, keyed by identity tag."""

    checks: Dict[str, bool] = field(default_factory=dict)
    violations: List[Violation] = field(default_factory=list)

    @property
    def skew_ok(self) -> bool:
        return self.checks.get("bihom-skew", True)

    @property
    def jacobi_ok(self) -> bool:
        return self.checks.get("bihom-jacobi", True)

    @property
    def commute_ok(self) -> bool:
        return self.checks.get("twist-commute", True)

    @property
    def multiplicative_ok(self) -> bool:
        return self.checks.get("multiplicative", True)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def record(self, axiom: str, failures: List[Violation]) -> "AxiomReport":
        self.checks[axiom] = self.checks.get(axiom, True) and not failures
        self.violations.extend(failures)
        return self

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        for axiom, ok in other.checks.items():
            self.checks[axiom] = self.checks.get(axiom, True) and ok
        self.violations.extend(other.violations)
        return self

    def first_violation(self, axiom: Optional[str] = None) -> Optional[Violation]:
        return next((v for v in self.violations if axiom is None or v.axiom == axiom), None)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "checks": dict(self.checks),
            "violations": [v.to_dict() for v in self.violations],
        }


def _columns(matrix: RationalMatrix) -> List[np.ndarray]:
    return [matrix.column(i) for i in range(matrix.cols)]


def _commute_failures(alpha: RationalMatrix, beta: RationalMatrix) -> List[Violation]:
    ab, ba = alpha @ beta, beta @ alpha
    return [] if ab == ba else [Violation("twist-commute", (), ab, ba)]


def _vectors_differ(lhs: np.ndarray, rhs: np.ndarray) -> bool:
    return any(a != b for a, b in zip(lhs, rhs))


def check_bihom_lie(A: BiHomAlgebra, which: int = 0) -> AxiomReport:
    """
    Check BiHom skew-symmetry, the BiHom-Jacobi identity and ``alpha beta = beta alpha``.

    Parameters
    ----------
    A : BiHomAlgebra
        Algebra to check
    which : int
        Index of the bracket to check

    Returns
    -------
    AxiomReport
        Checks ``bihom-skew``, ``bihom-jacobi`` and ``twist-commute`` with
        witnesses for every failing basis pair or triple

    Raises
    ------
    BracketIndexError
        If ``which`` is out of range
    """
    bracket = A.bracket(which)
    n = A.dim
    alpha_e = _columns(A.alpha)
    beta_e = _columns(A.beta)
    beta2_e = _columns(A.beta @ A.beta)

    skew: List[Violation] = []
    for i in range(n):
        for j in range(i, n):
            lhs = bracket(beta_e[i], alpha_e[j])
            rhs = -bracket(beta_e[j], alpha_e[i])
            if _vectors_differ(lhs, rhs):
                skew.append(Violation("bihom-skew", (i, j), lhs, rhs))

    inner = {
        (j, k): bracket(beta_e[j], alpha_e[k])
        for j, k in itertools.product(range(n), repeat=2)
    }
    jacobi: List[Violation] = []
    for i, j, k in itertools.product(range(n), repeat=3):
        total = (bracket(beta2_e[i], inner[j, k])
                 + bracket(beta2_e[j], inner[k, i])
                 + bracket(beta2_e[k], inner[i, j]))
        if not is_zero(total):
            jacobi.append(Violation("bihom-jacobi", (i, j, k), total, zero_vector(n)))

    report = AxiomReport()
    report.record("bihom-skew", skew)
    report.record("bihom-jacobi", jacobi)
    report.record("twist-commute", _commute_failures(A.alpha, A.beta))
    if not report.passed:
        logger.debug(f"Bracket {which} fails {[k for k, ok in report.checks.items() if not ok]}")
    return report


def check_multiplicative(A: BiHomAlgebra, which: int = 0) -> AxiomReport:
    """Check that alpha and beta are morphisms of the chosen bracket."""
    bracket = A.bracket(which)
    failures: List[Violation] = []
    for twist in (A.alpha, A.beta):
        images = _columns(twist)
        for i, j in itertools.product(range(A.dim), repeat=2):
            lhs = twist @ bracket.on_basis(i, j)
            rhs = bracket(images[i], images[j])
            if _vectors_differ(lhs, rhs):
                failures.append(Violation("multiplicative", (i, j), lhs, rhs))
    return AxiomReport().record("multiplicative", failures)


def _is_bracket_morphism(f: RationalMatrix, bracket: BracketTensor) -> bool:
    images = _columns(f)
    return all(
        not _vectors_differ(f @ bracket.on_basis(i, j), bracket(images[i], images[j]))
        for i, j in itertools.product(range(bracket.dim), repeat=2)
    )


def yau_twist(L: BiHomAlgebra, a: RationalMatrix, b: RationalMatrix) -> BiHomAlgebra:
    """
    Twist an ordinary Lie algebra into a BiHom-Lie algebra.

    Every bracket of ``L`` becomes ``{p, q} = [a(p), b(q)]`` and the twists
    become ``(a, b)``.

    Raises
    ------
    PreconditionError
        If ``L`` has non-identity twists or fails Lie axioms, if ``a`` and
        ``b`` do not commute, or if either is not a bracket morphism
    """
    if not (L.alpha.is_identity() and L.beta.is_identity()):
        raise PreconditionError("Yau twist requires an algebra with identity twists")
    if a.shape != (L.dim, L.dim) or b.shape != (L.dim, L.dim):
        raise ShapeMismatchError(f"Twist maps must be {L.dim}x{L.dim}")
    for t in range(len(L.brackets)):
        report = check_bihom_lie(L, t)
        if not report.passed:
            raise PreconditionError(f"Bracket {t} is not a Lie bracket", report)
    commute = _commute_failures(a, b)
    if commute:
        raise PreconditionError("Twist maps a and b do not commute",
                                AxiomReport().record("twist-commute", commute))
    for t, bracket in enumerate(L.brackets):
        for label, twist in (("a", a), ("b", b)):
            if not _is_bracket_morphism(twist, bracket):
                raise PreconditionError(f"Twist map {label} is not a morphism of bracket {t}")
    twisted = tuple(bracket.transform(a, b) for bracket in L.brackets)
    logger.info(f"Built Yau twist of a {L.dim}-dimensional algebra")
    return BiHomAlgebra(L.dim, twisted, a, b)


def assoc_commutator_lie(A: AssociativeAlgebra) -> BiHomAlgebra:
    """
    Commutator bracket ``[p, q] = p.q - (alpha^-1 beta q).(alpha beta^-1 p)``.

    The associativity axiom of the input is not checked here; see
    :func:`check_bihom_associative`.

    Raises
    ------
    NonRegularError
        If alpha or beta is singular
    """
    left = A.alpha.inverse() @ A.beta
    right = A.alpha @ A.beta.inverse()
    left_e = _columns(left)
    right_e = _columns(right)
    c = zero_tensor((A.dim,) * 3)
    for i, j in itertools.product(range(A.dim), repeat=2):
        c[i, j, :] = A.m[i, j, :] - A.product(left_e[j], right_e[i])
    return BiHomAlgebra(A.dim, (BracketTensor(c, A.dim),), A.alpha, A.beta)


def check_bihom_associative(A: AssociativeAlgebra) -> AxiomReport:
    """Check ``alpha(p).(q.r) = (p.q).beta(r)`` and that both twists are multiplicative."""
    n = A.dim
    alpha_e = _columns(A.alpha)
    beta_e = _columns(A.beta)
    assoc: List[Violation] = []
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = A.product(alpha_e[i], A.m[j, k, :])
        rhs = A.product(A.m[i, j, :], beta_e[k])
        if _vectors_differ(lhs, rhs):
            assoc.append(Violation("bihom-associativity", (i, j, k), lhs, rhs))
    mult: List[Violation] = []
    for twist, images in ((A.alpha, alpha_e), (A.beta, beta_e)):
        for i, j in itertools.product(range(n), repeat=2):
            lhs = twist @ A.m[i, j, :]
            rhs = A.product(images[i], images[j])
            if _vectors_differ(lhs, rhs):
                mult.append(Violation("multiplicative", (i, j), lhs, rhs))
    report = AxiomReport()
    report.record("bihom-associativity", assoc)
    report.record("multiplicative", mult)
    report.record("twist-commute", _commute_failures(A.alpha, A.beta))
    return report


def _require_lie(A: BiHomAlgebra, label: str) -> None:
    for t in range(len(A.brackets)):
        report = check_bihom_lie(A, t)
        if not report.passed:
            raise PreconditionError(f"{label}: bracket {t} fails the BiHom-Lie axioms", report)


def direct_sum(A: BiHomAlgebra, B: BiHomAlgebra) -> BiHomAlgebra:
    """
    Direct sum with componentwise brackets and block-diagonal twists.

    Brackets are paired by index, so both algebras must carry the same
    number of brackets.
    """
    if len(A.brackets) != len(B.brackets):
        raise ShapeMismatchError(
            f"Cannot pair {len(A.brackets)} brackets with {len(B.brackets)}"
        )
    _require_lie(A, "left summand")
    _require_lie(B, "right summand")
    n, m = A.dim, B.dim
    brackets = []
    for left, right in zip(A.brackets, B.brackets):
        c = zero_tensor((n + m,) * 3)
        c[:n, :n, :n] = left.c
        c[n:, n:, n:] = right.c
        brackets.append(BracketTensor(c, n + m))
    return BiHomAlgebra(n + m, tuple(brackets),
                        A.alpha.block_diagonal(B.alpha), A.beta.block_diagonal(B.beta))


def check_morphism(f: RationalMatrix, A: BiHomAlgebra, B: BiHomAlgebra) -> bool:
    """
    True when ``f`` intertwines both twist pairs and every paired bracket.

    Raises
    ------
    ShapeMismatchError
        If ``f`` is not ``dim(B) x dim(A)`` or the bracket counts differ
    """
    if f.shape != (B.dim, A.dim):
        raise ShapeMismatchError(f"Morphism has shape {f.shape}, expected {(B.dim, A.dim)}")
    if len(A.brackets) != len(B.brackets):
        raise ShapeMismatchError("Morphism endpoints carry different numbers of brackets")
    if B.alpha @ f != f @ A.alpha or B.beta @ f != f @ A.beta:
        logger.debug("Map does not intertwine the twists")
        return False
    images = _columns(f)
    for t, (source, target) in enumerate(zip(A.brackets, B.brackets)):
        for i, j in itertools.product(range(A.dim), repeat=2):
            if _vectors_differ(f @ source.on_basis(i, j), target(images[i], images[j])):
                logger.debug(f"Map fails to preserve bracket {t} at ({i}, {j})")
                return False
    return True


def check_representation(A: BiHomAlgebra, V: Representation, which: int = 0,
                         action: int = 0) -> AxiomReport:
    """
    Check the three representation conditions for one (bracket, action) pairing.

    ``rep-alpha``: alpha(p).alpha_V(v) = alpha_V(p.v);
    ``rep-beta``: the beta analogue;
    ``rep-bracket``: [beta(p), q].beta_V(v) = alpha beta(p).(q.v) - beta(q).(alpha(p).v).
    """
    bracket = A.bracket(which)
    rho = V.action(action)
    if V.dim_g != A.dim:
        raise ShapeMismatchError(f"Representation is over dimension {V.dim_g}, algebra has {A.dim}")
    n, m = A.dim, V.dim_v
    alpha_e, beta_e = _columns(A.alpha), _columns(A.beta)
    alphabeta_e = _columns(A.alpha @ A.beta)
    alpha_v, beta_v = _columns(V.alpha_v), _columns(V.beta_v)

    def act(p, v):
        return contract(rho, p, v)

    twist_failures: Dict[str, List[Violation]] = {"rep-alpha": [], "rep-beta": []}
    for axiom, g_images, v_images, v_twist in (
        ("rep-alpha", alpha_e, alpha_v, V.alpha_v),
        ("rep-beta", beta_e, beta_v, V.beta_v),
    ):
        for i, a in itertools.product(range(n), range(m)):
            lhs = act(g_images[i], v_images[a])
            rhs = v_twist @ rho[i, a, :]
            if _vectors_differ(lhs, rhs):
                twist_failures[axiom].append(Violation(axiom, (i, a), lhs, rhs))

    bracket_failures: List[Violation] = []
    for i, j, a in itertools.product(range(n), range(n), range(m)):
        lhs = act(bracket(beta_e[i], basis_vector(n, j)), beta_v[a])
        rhs = act(alphabeta_e[i], rho[j, a, :]) - act(beta_e[j], act(alpha_e[i], basis_vector(m, a)))
        if _vectors_differ(lhs, rhs):
            bracket_failures.append(Violation("rep-bracket", (i, j, a), lhs, rhs))

    report = AxiomReport()
    report.record("rep-alpha", twist_failures["rep-alpha"])
    report.record("rep-beta", twist_failures["rep-beta"])
    report.record("rep-bracket", bracket_failures)
    report.record("twist-commute", _commute_failures(V.alpha_v, V.beta_v))
    return report


def semidirect_bracket(A: BiHomAlgebra, V: Representation, which: int,
                       action: int) -> BracketTensor:
    """Bracket of the semidirect product built from one (bracket, action) pairing."""
    n, m = A.dim, V.dim_v
    left = A.alpha_inv @ A.beta
    right = V.alpha_v @ V.beta_v.inverse()
    bracket = A.bracket(which)
    total = n + m
    c = zero_tensor((total,) * 3)
    for x, y in itertools.product(range(total), repeat=2):
        p, a = basis_vector(total, x)[:n], basis_vector(total, x)[n:]
        q, b = basis_vector(total, y)[:n], basis_vector(total, y)[n:]
        c[x, y, :n] = bracket(p, q)
        c[x, y, n:] = V.act(action, p, b) - V.act(action, left @ q, right @ a)
    return BracketTensor(c, total)


def semidirect_product(A: BiHomAlgebra, V: Representation, which: int = 0,
                       action: int = 0) -> BiHomAlgebra:
    """
    Semidirect product on g + V with twists alpha + alpha_V and beta + beta_V.

    The bracket is ``[(p, a), (q, b)] = ([p, q], p.b - (alpha^-1 beta q).(alpha_V beta_V^-1 a))``.

    Raises
    ------
    NonRegularError
        If either twist pair is singular
    PreconditionError
        If the pairing is not a representation
    """
    A.require_regular()
    if not V.regular_v:
        raise NonRegularError("alpha_V and beta_V must be invertible")
    report = check_representation(A, V, which, action)
    if not report.passed:
        raise PreconditionError("Semidirect product requires a representation", report)
    tensor = semidirect_bracket(A, V, which, action)
    logger.info(f"Built semidirect product of dimension {A.dim + V.dim_v}")
    return BiHomAlgebra(A.dim + V.dim_v, (tensor,),
                        A.alpha.block_diagonal(V.alpha_v), A.beta.block_diagonal(V.beta_v))


def adjoint_representation(A: BiHomAlgebra) -> Representation:
    """Each bracket acting on g itself, with the algebra's own twists."""
    return Representation(A.dim, A.dim, tuple(b.c for b in A.brackets), A.alpha, A.beta)


def hom_lie_specialization(A: BiHomAlgebra) -> bool:
    """True when ``alpha == beta``, i.e. the algebra is a Hom-Lie algebra."""
    return A.alpha == A.beta


def with_alpha_as_beta(A: BiHomAlgebra) -> BiHomAlgebra:
    """Copy of ``A`` with beta replaced by alpha."""
    return BiHomAlgebra(A.dim, A.brackets, A.alpha, A.alpha)


def combine_brackets(brackets: Sequence[BracketTensor],
                     weights: Iterable[RationalLike]) -> BracketTensor:
    """Linear combination ``sum_t w_t [.,.]_t``."""
    total = BracketTensor.zero(brackets[0].dim)
    for bracket, weight in zip(brackets, weights):
        total = total + bracket.scale(weight)
    return total


def combine_actions(actions: Sequence[np.ndarray], weights: Iterable[RationalLike]) -> np.ndarray:
    """Linear combination of action tensors."""
    total = zero_tensor(actions[0].shape)
    for rho, weight in zip(actions, weights):
        total = total + rho * parse_rational(weight)
    return total
