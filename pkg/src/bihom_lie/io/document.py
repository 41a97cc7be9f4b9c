"""
Algebra documents.

A document is one JSON object describing an algebra by structure constants::

    {
      "dim": 2,
      "alpha": [["1", "0"], ["0", "1"]],
      "beta": [["1", "0"], ["0", "1"]],
      "brackets": [{"name": "mu", "c": [[["0", "0"], ["0", "1"]], [["0", "-1"], ["0", "0"]]]}],
      "representations": [{"name": "V", "dimV": 1, "alphaV": [["1"]], "betaV": [["1"]],
                           "actions": [{"name": "rho", "rho": [[["1"]], [["0"]]]}]}],
      "operators": [{"name": "N", "matrix": [["1", "0"], ["0", "0"]], "kind": "nijenhuis"}]
    }

``c[i][j][k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]`` and
``rho[i][a][b]`` the coefficient of ``v_b`` in ``e_i . v_a``. Rationals are
integers or ``"p/q"`` strings; alpha and beta default to the identity.
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

from ..core.bihom_core import BiHomAlgebra, BracketTensor, Representation
from ..core.qlinalg import RationalMatrix, format_rational, parse_rational
from .exceptions import DocumentParseError, DocumentReadError, MissingEntryError
from .validators import DocumentValidator

logger = logging.getLogger(__name__)


def _matrix(value: Optional[list], n: int) -> RationalMatrix:
    if value is None:
        return RationalMatrix.identity(n)
    return RationalMatrix(value, cols=n)


def _strings(array: np.ndarray) -> Any:
    array = np.asarray(array, dtype=object)
    if array.ndim == 0:
        return format_rational(array.item())
    return [_strings(sub) for sub in array]


@dataclass
class NamedAction:
    name: str
    rho: np.ndarray


@dataclass
class RepresentationEntry:
    name: str
    dim_v: int
    alpha_v: RationalMatrix
    beta_v: RationalMatrix
    actions: List[NamedAction] = field(default_factory=list)


@dataclass
class OperatorEntry:
    """A named linear operator with the attributes Rota-Baxter checks need."""

    name: str
    matrix: RationalMatrix
    kind: Optional[str] = None
    s: int = 0
    l: int = 0
    lam: Fraction = Fraction(0)


@dataclass(eq=False)
class InputDocument:
    """A validated algebra document with named brackets, representations and operators."""

    dim: int
    alpha: RationalMatrix
    beta: RationalMatrix
    brackets: Dict[str, BracketTensor]
    representations: Dict[str, RepresentationEntry] = field(default_factory=dict)
    operators: Dict[str, OperatorEntry] = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        if not isinstance(other, InputDocument):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def bracket_names(self) -> List[str]:
        return list(self.brackets)

    def bracket(self, name: Optional[str] = None) -> BracketTensor:
        if name is None:
            return next(iter(self.brackets.values()))
        if name not in self.brackets:
            raise MissingEntryError(f"No bracket named {name!r}; have {', '.join(self.brackets)}")
        return self.brackets[name]

    def algebra(self, *names: Optional[str]) -> BiHomAlgebra:
        """Algebra carrying the named brackets (the first bracket when none is named)."""
        chosen = [self.bracket(name) for name in names] if names else [self.bracket()]
        return BiHomAlgebra(self.dim, tuple(chosen), self.alpha, self.beta)

    def pair_algebra(self, first: Optional[str] = None, second: Optional[str] = None) -> BiHomAlgebra:
        """Algebra carrying two brackets; defaults to the first two in the document."""
        names = self.bracket_names()
        if first is None:
            first = names[0]
        if second is None:
            remaining = [n for n in names if n != first]
            if not remaining:
                raise MissingEntryError("A compatible pair needs a second bracket")
            second = remaining[0]
        return self.algebra(first, second)

    def representation(self, name: Optional[str] = None,
                       actions: Sequence[Optional[str]] = (None,)) -> Representation:
        """
        Representation carrying the named actions in order.

        A ``None`` action name picks the action at the same position.
        """
        if not self.representations:
            raise MissingEntryError("Document has no representations")
        if name is None:
            name = next(iter(self.representations))
        if name not in self.representations:
            raise MissingEntryError(f"No representation named {name!r}")
        entry = self.representations[name]
        by_name = {a.name: a for a in entry.actions}
        chosen = []
        for position, action in enumerate(actions):
            if action is None:
                if position >= len(entry.actions):
                    raise MissingEntryError(f"Representation {name!r} has no action {position + 1}")
                chosen.append(entry.actions[position].rho)
            elif action in by_name:
                chosen.append(by_name[action].rho)
            else:
                raise MissingEntryError(f"No action named {action!r} in representation {name!r}")
        return Representation(self.dim, entry.dim_v, tuple(chosen), entry.alpha_v, entry.beta_v)

    def operator(self, name: Optional[str] = None, kind: Optional[str] = None) -> OperatorEntry:
        """Named operator, or the first of the given kind when no name is given."""
        if name is not None:
            if name not in self.operators:
                raise MissingEntryError(f"No operator named {name!r}")
            return self.operators[name]
        for entry in self.operators.values():
            if kind is None or entry.kind == kind:
                return entry
        raise MissingEntryError(f"No operator of kind {kind!r}" if kind else "Document has no operators")

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "dim": self.dim,
            "alpha": self.alpha.to_strings(),
            "beta": self.beta.to_strings(),
            "brackets": [{"name": name, "c": b.to_strings()} for name, b in self.brackets.items()],
        }
        if self.representations:
            data["representations"] = [
                {
                    "name": rep.name,
                    "dimV": rep.dim_v,
                    "alphaV": rep.alpha_v.to_strings(),
                    "betaV": rep.beta_v.to_strings(),
                    "actions": [{"name": a.name, "rho": _strings(a.rho)} for a in rep.actions],
                }
                for rep in self.representations.values()
            ]
        if self.operators:
            data["operators"] = [
                {
                    "name": op.name,
                    "matrix": op.matrix.to_strings(),
                    **({"kind": op.kind} if op.kind else {}),
                    "s": op.s,
                    "l": op.l,
                    "lambda": format_rational(op.lam),
                }
                for op in self.operators.values()
            ]
        return data


def load_document(data: Dict[str, Any]) -> InputDocument:
    """
    Build a document from decoded data.

    Raises
    ------
    DocumentParseError, DimensionMismatchError, MalformedRationalError
        As reported by :class:`DocumentValidator`
    """
    report = DocumentValidator().validate(data)
    for warning in report['warnings']:
        logger.debug(warning)
    dim = data["dim"]
    brackets = {
        entry["name"]: BracketTensor(entry["c"], dim) for entry in data["brackets"]
    }
    representations = {}
    for entry in data.get("representations", []):
        dim_v = entry["dimV"]
        representations[entry["name"]] = RepresentationEntry(
            entry["name"],
            dim_v,
            _matrix(entry.get("alphaV"), dim_v),
            _matrix(entry.get("betaV"), dim_v),
            [NamedAction(a["name"], _rational_tensor(a["rho"], (dim, dim_v, dim_v)))
             for a in entry["actions"]],
        )
    operators = {
        entry["name"]: OperatorEntry(
            entry["name"],
            RationalMatrix(entry["matrix"], cols=dim),
            entry.get("kind"),
            entry.get("s", 0),
            entry.get("l", 0),
            parse_rational(entry.get("lambda", 0)),
        )
        for entry in data.get("operators", [])
    }
    return InputDocument(dim, _matrix(data.get("alpha"), dim), _matrix(data.get("beta"), dim),
                         brackets, representations, operators)


def _rational_tensor(value: Any, shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    raw = np.asarray(value, dtype=object)
    for index in np.ndindex(*shape):
        out[index] = parse_rational(raw[index])
    return out


def parse_text(text: str) -> InputDocument:
    """Parse a document from JSON text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentParseError(e.msg, line=e.lineno, column=e.colno) from None
    return load_document(data)


def parse_input(path: Union[str, Path]) -> InputDocument:
    """
    Read and validate an algebra document.

    Parameters
    ----------
    path : str or Path
        JSON document

    Returns
    -------
    InputDocument
        Fully validated document

    Raises
    ------
    FileNotFoundError
        If the file does not exist
    DocumentReadError
        If the path cannot be read, e.g. a directory
    DocumentParseError
        If the text is not UTF-8 or not well-formed JSON
    DimensionMismatchError
        If a shape disagrees with dim or dimV
    MalformedRationalError
        If an entry is not a rational
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Document not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise DocumentParseError(
            f"{path.name} is not UTF-8 text: {e.reason} at byte {e.start}"
        ) from None
    except OSError as e:
        raise DocumentReadError(f"Cannot read {path}: {e.strerror or e}") from None
    document = parse_text(text)
    logger.info(f"Loaded {path.name}: dim={document.dim}, brackets={document.bracket_names()}")
    return document


def serialize_document(document: InputDocument) -> str:
    """Canonical JSON text with string rationals."""
    return json.dumps(document.to_dict(), indent=2) + "\n"
