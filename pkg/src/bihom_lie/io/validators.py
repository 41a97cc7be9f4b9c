"""Validators for algebra documents."""

import logging
from typing import Any, Dict, List, Optional, Tuple

from ..core.qlinalg import parse_rational
from .exceptions import (
    DimensionMismatchError,
    DocumentParseError,
    MalformedRationalError,
)

logger = logging.getLogger(__name__)

OPERATOR_KINDS = ("nijenhuis", "rota-baxter", "twist", "morphism")


def nested_shape(value: Any, path: str) -> Tuple[int, ...]:
    """
    Shape of a regular nested list.

    Raises
    ------
    DimensionMismatchError
        If sibling lists have different shapes
    """
    if not isinstance(value, list):
        return ()
    if not value:
        return (0,)
    shapes = {nested_shape(item, f"{path}[{i}]") for i, item in enumerate(value)}
    if len(shapes) != 1:
        raise DimensionMismatchError(path, "a regular array", "ragged nesting")
    return (len(value),) + shapes.pop()


class DocumentValidator:
    """Validates the structure, shapes and rationals of an algebra document."""

    def validate(self, data: Any) -> Dict[str, Any]:
        """
        Check a decoded document.

        Parameters
        ----------
        data : dict
            Decoded document

        Returns
        -------
        dict
            Validation report with keys 'valid', 'dim', 'warnings'

        Raises
        ------
        DocumentParseError
            If a required field is missing, has the wrong type, or a name repeats
        DimensionMismatchError
            If an array shape disagrees with dim or dimV
        MalformedRationalError
            If an entry is not an integer or "p/q" string
        """
        report = {'valid': False, 'dim': None, 'warnings': []}

        if not isinstance(data, dict):
            raise DocumentParseError("Document must be a mapping", field="<root>")

        dim = self._require_count(data, "dim", "dim")
        report['dim'] = dim

        for key in ("alpha", "beta"):
            if key in data:
                self._check_array(data[key], key, (dim, dim))
            else:
                report['warnings'].append(f"{key} missing; identity assumed")

        brackets = self._require_list(data, "brackets", "brackets")
        if not brackets:
            raise DocumentParseError("At least one bracket is required", field="brackets")
        self._check_names(brackets, "brackets")
        for i, entry in enumerate(brackets):
            path = f"brackets[{i}]"
            self._require_mapping(entry, path)
            if "c" not in entry:
                raise DocumentParseError("Missing structure constants", field=f"{path}.c")
            self._check_array(entry["c"], f"{path}.c", (dim, dim, dim))

        representations = self._optional_list(data, "representations")
        self._check_names(representations, "representations")
        for i, entry in enumerate(representations):
            self._check_representation(entry, f"representations[{i}]", dim)

        operators = self._optional_list(data, "operators")
        self._check_names(operators, "operators")
        for i, entry in enumerate(operators):
            self._check_operator(entry, f"operators[{i}]", dim, report)

        unknown = set(data) - {"dim", "alpha", "beta", "brackets", "representations", "operators"}
        for key in sorted(unknown):
            warning = f"Unknown field ignored: {key}"
            report['warnings'].append(warning)
            logger.warning(warning)

        report['valid'] = True
        return report

    def _check_representation(self, entry: Any, path: str, dim: int) -> None:
        self._require_mapping(entry, path)
        dim_v = self._require_count(entry, "dimV", f"{path}.dimV")
        for key in ("alphaV", "betaV"):
            if key in entry:
                self._check_array(entry[key], f"{path}.{key}", (dim_v, dim_v))
        actions = self._require_list(entry, "actions", f"{path}.actions")
        if not actions:
            raise DocumentParseError("At least one action is required", field=f"{path}.actions")
        self._check_names(actions, f"{path}.actions")
        for j, action in enumerate(actions):
            action_path = f"{path}.actions[{j}]"
            self._require_mapping(action, action_path)
            if "rho" not in action:
                raise DocumentParseError("Missing action tensor", field=f"{action_path}.rho")
            self._check_array(action["rho"], f"{action_path}.rho", (dim, dim_v, dim_v))

    def _check_operator(self, entry: Any, path: str, dim: int, report: Dict[str, Any]) -> None:
        self._require_mapping(entry, path)
        if "matrix" not in entry:
            raise DocumentParseError("Missing operator matrix", field=f"{path}.matrix")
        self._check_array(entry["matrix"], f"{path}.matrix", (dim, dim))
        kind = entry.get("kind")
        if kind is not None and kind not in OPERATOR_KINDS:
            raise DocumentParseError(
                f"Unknown operator kind {kind!r}; expected one of {', '.join(OPERATOR_KINDS)}",
                field=f"{path}.kind",
            )
        for key in ("s", "l"):
            if key in entry:
                self._require_count(entry, key, f"{path}.{key}")
        if "lambda" in entry:
            self._check_rational(entry["lambda"], f"{path}.lambda")
        elif kind == "rota-baxter":
            report['warnings'].append(f"{path}: weight missing; 0 assumed")

    def _check_array(self, value: Any, path: str, expected: Tuple[int, ...]) -> None:
        shape = nested_shape(value, path)
        if shape != expected and not (0 in expected and self._is_empty(value)):
            raise DimensionMismatchError(path, expected, shape)
        self._check_entries(value, path)

    @staticmethod
    def _is_empty(value: Any) -> bool:
        return isinstance(value, list) and (not value or all(DocumentValidator._is_empty(v) for v in value))

    def _check_entries(self, value: Any, path: str) -> None:
        if isinstance(value, list):
            for i, item in enumerate(value):
                self._check_entries(item, f"{path}[{i}]")
        else:
            self._check_rational(value, path)

    @staticmethod
    def _check_rational(value: Any, path: str) -> None:
        try:
            parse_rational(value)
        except MalformedRationalError as e:
            raise MalformedRationalError(f"{path}: {e}") from None

    @staticmethod
    def _require_mapping(entry: Any, path: str) -> None:
        if not isinstance(entry, dict):
            raise DocumentParseError("Expected a mapping", field=path)

    @staticmethod
    def _require_count(data: Dict[str, Any], key: str, path: str) -> int:
        if key not in data:
            raise DocumentParseError("Missing required field", field=path)
        value = data[key]
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise DocumentParseError(f"Expected a non-negative integer, got {value!r}", field=path)
        return value

    @staticmethod
    def _require_list(data: Dict[str, Any], key: str, path: str) -> List[Any]:
        if key not in data:
            raise DocumentParseError("Missing required field", field=path)
        if not isinstance(data[key], list):
            raise DocumentParseError("Expected a list", field=path)
        return data[key]

    @staticmethod
    def _optional_list(data: Dict[str, Any], key: str) -> List[Any]:
        value = data.get(key, [])
        if not isinstance(value, list):
            raise DocumentParseError("Expected a list", field=key)
        return value

    @staticmethod
    def _check_names(entries: List[Any], path: str) -> None:
        seen = set()
        for i, entry in enumerate(entries):
            name: Optional[str] = entry.get("name") if isinstance(entry, dict) else None
            if not isinstance(name, str) or not name:
                raise DocumentParseError("Missing or empty name", field=f"{path}[{i}].name")
            if name in seen:
                raise DocumentParseError(f"Duplicate name {name!r}", field=f"{path}[{i}].name")
            seen.add(name)
