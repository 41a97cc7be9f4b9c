"""Command reports and their text and machine renderings."""

import os
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import pandas as pd

from ..core.bihom_core import AxiomReport, Violation
from ..io.exceptions import ConfigurationError

DEFAULT_WIDTH = 72
WIDTH_VARIABLE = "BIHOM_LIE_WIDTH"

REFERENCES = {
    "bihom-skew": "bihom-lie-definition",
    "bihom-jacobi": "bihom-lie-definition",
    "twist-commute": "bihom-lie-definition",
    "multiplicative": "multiplicative-twists",
    "rep-alpha": "representation-definition",
    "rep-beta": "representation-definition",
    "rep-bracket": "representation-definition",
    "mixed-jacobi": "compatible-definition",
    "compatible-sum": "compatible-definition",
    "representation-compatibility": "compatible-representation",
    "yau-preconditions": "yau-twist",
    "nijenhuis-identity": "nijenhuis-operator",
    "rb-identity": "rota-baxter-operator",
    "rb-compatibility": "compatible-rota-baxter",
    "mc-element": "maurer-cartan-element",
    "mc-pair": "maurer-cartan-pair",
    "random-equivalence": "maurer-cartan-pair",
    "chain-map": "sum-chain-map",
    "anticommute": "coboundary-anticommute",
    "compatible-square": "compatible-complex",
}


def reference_for(name: str) -> str:
    """Identity tag for a check name such as ``bracket1:bihom-jacobi`` or ``chain-map-deg2``."""
    base = re.sub(r"-deg\d+$", "", name.split(":")[-1])
    return REFERENCES.get(base, base)


def report_width() -> int:
    """Text width from ``BIHOM_LIE_WIDTH``, default 72."""
    raw = os.environ.get(WIDTH_VARIABLE)
    if raw is None or raw == "":
        return DEFAULT_WIDTH
    try:
        width = int(raw)
    except ValueError:
        raise ConfigurationError(f"{WIDTH_VARIABLE} must be an integer, got {raw!r}") from None
    if width < 20:
        raise ConfigurationError(f"{WIDTH_VARIABLE} must be at least 20, got {width}")
    return width


@dataclass
class Verdict:
    name: str
    ref: str
    passed: bool
    witness: Optional[Violation] = None


@dataclass
class Report:
    """Verdicts, cohomology tables and data lines produced by one command."""

    command: str
    verdicts: List[Verdict] = field(default_factory=list)
    tables: Dict[str, Dict[int, int]] = field(default_factory=dict)
    data: Dict[str, str] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return 0 if all(v.passed for v in self.verdicts) else 1

    def add(self, name: str, passed: bool, witness: Optional[Violation] = None,
            ref: Optional[str] = None) -> None:
        self.verdicts.append(Verdict(name, ref or reference_for(name), passed, witness))

    def add_axioms(self, axioms: AxiomReport, prefix: str = "") -> None:
        """One verdict per checked identity, with its first witness on failure."""
        for key, ok in axioms.checks.items():
            witness = None if ok else axioms.first_violation(key)
            self.add(f"{prefix}{key}", ok, witness)

    def render(self, fmt: str = "text") -> str:
        if fmt == "machine":
            return render_machine(self)
        if fmt == "text":
            return render_text(self)
        raise ConfigurationError(f"Unknown report format {fmt!r}")


def _witness_fields(witness: Violation) -> Dict[str, str]:
    fields = witness.to_dict()
    indices = ",".join(str(i + 1) for i in witness.indices) or "-"
    return {"indices": indices, "lhs": fields["lhs"] or "-", "rhs": fields["rhs"] or "-"}


def render_machine(report: Report) -> str:
    """Line-oriented ``key=value`` records."""
    lines = [f"command={report.command}"]
    lines += [f"data.{key}={value}" for key, value in report.data.items()]
    for verdict in report.verdicts:
        result = "pass" if verdict.passed else "fail"
        lines.append(f"verdict={verdict.name} ref={verdict.ref} result={result}")
        if verdict.witness is not None:
            w = _witness_fields(verdict.witness)
            lines.append(
                f"witness={verdict.witness.axiom} indices={w['indices']} lhs={w['lhs']} rhs={w['rhs']}"
            )
    for table, values in report.tables.items():
        lines += [f"table={table} degree={n} dim={values[n]}" for n in sorted(values)]
    lines.append(f"exit={report.exit_code}")
    return "\n".join(lines) + "\n"


def render_text(report: Report) -> str:
    """Human-readable report; tables are laid out with pandas."""
    width = report_width()
    rule = "=" * width
    lines = [f"bihom-lie {report.command}", rule]
    for key, value in report.data.items():
        lines.append(f"{key}: {value}")
    with pd.option_context("display.width", width, "display.max_colwidth", width):
        if report.verdicts:
            frame = pd.DataFrame(
                [(v.name, v.ref, "PASS" if v.passed else "FAIL") for v in report.verdicts],
                columns=["check", "reference", "result"],
            )
            lines += ["", frame.to_string(index=False)]
        for verdict in report.verdicts:
            if verdict.witness is not None:
                w = _witness_fields(verdict.witness)
                lines.append(
                    f"  {verdict.name} fails at e({w['indices']}): lhs=({w['lhs']}) rhs=({w['rhs']})"
                )
        for table, values in report.tables.items():
            frame = pd.DataFrame(
                {"degree": sorted(values), table: [values[n] for n in sorted(values)]}
            )
            lines += ["", frame.to_string(index=False)]
    lines += [rule, f"exit: {report.exit_code}"]
    return "\n".join(lines) + "\n"
