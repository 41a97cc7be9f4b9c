"""Command-line interface for BiHom-Lie checks and cohomology."""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .core.bihom_core import (
    BiHomAlgebra,
    Representation,
    adjoint_representation,
    check_bihom_lie,
    check_multiplicative,
    check_representation,
    hom_lie_specialization,
    yau_twist,
)
from .core.calculator import CohomologyCalculator
from .core.cochains import cochain_space_basis, mc_check
from .core.compatible import (
    CompatiblePair,
    MCPair,
    anticommute_check,
    chain_map_check,
    check_compatible_pair,
    check_compatible_representation,
    compatible_cochain_basis,
    compatible_square_check,
    mc_pair_check,
    nijenhuis_bracket,
    nijenhuis_check,
    rb_check,
    rb_compatible_check,
    rb_compatible_pair,
    rb_induced_bracket,
)
from .core.qlinalg import RationalMatrix, format_vector
from .core.samples import random_compatible_sweep
from .io.document import InputDocument, OperatorEntry, parse_input
from .io.exceptions import BiHomLieError, ConfigurationError, PreconditionError
from .utils.logging import setup_logger
from .utils.report import Report

logger = logging.getLogger(__name__)

COMMANDS = (
    "check", "compat", "cohomology", "ccohomology", "twist",
    "nijenhuis", "rota-baxter", "mc", "chainmap",
)


@dataclass
class CommandFlags:
    """Flag values shared by all subcommands."""

    bracket: Optional[str] = None
    bracket2: Optional[str] = None
    rep: Optional[str] = None
    action: Optional[str] = None
    action2: Optional[str] = None
    degrees: str = "0..2"
    operators: List[str] = field(default_factory=list)
    seed: Optional[int] = None
    samples: int = 20
    jobs: int = 1

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CommandFlags":
        return cls(
            bracket=args.bracket,
            bracket2=args.bracket2,
            rep=args.rep,
            action=args.action,
            action2=args.action2,
            degrees=args.degrees,
            operators=list(args.operator or []),
            seed=args.seed,
            samples=args.samples,
            jobs=args.jobs,
        )


def parse_degrees(text: str) -> List[int]:
    """Parse ``"A..B"`` (inclusive) or a single degree."""
    low, sep, high = text.partition("..")
    try:
        start = int(low)
        stop = int(high) if sep else start
    except ValueError:
        raise ConfigurationError(f"Degrees must look like A..B, got {text!r}") from None
    if start < 0 or stop < start:
        raise ConfigurationError(f"Invalid degree range {text!r}")
    return list(range(start, stop + 1))


def _format_matrix(matrix: RationalMatrix) -> str:
    return ";".join(",".join(row) for row in matrix.to_strings())


def _bracket_data(report: Report, label: str, algebra: BiHomAlgebra, which: int = 0) -> None:
    """Nonzero basis brackets as ``label[i,j]`` data lines, 1-based."""
    bracket = algebra.bracket(which)
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            value = bracket.on_basis(i, j)
            if any(x != 0 for x in value):
                report.data[f"{label}[{i + 1},{j + 1}]"] = format_vector(value)


def _pair(doc: InputDocument, flags: CommandFlags) -> CompatiblePair:
    return CompatiblePair(doc.pair_algebra(flags.bracket, flags.bracket2))


def _single_module(doc: InputDocument, A: BiHomAlgebra,
                   flags: CommandFlags) -> Tuple[Representation, str]:
    if flags.rep is None:
        return adjoint_representation(A), "adjoint"
    return doc.representation(flags.rep, (flags.action,)), flags.rep


def _pair_module(doc: InputDocument, P: CompatiblePair,
                 flags: CommandFlags) -> Tuple[Representation, str]:
    if flags.rep is None:
        return adjoint_representation(P.algebra), "adjoint"
    return doc.representation(flags.rep, (flags.action, flags.action2)), flags.rep


def _operators(doc: InputDocument, flags: CommandFlags, kind: str,
               needed: int) -> List[OperatorEntry]:
    if flags.operators:
        return [doc.operator(name) for name in flags.operators]
    chosen = [op for op in doc.operators.values() if op.kind == kind][:needed]
    if not chosen:
        chosen = [doc.operator(kind=kind)]
    return chosen


def check_command(doc: InputDocument, flags: CommandFlags) -> Report:
    """Axioms of one bracket, and of a representation when the document has one."""
    report = Report("check")
    A = doc.algebra(flags.bracket)
    report.data["dim"] = str(A.dim)
    report.data["bracket"] = flags.bracket or doc.bracket_names()[0]
    report.data["regular"] = "yes" if A.regular else "no"
    report.data["hom-lie"] = "yes" if hom_lie_specialization(A) else "no"
    report.add_axioms(check_bihom_lie(A))
    report.add_axioms(check_multiplicative(A))
    if flags.rep is not None or doc.representations:
        V = doc.representation(flags.rep, (flags.action,))
        report.add_axioms(check_representation(A, V))
    return report


def compat_command(doc: InputDocument, flags: CommandFlags) -> Report:
    """Compatibility of two brackets and, if present, of a representation with two actions."""
    report = Report("compat")
    P = _pair(doc, flags)
    report.data["dim"] = str(P.dim)
    report.add_axioms(check_compatible_pair(P))
    if flags.rep is not None or doc.representations:
        V = doc.representation(flags.rep, (flags.action, flags.action2))
        report.add_axioms(check_compatible_representation(P, V))
    return report


def cohomology_command(doc: InputDocument, flags: CommandFlags) -> Report:
    report = Report("cohomology")
    A = doc.algebra(flags.bracket)
    V, label = _single_module(doc, A, flags)
    degrees = parse_degrees(flags.degrees)
    report.data["dim"] = str(A.dim)
    report.data["coefficients"] = label
    calculator = CohomologyCalculator(n_jobs=flags.jobs)
    report.tables["H"] = calculator.table(A, V, degrees)
    report.tables["C"] = {n: cochain_space_basis(A, V, n).dimension for n in degrees}
    return report


def ccohomology_command(doc: InputDocument, flags: CommandFlags) -> Report:
    report = Report("ccohomology")
    P = _pair(doc, flags)
    V, label = _pair_module(doc, P, flags)
    degrees = parse_degrees(flags.degrees)
    report.data["dim"] = str(P.dim)
    report.data["coefficients"] = label
    report.add_axioms(check_compatible_pair(P))
    calculator = CohomologyCalculator(n_jobs=flags.jobs)
    report.tables["Hc"] = calculator.compatible_table(P, V, degrees)
    report.tables["Cc"] = {n: len(compatible_cochain_basis(P, V, n)) for n in degrees}
    return report


def twist_command(doc: InputDocument, flags: CommandFlags) -> Report:
    """Yau twist of an ordinary Lie bracket by two operators."""
    report = Report("twist")
    L = doc.algebra(flags.bracket)
    entries = _operators(doc, flags, "twist", 2)
    if len(entries) != 2:
        raise ConfigurationError("twist needs two operators: a then b")
    a, b = entries[0].matrix, entries[1].matrix
    report.data["alpha"] = _format_matrix(a)
    report.data["beta"] = _format_matrix(b)
    try:
        twisted = yau_twist(L, a, b)
    except PreconditionError as e:
        logger.warning(f"Yau twist rejected: {e}")
        witness = e.report.first_violation() if e.report is not None else None
        report.add("yau-preconditions", False, witness)
        return report
    report.add("yau-preconditions", True)
    _bracket_data(report, "twisted", twisted)
    report.add_axioms(check_bihom_lie(twisted))
    report.add_axioms(check_multiplicative(twisted))
    return report


def nijenhuis_command(doc: InputDocument, flags: CommandFlags) -> Report:
    report = Report("nijenhuis")
    A = doc.algebra(flags.bracket)
    entry = _operators(doc, flags, "nijenhuis", 1)[0]
    report.data["operator"] = entry.name
    ok = nijenhuis_check(A, entry.matrix)
    report.add("nijenhuis-identity", ok)
    if not ok:
        return report
    deformed = nijenhuis_bracket(A, entry.matrix)
    _bracket_data(report, "deformed", A.with_brackets(deformed))
    pair = CompatiblePair.from_brackets(A.bracket(), deformed, A.alpha, A.beta)
    report.add_axioms(check_compatible_pair(pair))
    return report


def rota_baxter_command(doc: InputDocument, flags: CommandFlags) -> Report:
    """Rota-Baxter identity of R, and compatibility with S when a second operator is given."""
    report = Report("rota-baxter")
    A = doc.algebra(flags.bracket)
    entries = _operators(doc, flags, "rota-baxter", 2)
    R = entries[0]
    s, l, lam = R.s, R.l, R.lam
    report.data["weight"] = str(lam)
    report.data["shift"] = f"{s},{l}"
    passed = True
    for entry in entries:
        ok = rb_check(A, entry.matrix, s, l, lam)
        report.add(f"{entry.name}:rb-identity", ok)
        passed = passed and ok
    if not passed:
        return report
    if len(entries) == 1:
        induced = A.with_brackets(rb_induced_bracket(A, R.matrix, s, l, lam))
        _bracket_data(report, "induced", induced)
        report.add_axioms(check_bihom_lie(induced), prefix="induced:")
        return report
    S = entries[1]
    ok = rb_compatible_check(A, R.matrix, S.matrix, s, l, lam)
    report.add("rb-compatibility", ok)
    if ok:
        report.add_axioms(check_compatible_pair(rb_compatible_pair(A, R.matrix, S.matrix, s, l, lam)))
    return report


def mc_command(doc: InputDocument, flags: CommandFlags) -> Report:
    """Maurer-Cartan characterisations, with an optional seeded random sweep."""
    report = Report("mc")
    A = doc.algebra(flags.bracket)
    axioms = check_bihom_lie(A)
    report.add("bihom-jacobi", axioms.jacobi_ok, axioms.first_violation("bihom-jacobi"))
    report.add("mc-element", mc_check(A))
    if len(doc.brackets) > 1:
        P = _pair(doc, flags)
        report.add("mc-pair", mc_pair_check(MCPair.from_pair(P), P.algebra))
    if flags.samples > 0:
        summary = random_compatible_sweep(flags.samples, flags.seed)
        report.data["sweep-seed"] = str(summary.seed)
        report.data["sweep-agreement"] = f"{summary.agreements}/{summary.samples}"
        report.data["sweep-compatible"] = str(summary.compatible)
        report.add("random-equivalence", summary.all_agree)
    return report


def chainmap_command(doc: InputDocument, flags: CommandFlags) -> Report:
    """Per degree: the sum chain map, anticommuting coboundaries and the square of d_c."""
    report = Report("chainmap")
    P = _pair(doc, flags)
    V, label = _pair_module(doc, P, flags)
    report.data["coefficients"] = label
    for n in parse_degrees(flags.degrees):
        report.add(f"chain-map-deg{n}", chain_map_check(P, V, n))
        report.add(f"anticommute-deg{n}", anticommute_check(P, V, n))
        report.add(f"compatible-square-deg{n}", compatible_square_check(P, V, n))
    return report


HANDLERS: Dict[str, Callable[[InputDocument, CommandFlags], Report]] = {
    "check": check_command,
    "compat": compat_command,
    "cohomology": cohomology_command,
    "ccohomology": ccohomology_command,
    "twist": twist_command,
    "nijenhuis": nijenhuis_command,
    "rota-baxter": rota_baxter_command,
    "mc": mc_command,
    "chainmap": chainmap_command,
}


def run_command(doc: InputDocument, command: str, flags: Optional[CommandFlags] = None) -> Report:
    """
    Run one subcommand on a parsed document.

    Raises
    ------
    ConfigurationError
        If the command is unknown or a flag value is invalid
    MissingEntryError
        If a named bracket, representation or operator is absent
    """
    if command not in HANDLERS:
        raise ConfigurationError(f"Unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
    report = HANDLERS[command](doc, flags or CommandFlags())
    logger.info(f"{command}: {sum(v.passed for v in report.verdicts)}/{len(report.verdicts)} checks passed")
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihom-lie",
        description="BiHom-Lie algebras: axiom checks, compatible structures and cohomology"
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"bihom-lie {__version__}"
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        help="Logging level"
    )
    parser.add_argument(
        "--log-file",
        help="Log file path"
    )
    parser.add_argument(
        "--format",
        choices=["text", "machine"],
        default="text",
        help="Report format"
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")
    helps = {
        "check": "Check the BiHom-Lie axioms of one bracket",
        "compat": "Check that two brackets form a compatible pair",
        "cohomology": "Chevalley-Eilenberg cohomology dimensions",
        "ccohomology": "Compatible cohomology dimensions",
        "twist": "Yau twist of a Lie bracket by two operators",
        "nijenhuis": "Nijenhuis operator and its deformed bracket",
        "rota-baxter": "Rota-Baxter operators and their induced brackets",
        "mc": "Maurer-Cartan characterisation of brackets and pairs",
        "chainmap": "Coboundary identities of the compatible complex",
    }
    for name in COMMANDS:
        sub = subparsers.add_parser(name, help=helps[name])
        sub.add_argument("document", help="Algebra document (JSON)")
        sub.add_argument("--bracket", help="Bracket name (default: first)")
        sub.add_argument("--bracket2", help="Second bracket name (default: next)")
        sub.add_argument("--rep", help="Representation name (default: adjoint)")
        sub.add_argument("--action", help="Action name (default: first)")
        sub.add_argument("--action2", help="Second action name (default: second)")
        sub.add_argument("--degrees", default="0..2", help="Degree range A..B")
        sub.add_argument("--operator", action="append", help="Operator name (repeatable)")
        sub.add_argument("--seed", type=int, default=None, help="Seed for random sweeps")
        sub.add_argument("--samples", type=int, default=20, help="Random sweep size (0 disables)")
        sub.add_argument("--jobs", type=int, default=1, help="Parallel jobs for cohomology tables")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return 2

    logger = setup_logger(level=args.log_level, log_file=args.log_file)
    try:
        doc = parse_input(args.document)
        report = run_command(doc, args.command, CommandFlags.from_args(args))
        output = report.render(args.format)
    except (BiHomLieError, FileNotFoundError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 2

    sys.stdout.write(output)
    if report.exit_code == 0:
        logger.success(f"{args.command} passed")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
