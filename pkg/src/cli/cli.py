"""Command-line front end.

Subcommands: prove, countermodel, decide, verify-axioms, check-proof,
catalog and sweep. ``--json`` prints one JSON object on stdout; logs go to
stderr. Exit codes: 0 proved/ok, 1 refuted/violations, 2 unknown, 3 error,
64 usage.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.lattice.catalog import (
    BUILTIN_NAMES,
    DEFAULT_COUNTERMODEL_CATALOG,
    CatalogError,
    catalog_list,
    from_file,
    get_structure,
    to_file,
)
from src.lattice.lattice import OrthoposetError, verify_structure
from src.logging_config import configure_logging, get_logger
from src.proof.proof import (
    Derivation,
    DerivationError,
    ProofError,
    ProofResult,
    ProofStatus,
    SearchBudgetExceeded,
    check_derivation,
    decide,
    format_derivation,
    prove_rsol_t,
    prove_with_cut,
)
from src.semantics.semantics import Countermodel, SemanticsError, find_countermodel
from src.settings import Settings, load_settings
from src.terms.terms import TermError, format_sequent, parse_sequent

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_UNKNOWN = 2
EXIT_ERROR = 3
EXIT_USAGE = 64

STATUS_EXIT = {
    ProofStatus.PROVED: EXIT_OK,
    ProofStatus.REFUTED: EXIT_REFUTED,
    ProofStatus.EXHAUSTED: EXIT_UNKNOWN,
}


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="sasaki", description="Sasaki orthologic toolkit")
    parser.add_argument("--log-level", help="Override LOG_LEVEL (DEBUG, INFO, WARNING, ...)")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_common(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--json", action="store_true", help="Print a JSON object on stdout")
        return p

    prove = with_common(sub.add_parser("prove", help="Search for an RSOL/T derivation"))
    prove.add_argument("sequent")
    prove.add_argument("--with-cut", action="store_true", help="Also allow T over subterm cut terms")
    prove.add_argument("--cut-depth", type=int, help="Maximum T applications per branch")
    prove.add_argument("--budget", type=int, help="Node budget")
    prove.add_argument("--emit-proof", metavar="FILE", help="Write the derivation as a proof file")

    counter = with_common(sub.add_parser("countermodel", help="Search the catalog for a countermodel"))
    counter.add_argument("sequent")
    counter.add_argument("--catalog", nargs="+", metavar="NAME", help="Catalog structures to search, in order")
    counter.add_argument("--model", action="append", default=[], metavar="FILE", help="Model file to search first")
    counter.add_argument("--max-atoms", type=int)

    dec = with_common(sub.add_parser("decide", help="Prove, or refute over the catalog"))
    dec.add_argument("sequent")
    dec.add_argument("--catalog", nargs="+", metavar="NAME")
    dec.add_argument("--budget", type=int)
    dec.add_argument("--max-atoms", type=int)

    verify = with_common(sub.add_parser("verify-axioms", help="Check a structure's laws exhaustively"))
    source = verify.add_mutually_exclusive_group(required=True)
    source.add_argument("--catalog", metavar="NAME")
    source.add_argument("--model", metavar="FILE")
    verify.add_argument("--closure-cap", type=int)

    check = with_common(sub.add_parser("check-proof", help="Check a proof file"))
    check.add_argument("file")
    check.add_argument("--allow-t", action="store_true", help="Accept T (cut) nodes")

    cat = with_common(sub.add_parser("catalog", help="List built-in structures"))
    cat.add_argument("--export", nargs=2, metavar=("NAME", "FILE"), help="Write a structure as a model file")

    sweep = with_common(sub.add_parser("sweep", help="Sweep a generated corpus"))
    sweep.add_argument("--max-connectives", type=int, default=2)
    sweep.add_argument("--atoms", nargs="+", default=["a", "b"])
    sweep.add_argument("--cut-probe", action="store_true", help="Report where T helps instead of soundness")
    sweep.add_argument("--budget", type=int)
    sweep.add_argument("--store", action="store_true", help="Persist the report to DATABASE_URL")
    sweep.add_argument("--csv", metavar="FILE", help="Write the per-sequent rows as CSV")
    return parser


def _emit(args, data: Dict[str, Any], text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=False))
    else:
        print(text)


def _result_text(result: ProofResult) -> str:
    lines = [f"{result.status.value}: {format_sequent(result.sequent)}"]
    if result.derivation is not None:
        lines.append(format_derivation(result.derivation))
    if result.countermodel is not None:
        info = result.countermodel.to_dict()
        valuation = ", ".join(f"{k}={v}" for k, v in info["valuation"].items())
        lines.append(f"countermodel {info['model']}: {valuation}; lhs={info['lhs']} rhs={info['rhs']}")
    if result.not_found is not None:
        lines.append(f"no countermodel among {result.not_found.valuations} valuations")
    return "\n".join(lines)


def _budget_exceeded(args, e: SearchBudgetExceeded) -> int:
    _emit(
        args,
        {"result": "unknown", "sequent": format_sequent(e.sequent), "reason": f"{e.reason} budget", "nodes": e.nodes},
        f"unknown: {e}",
    )
    return EXIT_UNKNOWN


def cmd_prove(args, settings: Settings) -> int:
    s = parse_sequent(args.sequent)
    try:
        if args.with_cut:
            result = prove_with_cut(s, depth=args.cut_depth, settings=settings)
        else:
            result = prove_rsol_t(s, settings)
    except SearchBudgetExceeded as e:
        return _budget_exceeded(args, e)
    if args.emit_proof and result.derivation is not None:
        Path(args.emit_proof).write_text(json.dumps(result.derivation.to_dict(), indent=2))
        logger.info(f"Wrote proof of {format_sequent(s)} to {args.emit_proof}")
    _emit(args, result.to_dict(), _result_text(result))
    return STATUS_EXIT[result.status]


def _catalog_arg(names: Optional[List[str]], model_files: Sequence[str] = ()) -> list:
    return [from_file(path) for path in model_files] + list(names or DEFAULT_COUNTERMODEL_CATALOG)


def cmd_countermodel(args, settings: Settings) -> int:
    s = parse_sequent(args.sequent)
    found = find_countermodel(
        s,
        _catalog_arg(args.catalog, args.model),
        max_atoms=settings.max_atoms if args.max_atoms is None else args.max_atoms,
        max_valuations=settings.max_valuations,
    )
    if isinstance(found, Countermodel):
        data = {"result": "refuted", "sequent": format_sequent(s), **found.to_dict()}
        result = ProofResult(ProofStatus.REFUTED, s, countermodel=found)
        _emit(args, data, _result_text(result))
        return EXIT_REFUTED
    data = {"result": "unknown", "sequent": format_sequent(s), "search_space": found.to_dict()}
    _emit(args, data, f"unknown: no countermodel among {found.valuations} valuations")
    return EXIT_UNKNOWN


def cmd_decide(args, settings: Settings) -> int:
    s = parse_sequent(args.sequent)
    settings = settings.replace(max_atoms=args.max_atoms)
    try:
        result = decide(s, settings, _catalog_arg(args.catalog))
    except SearchBudgetExceeded as e:
        return _budget_exceeded(args, e)
    _emit(args, result.to_dict(), _result_text(result))
    return STATUS_EXIT[result.status]


def cmd_verify_axioms(args, settings: Settings) -> int:
    structure = from_file(args.model) if args.model else get_structure(args.catalog)
    report = verify_structure(structure, args.closure_cap or settings.closure_cap)
    data = report.to_dict(structure)
    if report.ok:
        text = f"{structure.name}: all checks passed"
    else:
        text = "\n".join(
            [f"{structure.name}: {len(report.violations)} violations"]
            + [f"  {v['axiom']}: {', '.join(v['witness'])} {v['detail']}".rstrip() for v in data["violations"]]
        )
    _emit(args, data, text)
    return EXIT_OK if report.ok else EXIT_REFUTED


def cmd_check_proof(args, settings: Settings) -> int:
    try:
        data = json.loads(Path(args.file).read_text())
    except OSError as e:
        raise ProofError(f"Cannot read proof file {args.file}: {e}") from e
    except json.JSONDecodeError as e:
        raise ProofError(f"Proof file {args.file} is not valid JSON: {e}") from e
    derivation = Derivation.from_dict(data)
    try:
        result = check_derivation(derivation, allow_T=args.allow_t)
    except DerivationError as e:
        _emit(
            args,
            {"result": "invalid", "path": list(e.path), "error": str(e), "expected": e.expected},
            f"invalid: {e}",
        )
        return EXIT_REFUTED
    hyps = [{"label": label, "sequent": format_sequent(s)} for label, s in result.open_hypotheses]
    text = f"valid: {format_sequent(derivation.conclusion)} ({result.nodes} nodes)"
    if hyps:
        text += "\nopen hypotheses:\n" + "\n".join(f"  {h['label']}: {h['sequent']}" for h in hyps)
    _emit(
        args,
        {"result": "valid", "conclusion": format_sequent(derivation.conclusion), "open_hypotheses": hyps},
        text,
    )
    return EXIT_OK


def cmd_catalog(args, settings: Settings) -> int:
    if args.export:
        name, path = args.export
        to_file(get_structure(name), path)
        _emit(args, {"exported": name, "file": path}, f"wrote {name} to {path}")
        return EXIT_OK
    frame = catalog_list(BUILTIN_NAMES)
    _emit(args, {"structures": frame.to_dict(orient="records")}, frame.to_string(index=False))
    return EXIT_OK


def cmd_sweep(args, settings: Settings) -> int:
    from src.sweep.sweep import cut_probe, generate_corpus, soundness_sweep, store_report

    corpus = generate_corpus(args.atoms, args.max_connectives)
    logger.info(f"Sweeping {len(corpus)} sequents")
    report = cut_probe(corpus, settings) if args.cut_probe else soundness_sweep(corpus, settings=settings)
    report.parameters["max_connectives"] = args.max_connectives
    if args.csv:
        report.to_csv(args.csv)
    data = report.summary()
    if args.store:
        from src.db.session import get_db_session, init_db

        init_db()
        with get_db_session() as db:
            data["run_id"] = store_report(db, report)
    if args.cut_probe:
        data["cut_only"] = report.with_outcome("cut_only")
    else:
        data["violations"] = report.violations
    text = "\n".join(f"{outcome}: {n}" for outcome, n in sorted(data["counts"].items()))
    _emit(args, data, text)
    return EXIT_OK if report.ok else EXIT_REFUTED


COMMANDS = {
    "prove": cmd_prove,
    "countermodel": cmd_countermodel,
    "decide": cmd_decide,
    "verify-axioms": cmd_verify_axioms,
    "check-proof": cmd_check_proof,
    "catalog": cmd_catalog,
    "sweep": cmd_sweep,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, dispatch, and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(parser.format_usage().rstrip(), file=sys.stderr)
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK

    configure_logging(args.log_level, stream=sys.stderr, force=True)
    settings = load_settings()
    if getattr(args, "budget", None) is not None:
        settings = settings.replace(node_budget=args.budget)

    try:
        return COMMANDS[args.command](args, settings)
    except (TermError, OrthoposetError, CatalogError, SemanticsError, ProofError) as e:
        logger.error(f"{args.command} failed: {e}")
        if getattr(args, "json", False):
            print(json.dumps({"result": "error", "error": str(e)}))
        else:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as e:
        logger.exception(f"Unexpected error in {args.command}: {e}")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))
