"""Command-line front end.

Subcommands: models, countermodels, equilibrium, to-program, to-dnf,
check-equiv, count.  Text output is line oriented and deterministic;
--format structured emits one JSON document with the signature, the
command, the results and the verification status.

Exit codes: 0 success, 1 failed verification or non-equivalence witness,
2 input/parse errors, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .counting import CountBoundExceededError, count_formula, factor_table
from .countermodels import theory_to_program_cm
from .dnf import theory_to_dnf, theory_to_dnf_clauses
from .formula import (
    Program,
    Signature,
    Theory,
    program_to_text,
    to_text,
)
from .parser import ParseError, parse_theory
from .rewriting import RewriteTrace, simplify, theory_to_program_syn
from .semantics import (
    DEFAULT_CAP,
    CapExceededError,
    HtInterpretation,
    equilibrium_models,
    format_atom_set,
    ht_countermodels,
    ht_equivalent,
    ht_models,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_CAP_EXCEEDED = 3

#: Caps beyond this need an explicit acknowledgment flag.
CAP_ACK_LIMIT = 20


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    inputs: tuple[str, ...]
    signature_override: tuple[str, ...]
    method: Optional[str]
    mode: str
    simplify: bool
    verify: bool
    annotate: bool
    fmt: str
    cap: int
    trace: bool


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="htlp",
        description="Here-and-there logic toolkit: models, equilibrium "
        "models, strongly equivalent programs, normal forms and counts.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_theory_command(name: str, help_text: str, n_inputs: str = "*"):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument(
            "inputs", nargs=n_inputs, metavar="FILE",
            help="theory file ('-' or nothing reads standard input)",
        )
        cmd.add_argument(
            "--signature", default="",
            help="extra atoms for the signature, space or comma separated",
        )
        cmd.add_argument(
            "--format", dest="fmt", choices=("text", "structured"),
            default="text", help="output format",
        )
        cmd.add_argument(
            "--cap", type=int, default=DEFAULT_CAP,
            help=f"enumeration cap in atoms (default {DEFAULT_CAP})",
        )
        cmd.add_argument(
            "--allow-large", action="store_true",
            help=f"acknowledge a cap beyond {CAP_ACK_LIMIT} atoms",
        )
        return cmd

    add_theory_command("models", "list the here-and-there models")
    add_theory_command("countermodels", "list the here-and-there countermodels")
    add_theory_command("equilibrium", "list the equilibrium models (answer sets)")

    to_program = add_theory_command(
        "to-program", "translate into a strongly equivalent program"
    )
    to_program.add_argument(
        "--method", choices=("syntactic", "countermodel"), required=True,
        help="translation method",
    )
    to_program.add_argument(
        "--mode", choices=("whole", "per_formula"), default="whole",
        help="countermodel method: one construction over the whole "
        "signature, or per formula over its own atoms",
    )
    to_program.add_argument(
        "--simplify", action="store_true",
        help="clean rules up (preserves the model set exactly)",
    )
    to_program.add_argument(
        "--verify", action="store_true",
        help="re-check equivalence with the input and report VERIFIED/FAILED",
    )
    to_program.add_argument(
        "--trace", action="store_true",
        help="log the syntactic rewrite steps to standard error",
    )

    to_dnf = add_theory_command(
        "to-dnf", "build the model-based disjunctive normal form"
    )
    to_dnf.add_argument("--verify", action="store_true",
                        help="re-check equivalence with the input")
    to_dnf.add_argument("--annotate", action="store_true",
                        help="one clause per line with its source interpretation")

    add_theory_command(
        "check-equiv", "decide strong equivalence of two theories", n_inputs=2
    )

    count = sub.add_parser(
        "count", help="count programs modulo strong equivalence"
    )
    count.add_argument("n", type=int, help="number of atoms")
    count.add_argument("--verbose", action="store_true",
                       help="also print the per-size factor table")
    count.add_argument("--format", dest="fmt", choices=("text", "structured"),
                       default="text")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    override = tuple(
        name
        for name in getattr(args, "signature", "").replace(",", " ").split()
    )
    return RunConfig(
        subcommand=args.subcommand,
        inputs=tuple(getattr(args, "inputs", ())),
        signature_override=override,
        method=getattr(args, "method", None),
        mode=getattr(args, "mode", "whole"),
        simplify=getattr(args, "simplify", False),
        verify=getattr(args, "verify", False),
        annotate=getattr(args, "annotate", False),
        fmt=getattr(args, "fmt", "text"),
        cap=getattr(args, "cap", DEFAULT_CAP),
        trace=getattr(args, "trace", False),
    )


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _parse_input(path: str, override: Signature) -> Theory:
    try:
        return parse_theory(_read_source(path), override)
    except ParseError as error:
        error.source = path if path != "-" else "<stdin>"
        raise


def _load_theory(paths: tuple[str, ...], cfg: RunConfig) -> Theory:
    override = Signature(cfg.signature_override)
    theory = Theory((), override)
    for path in paths if paths else ("-",):
        theory = theory.union(_parse_input(path, override))
    return theory


def _check_cap(cfg: RunConfig, sig: Signature) -> None:
    if len(sig) > cfg.cap:
        raise CapExceededError(len(sig), cfg.cap)


def _interp_json(interp: HtInterpretation) -> dict:
    return {"here": sorted(interp.here), "there": sorted(interp.there)}


def _emit_structured(cfg: RunConfig, sig: Signature, results: dict,
                     verification: Optional[str] = None) -> None:
    document = {
        "command": cfg.subcommand,
        "signature": list(sig),
        "results": results,
        "verification": verification,
    }
    print(json.dumps(document, indent=2))


def _cmd_model_listing(cfg: RunConfig) -> int:
    theory = _load_theory(cfg.inputs, cfg)
    _check_cap(cfg, theory.signature)
    if cfg.fmt == "structured":
        _emit_structured(cfg, theory.signature, {
            "models": [_interp_json(m) for m in ht_models(theory, cfg.cap)],
            "countermodels": [
                _interp_json(m) for m in ht_countermodels(theory, cfg.cap)
            ],
        })
    else:
        compute = ht_models if cfg.subcommand == "models" else ht_countermodels
        for line in compute(theory, cfg.cap).display_lines():
            print(line)
    return EXIT_OK


def _cmd_equilibrium(cfg: RunConfig) -> int:
    theory = _load_theory(cfg.inputs, cfg)
    _check_cap(cfg, theory.signature)
    answer_sets = equilibrium_models(theory, cfg.cap)
    if cfg.fmt == "structured":
        _emit_structured(cfg, theory.signature, {
            "equilibrium_models": [sorted(y) for y in answer_sets],
        })
    else:
        for y in answer_sets:
            print(format_atom_set(y))
    return EXIT_OK


def _translate(cfg: RunConfig, theory: Theory) -> Program:
    if cfg.method == "countermodel":
        program = theory_to_program_cm(theory, cfg.mode, cfg.cap)
        if cfg.simplify:
            program = simplify(program, cfg.cap)
        return program
    trace = RewriteTrace() if cfg.trace else None
    program = theory_to_program_syn(theory, cfg.simplify, trace, cfg.cap)
    if trace is not None and trace.steps:
        print("\n".join(trace.lines()), file=sys.stderr)
    return program


def _cmd_to_program(cfg: RunConfig) -> int:
    theory = _load_theory(cfg.inputs, cfg)
    _check_cap(cfg, theory.signature)
    program = _translate(cfg, theory)
    verification = None
    if cfg.verify:
        outcome = ht_equivalent(theory, program.to_theory(), cfg.cap)
        verification = "VERIFIED" if outcome.equivalent else "FAILED"
    if cfg.fmt == "structured":
        _emit_structured(cfg, theory.signature, {
            "method": cfg.method,
            "mode": cfg.mode if cfg.method == "countermodel" else "per_formula",
            "rule_count": len(program),
            "rules": [line for line in program_to_text(program).splitlines()],
        }, verification)
    else:
        text = program_to_text(program)
        if text:
            print(text)
        if verification is not None:
            print(verification)
    return EXIT_CHECK_FAILED if verification == "FAILED" else EXIT_OK


def _cmd_to_dnf(cfg: RunConfig) -> int:
    theory = _load_theory(cfg.inputs, cfg)
    _check_cap(cfg, theory.signature)
    clauses = theory_to_dnf_clauses(theory, cfg.cap)
    formula = theory_to_dnf(theory, cfg.cap)
    verification = None
    if cfg.verify:
        outcome = ht_equivalent(theory, Theory((formula,), theory.signature), cfg.cap)
        verification = "VERIFIED" if outcome.equivalent else "FAILED"
    if cfg.fmt == "structured":
        _emit_structured(cfg, theory.signature, {
            "dnf": to_text(formula),
            "clauses": [
                {"clause": to_text(c.clause), "source": _interp_json(c.source)}
                for c in clauses
            ],
        }, verification)
    else:
        if cfg.annotate:
            for i, c in enumerate(clauses, start=1):
                print(f"{to_text(c.clause)}  % clause {i}: {c.source.display()}")
        else:
            print(to_text(formula))
        if verification is not None:
            print(verification)
    return EXIT_CHECK_FAILED if verification == "FAILED" else EXIT_OK


def _cmd_check_equiv(cfg: RunConfig) -> int:
    override = Signature(cfg.signature_override)
    first = _parse_input(cfg.inputs[0], override)
    second = _parse_input(cfg.inputs[1], override)
    _check_cap(cfg, first.signature | second.signature)
    outcome = ht_equivalent(first, second, cfg.cap)
    if cfg.fmt == "structured":
        _emit_structured(cfg, first.signature | second.signature, {
            "equivalent": outcome.equivalent,
            "witness": _interp_json(outcome.witness) if outcome.witness else None,
        })
    elif outcome.equivalent:
        print("EQUIVALENT")
    else:
        print(f"WITNESS {outcome.witness.display()}")
    return EXIT_OK if outcome.equivalent else EXIT_CHECK_FAILED


def _cmd_count(args: argparse.Namespace) -> int:
    result = count_formula(args.n)
    if args.fmt == "structured":
        document = {
            "command": "count",
            "signature": [],
            "results": {
                "n": result.n,
                "value": str(result.value),
                "factors": [
                    {"i": i, "binomial": binom, "factor": str(factor)}
                    for i, binom, factor in factor_table(args.n)
                ],
            },
            "verification": None,
        }
        print(json.dumps(document, indent=2))
        return EXIT_OK
    if args.verbose:
        for i, binom, factor in factor_table(args.n):
            print(f"i={i} binomial={binom} factor={factor}")
    print(result.value)
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        if args.subcommand == "count":
            return _cmd_count(args)
        cfg = _config_from_args(args)
        if cfg.cap > CAP_ACK_LIMIT and not args.allow_large:
            print(
                f"error: --cap {cfg.cap} exceeds {CAP_ACK_LIMIT}; "
                "pass --allow-large to confirm",
                file=sys.stderr,
            )
            return EXIT_PARSE_ERROR
        if cfg.subcommand in ("models", "countermodels"):
            return _cmd_model_listing(cfg)
        if cfg.subcommand == "equilibrium":
            return _cmd_equilibrium(cfg)
        if cfg.subcommand == "to-program":
            return _cmd_to_program(cfg)
        if cfg.subcommand == "to-dnf":
            return _cmd_to_dnf(cfg)
        if cfg.subcommand == "check-equiv":
            return _cmd_check_equiv(cfg)
        raise AssertionError(f"unhandled subcommand {cfg.subcommand!r}")
    except ParseError as error:
        source = getattr(error, "source", None)
        prefix = f"{source}: " if source else ""
        print(f"error: {prefix}{error}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except CapExceededError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except CountBoundExceededError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except (OSError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PARSE_ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
