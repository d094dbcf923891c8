"""Command-line front end: identify, prob, sweep, classify, verify.

Exit codes: 0 success, 1 usage/parse/domain/I-O error, 2 verification failure
or no affine completion, 3 register limit exceeded.
"""

import argparse
import sys
from collections.abc import Sequence

import structlog

from src.algorithms.queries import two_query_outcomes
from src.algorithms.schemas import IdentifyMode, Protocol, RunConfig, VariantPolicy
from src.algorithms.voting import choose_variant, majority_vote
from src.analysis.crosscheck import compare_instance
from src.analysis.formulas import (
    DcFractions,
    affine_class_threshold,
    in_affine_class,
    in_linear_class,
    linear_class_threshold,
    p_affine,
    p_linear,
)
from src.analysis.landscape import (
    SweepMode,
    SweepOracle,
    class_coverage,
    sweep_landscape,
    write_landscape_csv,
)
from src.boolfn.completions import consistent_affine_completions
from src.boolfn.io import read_function_file
from src.cli.reports import (
    ClassifyReport,
    CompletionProbabilities,
    FunctionCounts,
    IdentifyReport,
    OutcomeEntry,
    ProbReport,
    fmt,
)
from src.cli.verify import run_verification
from src.config import settings
from src.errors import AffineIdentifyError, RegisterLimitError
from src.log_config import configure_logging
from src.statevector.register import OracleVariant
from src.statevector.rng import resolve_seed

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2
EXIT_LIMIT = 3

PROB_OUTCOMES = 4


class CliArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; this tool reserves 2 for failed checks."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(report, as_json: bool) -> None:
    print(report.model_dump_json(indent=2) if as_json else report.render())


# === Commands ===


def cmd_identify(args: argparse.Namespace) -> int:
    partial = read_function_file(args.file)
    config = RunConfig(
        mode=IdentifyMode(args.mode),
        variant_policy=VariantPolicy(args.oracle),
        trials_per_oracle=args.trials,
        rng_seed=resolve_seed(args.seed),
        protocol=Protocol(args.protocol),
        threads=args.threads,
    )
    result = majority_vote(partial, config)
    if result.anomalies:
        print(
            "warning: " + ", ".join(result.anomalies) + "; the vote may not be meaningful",
            file=sys.stderr,
        )
    _emit(IdentifyReport.build(partial, result, config.protocol.value), args.json)
    return EXIT_OK


def cmd_prob(args: argparse.Namespace) -> int:
    partial = read_function_file(args.file)
    completions = consistent_affine_completions(partial)
    if not completions:
        print(f"error: {args.file} has no affine completion", file=sys.stderr)
        logger.warning("no_affine_completion", path=str(args.file), n=partial.n, d=partial.d)
        return EXIT_FAILURE

    variant = choose_variant(partial) if args.oracle == "auto" else OracleVariant(args.oracle)
    report = ProbReport(
        counts=FunctionCounts.of(partial),
        variant=variant.value,
        completions=[
            CompletionProbabilities.of(compare_instance(partial, spec, variant))
            for spec in completions
        ],
        outcomes=OutcomeEntry.ranked(two_query_outcomes(partial, variant), PROB_OUTCOMES),
    )
    _emit(report, args.json)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = sweep_landscape(SweepMode(args.mode), args.steps, SweepOracle(args.oracle))
    path = write_landscape_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {path}")
    print(f"class_coverage={fmt(class_coverage(rows))} oracle={args.oracle}")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    fr = DcFractions.from_counts(args.n, args.d0, args.d1)
    if args.mode == SweepMode.LINEAR.value:
        probability, threshold, verdict = p_linear(fr), linear_class_threshold(fr.D), in_linear_class(fr)
    else:
        probability, threshold, verdict = p_affine(fr), affine_class_threshold(fr.D), in_affine_class(fr)

    report = ClassifyReport(
        n=args.n,
        d0=args.d0,
        d1=args.d1,
        D=fr.D,
        D0=fr.D0,
        D1=fr.D1,
        mode=args.mode,
        probability=probability,
        threshold=threshold,
        in_class=verdict,
    )
    _emit(report, args.json)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(args.max_n, args.masks, args.shots, resolve_seed(args.seed))
    print(report.render())
    return EXIT_OK if report.passed else EXIT_FAILURE


# === Parser ===


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {number}")
    return number


def _non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {number}")
    return number


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="affine-identify",
        description="Identify incompletely defined linear and affine Boolean functions",
    )
    parser.add_argument("--log-level", default=None, help="Log level (default from LOG_LEVEL)")
    parser.add_argument("--log-json", action="store_true", help="Render logs as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    seed_help = "RNG seed (default from DEFAULT_SEED)"

    p_identify = sub.add_parser("identify", help="Recover C and c_n from a .bfn file")
    p_identify.add_argument("file", help="Function file")
    p_identify.add_argument("--mode", choices=[m.value for m in IdentifyMode], default="affine")
    p_identify.add_argument(
        "--oracle", choices=[p.value for p in VariantPolicy], default=VariantPolicy.AUTO.value
    )
    p_identify.add_argument(
        "--protocol", choices=[p.value for p in Protocol], default=Protocol.TWO_QUERY.value
    )
    p_identify.add_argument(
        "--trials",
        type=_positive,
        default=settings.default_trials_per_oracle,
        help="Runs per oracle",
    )
    p_identify.add_argument("--seed", type=int, default=None, help=seed_help)
    p_identify.add_argument(
        "--threads", type=_non_negative, default=settings.default_threads, help="0 = all cores"
    )
    p_identify.add_argument("--json", action="store_true", help="Print the report as JSON")
    p_identify.set_defaults(handler=cmd_identify)

    p_prob = sub.add_parser("prob", help="Analytic and simulated success for each completion")
    p_prob.add_argument("file", help="Function file")
    p_prob.add_argument("--oracle", choices=["auto", "plus", "minus"], default="auto")
    p_prob.add_argument("--json", action="store_true", help="Print the report as JSON")
    p_prob.set_defaults(handler=cmd_prob)

    p_sweep = sub.add_parser("sweep", help="Write the (D, D1) success landscape as CSV")
    p_sweep.add_argument("--mode", choices=[m.value for m in SweepMode], default="linear")
    p_sweep.add_argument("--steps", type=int, default=100, help="Grid steps (at least 2)")
    p_sweep.add_argument("--oracle", choices=[o.value for o in SweepOracle], default="plus")
    p_sweep.add_argument("--out", required=True, help="CSV output path")
    p_sweep.set_defaults(handler=cmd_sweep)

    p_classify = sub.add_parser("classify", help="2/3-class membership for given counts")
    p_classify.add_argument("--n", type=_positive, required=True)
    p_classify.add_argument("--d0", type=int, required=True)
    p_classify.add_argument("--d1", type=int, required=True)
    p_classify.add_argument("--mode", choices=[m.value for m in SweepMode], default="affine")
    p_classify.add_argument("--json", action="store_true", help="Print the report as JSON")
    p_classify.set_defaults(handler=cmd_classify)

    p_verify = sub.add_parser("verify", help="Run the verification suite")
    p_verify.add_argument("--max-n", type=_positive, default=4)
    p_verify.add_argument("--masks", type=_positive, default=50)
    p_verify.add_argument("--shots", type=_positive, default=10_000)
    p_verify.add_argument("--seed", type=int, default=None, help=seed_help)
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.log_level, args.log_json or None)

    try:
        return args.handler(args)
    except RegisterLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (AffineIdentifyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
