import argparse
import contextlib
import io
import pathlib
import sys
from collections.abc import Sequence

import pptree

import lrcsim.api as lrc
from lrcsim import config, exceptions, logging
from lrcsim.parsers import json_io

EXIT_SUCCESS = 0
EXIT_FALSIFIED = 1
EXIT_ERROR = 2

# =======
# Helpers
# =======


def _emit(text: str, output: str) -> None:

    if output == "-":
        print(text, flush=True)
        return

    with open(output, "w+", encoding="utf-8") as file:
        file.write(text + "\n")


def _render_tree(root: pptree.Node) -> str:

    buffer = io.StringIO()

    with contextlib.redirect_stdout(buffer):
        pptree.print_tree(root, horizontal=True)

    return buffer.getvalue().rstrip()


def _systematic(code: lrc.code.CodeLike) -> lrc.code.SystematicCode:

    if not isinstance(code, lrc.code.SystematicCode):
        raise exceptions.FormatError("The codebook has no dimension 'k'")

    return code


def _one_based(coordinates: Sequence[int]) -> str:
    return "{" + ", ".join(str(c + 1) for c in coordinates) + "}"


# ===========
# Subcommands
# ===========


def _construct(args: argparse.Namespace) -> int:

    spec = json_io.spec_from_json(json_io.read_json(args.input))
    code = lrc.construct.build(spec)

    json_io.write_json(json_io.code_to_json(code), args.output)

    return EXIT_SUCCESS


def _analyze(args: argparse.Namespace) -> int:

    code = json_io.read_code(args.input)
    codebook = lrc.code.as_codebook(code)

    d = lrc.code.min_distance(codebook)
    singleton = lrc.code.check_singleton(codebook)
    profile = lrc.locality.locality_profile(codebook)

    status = EXIT_SUCCESS if singleton.holds else EXIT_FALSIFIED
    information_locality = None

    if isinstance(code, lrc.code.SystematicCode):
        localities = [profile[i].locality for i in code.information_coordinates()]
        if localities and all(l is not None for l in localities):
            information_locality = max(localities)

    if args.json:
        json_io.write_json(
            {
                "q": codebook.q,
                "n": codebook.n,
                "size": codebook.size,
                "dimension": codebook.dimension(),
                "d": d,
                "singleton": singleton._asdict(),
                "information_locality": information_locality,
                "profile": json_io.profile_to_json(profile),
            },
            args.output,
        )
        return status

    lines = [
        f"q={codebook.q} n={codebook.n} codewords={codebook.size} "
        f"dimension={codebook.dimension()}",
        f"d={d}",
        f"Singleton: n={singleton.lhs} >= {singleton.rhs} "
        f"({'holds' if singleton.holds else 'violated'}, slack {singleton.slack})",
        f"information locality: {information_locality}",
    ]

    for entry in profile.entries:
        witness = _one_based(entry.witness) if entry.witness is not None else "-"
        lines.append(f"  {entry.coordinate + 1}: locality {entry.locality} {witness}")

    _emit("\n".join(lines), args.output)

    return status


def _verify_bound(args: argparse.Namespace) -> int:

    report = lrc.subcode.check_locality_bound(n=args.n, k=args.k, d=args.d, r=args.r)

    if args.json:
        document = json_io.bound_to_json(report, n=args.n, k=args.k, d=args.d, r=args.r)
        json_io.write_json(document, args.output)

    else:
        verdict = (
            "optimal"
            if report.optimal
            else ("holds" if report.holds else "violated")
        )
        _emit(f"n={args.n} >= {report.rhs}: {verdict}", args.output)

    return EXIT_SUCCESS if report.holds else EXIT_FALSIFIED


def _subcode_trace(args: argparse.Namespace) -> int:

    code = _systematic(json_io.read_code(args.input))

    strategy = (
        json_io.strategy_from_json(json_io.read_json(args.forced), n=code.n)
        if args.forced is not None
        else None
    )

    trace = lrc.subcode.run_subcode(code, r=args.r, strategy=strategy)
    bound = lrc.subcode.check_trace_bound(trace, k=code.k, r=args.r, q=code.q)

    if args.json:
        json_io.write_json(json_io.trace_to_json(trace), args.output)

    else:
        root = pptree.Node(f"trace ell={trace.ell} R={_one_based(trace.R)}")

        for j, step in enumerate(trace.steps, start=1):
            node = pptree.Node(f"step {j}: i={step.i + 1}", root)
            pptree.Node(f"S={_one_based(step.S)} T={_one_based(step.T)}", node)
            pptree.Node(f"sigma={list(step.sigma)} |C|={step.size_after}", node)

        checks = pptree.Node("checks", root)

        for name, verdict in bound.checks.items():
            pptree.Node(f"{name}: {'pass' if verdict.passed else 'FAIL'}", checks)

        _emit(_render_tree(root), args.output)

    return EXIT_SUCCESS if bound.passed else EXIT_FALSIFIED


def _verify_structure(args: argparse.Namespace) -> int:

    code = _systematic(json_io.read_code(args.input))

    try:
        d = lrc.code.min_distance(code)

        report = (
            lrc.structure.verify_theorem5(code, r=args.r)
            if d < args.r + 3
            else lrc.structure.verify_theorem4(code, r=args.r)
        )

    except exceptions.NotApplicable as e:
        logging.info(msg=f"Structure verification not applicable: {e}")

        if args.json:
            json_io.write_json({"applicable": False, "reason": str(e)}, args.output)
        else:
            _emit(f"not applicable: {e}", args.output)

        return EXIT_SUCCESS

    if args.json:
        json_io.write_json(json_io.structure_to_json(report), args.output)

    else:
        root = pptree.Node(f"structure optimal={report.optimal}")

        groups = pptree.Node("groups", root)
        for group in report.groups:
            pptree.Node(_one_based(group), groups)

        if report.partition is not None:
            partition = pptree.Node("partition", root)
            pptree.Node(f"I={_one_based(report.partition.information())}", partition)
            pptree.Node(f"L={_one_based(report.partition.L)}", partition)
            pptree.Node(f"H={_one_based(report.partition.H)}", partition)

        items = pptree.Node(f"items (heavy bound {report.heavy_bound})", root)
        for name, verdict in sorted(report.items.items()):
            pptree.Node(f"{name}: {'pass' if verdict.passed else 'FAIL'}", items)

        _emit(_render_tree(root), args.output)

    return EXIT_SUCCESS if report.passed() else EXIT_FALSIFIED


def _twist(args: argparse.Namespace) -> int:

    code = json_io.read_code(args.input)
    codebook = lrc.code.as_codebook(code)

    if args.perms is not None:
        document = json_io.read_json(args.perms)
    else:
        document = {"seed": args.seed}

    spec = json_io.twist_from_json(document, q=codebook.q, n=codebook.n)
    twisted = lrc.construct.twist(code, spec)

    json_io.write_json(json_io.code_to_json(twisted), args.output)

    return EXIT_SUCCESS


def _recover(args: argparse.Namespace) -> int:

    code = json_io.read_code(args.input)
    pattern = json_io.pattern_from_json(json_io.read_json(args.pattern))

    result = lrc.recovery.recover_erasures(code, pattern=pattern)

    repaired = None

    if result.status is lrc.recovery.RecoveryStatus.Unique and pattern.erased():
        try:
            profile = lrc.locality.locality_profile(code)
            repaired = lrc.recovery.local_repair(code, pattern=pattern, profile=profile)

        except exceptions.NeedsGlobalRepair as e:
            logging.info(msg=f"Falling back to the global repair: {e}")

    if args.json:
        json_io.write_json(json_io.recovery_to_json(result, repaired), args.output)
        return EXIT_SUCCESS

    lines = [f"{result.status.value} ({result.count} matching codewords)"]

    if result.codeword is not None:
        lines.append(f"codeword: {list(result.codeword)}")

    for coordinate, symbol in sorted((repaired or {}).items()):
        lines.append(
            f"  {coordinate + 1} = {symbol.value} reading {_one_based(symbol.accessed)}"
        )

    _emit("\n".join(lines), args.output)

    return EXIT_SUCCESS


# ======
# Parser
# ======


def build_parser() -> argparse.ArgumentParser:
    """Build the parser of the command-line interface."""

    common = argparse.ArgumentParser(add_help=False)

    common.add_argument(
        "-i",
        "--input",
        metavar="FILE",
        default="-",
        help="The input JSON file, '-' for the standard input (default: %(default)s).",
    )

    common.add_argument(
        "-o",
        "--output",
        metavar="FILE",
        default="-",
        help="The output file, '-' for the standard output (default: %(default)s).",
    )

    common.add_argument(
        "--json",
        action="store_true",
        default=False,
        help="Print machine-readable JSON instead of text (default: %(default)s).",
    )

    common.add_argument(
        "--cap",
        metavar="INT",
        type=int,
        default=None,
        help="The maximum number of coordinate subsets a search may visit.",
    )

    common.add_argument(
        "--verbose",
        action="store_true",
        default=False,
        help="Print the debug messages (default: %(default)s).",
    )

    parser = argparse.ArgumentParser(
        prog="lrcsim",
        description="Construct and verify locally recoverable codes.",
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    subparsers.add_parser(
        "construct", parents=[common], help="Build a code from a specification."
    ).set_defaults(handler=_construct)

    subparsers.add_parser(
        "analyze", parents=[common], help="Compute the distance and the localities."
    ).set_defaults(handler=_analyze)

    bound = subparsers.add_parser(
        "verify-bound", parents=[common], help="Evaluate the locality bound."
    )
    for name in ("n", "k", "d", "r"):
        bound.add_argument(f"--{name}", type=int, required=True)
    bound.set_defaults(handler=_verify_bound)

    trace = subparsers.add_parser(
        "subcode-trace", parents=[common], help="Run the sub-code algorithm."
    )
    trace.add_argument("--r", type=int, required=True, help="The locality.")
    trace.add_argument(
        "--forced",
        metavar="FILE",
        default=None,
        help="A JSON file with the forced steps.",
    )
    trace.set_defaults(handler=_subcode_trace)

    structure = subparsers.add_parser(
        "verify-structure", parents=[common], help="Verify the structure of a code."
    )
    structure.add_argument("--r", type=int, required=True, help="The locality.")
    structure.set_defaults(handler=_verify_structure)

    twist = subparsers.add_parser(
        "twist", parents=[common], help="Permute the alphabet of each coordinate."
    )
    source = twist.add_mutually_exclusive_group(required=True)
    source.add_argument("--seed", type=int, default=None)
    source.add_argument("--perms", metavar="FILE", default=None)
    twist.set_defaults(handler=_twist)

    recover = subparsers.add_parser(
        "recover", parents=[common], help="Recover the erased symbols of a word."
    )
    recover.add_argument(
        "--pattern",
        metavar="FILE",
        required=True,
        help="A JSON file with the word, null marking the erasures.",
    )
    recover.set_defaults(handler=_recover)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the command-line interface.

    Args:
        argv: The arguments, defaulting to those of the process.

    Returns:
        The exit code: 0 on success, 1 if a verification failed, 2 on errors.
    """

    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_SUCCESS if e.code == 0 else EXIT_ERROR

    if args.output != "-":
        args.output = str(pathlib.Path(args.output).expanduser().absolute())

    limits = {} if args.cap is None else {"max_subsets": args.cap}
    verbosity = (
        logging.LoggingLevel.DEBUG if args.verbose else logging.get_logging_level()
    )

    try:
        with (
            logging.logging_level(level=verbosity),
            config.override_limits(**limits),
        ):
            return args.handler(args)

    except (exceptions.LrcError, OSError, TypeError) as e:
        logging.error(msg=f"{type(e).__name__}: {e}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
