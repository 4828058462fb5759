import logging
import sys

from pathlib import Path
from typing import List, Optional, Tuple

from pyknotslopes import __version__
from pyknotslopes.bracket import NAIVE, OracleBoundExceededError, BracketSweep, bracket_naive
from pyknotslopes.catalog import CATALOG, UnknownKnotError, get_entry
from pyknotslopes.config import FORMATS, ConfigError, ToolConfig
from pyknotslopes.diagram import (DiagramError, PDDiagram, PretzelParameterError, braid_to_pd,
                                  parse_braid, parse_pd, pretzel_name)
from pyknotslopes.jones import (InsufficientRangeError, JonesCalculator, default_max_n,
                                slope_sequences)
from pyknotslopes.morse import (MorseEventError, MorsePresentation, NonPlanarDiagramError,
                                braid_to_morse, cable, morse_to_pd, pretzel_morse, to_morse)
from pyknotslopes.report import (adequacy_record, bracket_record, cable_record, jones_record,
                                 polynomial_record, render, slopes_record)
from pyknotslopes.states import boundary_slopes, is_adequate

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

log = logging.getLogger("pyknotslopes")

# options whose values may start with "-", such as "-2,3,5" or "-1 -1 -1"
VALUE_OPTIONS = ("--braid", "--pretzel")


def parse_pretzel(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as e:
        raise PretzelParameterError(
            f"Pretzel parameters must be comma separated integers, got {text!r}") from e


def load_input(args) -> Tuple[PDDiagram, Optional[MorsePresentation]]:
    """ The diagram named on the command line, with a Morse presentation when one is at hand """
    if args.braid is not None:
        braid = parse_braid(args.braid)
        return braid_to_pd(braid, name=str(braid)), braid_to_morse(braid, name=str(braid))
    if args.pd is not None:
        path = Path(args.pd)
        return parse_pd(path.read_bytes(), name=path.stem), None
    if args.pretzel is not None:
        params = parse_pretzel(args.pretzel)
        presentation = pretzel_morse(params, name=pretzel_name(params))
        return morse_to_pd(presentation, name=presentation.name), presentation
    if args.unknot:
        return PDDiagram.unknot(), None

    entry = get_entry(args.knot)
    return entry.diagram(), entry.morse()


def join_option_values(argv: List[str]) -> List[str]:
    """ Attach each value in VALUE_OPTIONS to its flag so argparse never reads it as an option """
    joined = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in VALUE_OPTIONS and i + 1 < len(argv) and not argv[i + 1].startswith("--"):
            joined.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def configure_logging(verbosity: int):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(levelname)s: %(message)s"))
    log.handlers = [handler]
    log.propagate = False
    if verbosity >= 2:
        log.setLevel(logging.DEBUG)
    elif verbosity == 1:
        log.setLevel(logging.INFO)
    else:
        log.setLevel(logging.WARNING)


def make_calculator(config: ToolConfig) -> JonesCalculator:
    calculator = JonesCalculator(config.engine, config.oracleBound, config.threads)
    calculator.onJobStart = lambda name, size: log.info("Computing %d colors of %s", size, name)
    calculator.onTaskStart = lambda name, size: log.info("%s: %d cable terms", name, size)
    calculator.onTaskComplete = lambda: log.debug("Color finished")
    calculator.onJobEnd = lambda: log.info("Table complete")
    return calculator


# pylint: disable=unused-argument

def cmd_adequacy(args, config: ToolConfig) -> Tuple[dict, int]:
    d, _ = load_input(args)
    return adequacy_record(d), EXIT_OK


def cmd_slopes(args, config: ToolConfig) -> Tuple[dict, int]:
    d, _ = load_input(args)
    return slopes_record(d), EXIT_OK


def cmd_jones(args, config: ToolConfig) -> Tuple[dict, int]:
    d, morse = load_input(args)
    nMax = config.maxN if config.maxN is not None else default_max_n(len(d))
    table = make_calculator(config).jones_table(d, nMax, morse)
    sequences = slope_sequences(table) if nMax >= 3 else None
    return jones_record(table, sequences), EXIT_OK


def cmd_verify(args, config: ToolConfig) -> Tuple[dict, int]:
    d, morse = load_input(args)
    verdict = make_calculator(config).verify(d, config.maxN, morse)
    for note in verdict.notes:
        log.info(note)
    return verdict.to_json(), EXIT_OK if verdict.passed else EXIT_FAILED


def cmd_cable(args, config: ToolConfig) -> Tuple[dict, int]:
    if args.m < 1:
        raise ValueError(f"Cable size must be positive, got {args.m}")
    d, morse = load_input(args)
    presentation = morse if morse is not None else to_morse(d)
    cabled = cable(presentation, args.m)
    pd = morse_to_pd(cabled, name=cabled.name)
    return cable_record(cabled, pd, args.m, args.emit_pd), EXIT_OK


def cmd_bracket(args, config: ToolConfig) -> Tuple[dict, int]:
    d, morse = load_input(args)
    if config.engine == NAIVE:
        return bracket_record(d, bracket_naive(d, config.oracleBound), NAIVE), EXIT_OK

    sweep = BracketSweep(morse if morse is not None else to_morse(d))
    value = sweep.run()
    return bracket_record(d, value, config.engine, sweep.telemetry), EXIT_OK


def cmd_catalog(args, config: ToolConfig) -> Tuple[dict, int]:
    if args.name:
        return get_entry(args.name).to_json(), EXIT_OK
    return {"entries": [entry.to_json() for entry in CATALOG.values()]}, EXIT_OK


def selftest_entry(entry, calculator: JonesCalculator) -> dict:
    d = entry.diagram()
    expected = entry.expected
    mismatches: List[str] = []

    flags = is_adequate(d)
    if flags != expected.adequacy:
        mismatches.append(f"adequacy {flags} != {expected.adequacy}")

    slopes = tuple(s.as_fraction() for s in boundary_slopes(d))
    if slopes != expected.slopes:
        mismatches.append(f"slopes {tuple(map(str, slopes))} != {expected.slopes}")

    jones2 = None
    if expected.jones2 is not None:
        jones2 = calculator.colored_jones(d, 2, entry.morse())
        if jones2 != expected.jones2:
            mismatches.append(f"J(2) = {jones2} != {expected.jones2}")

    for mismatch in mismatches:
        log.warning("%s: %s", entry.name, mismatch)
    return {
        "name": entry.name,
        "passed": not mismatches,
        "jones2": polynomial_record(jones2),
        "mismatches": mismatches
    }


def cmd_selftest(args, config: ToolConfig) -> Tuple[dict, int]:
    calculator = make_calculator(config)
    results = [selftest_entry(entry, calculator)
               for entry in CATALOG.values() if entry.expected is not None]
    passed = all(result["passed"] for result in results)
    return {"passed": passed, "entries": results}, EXIT_OK if passed else EXIT_FAILED
# pylint: enable=unused-argument


COMMANDS = {
    "adequacy": (cmd_adequacy, "Adequacy flags, state graph sizes and loop witnesses"),
    "slopes": (cmd_slopes, "Boundary slopes of the all-A and all-B state surfaces"),
    "jones": (cmd_jones, "Colored Jones table with extreme degrees and slope sequences"),
    "verify": (cmd_verify, "Check that the Jones slopes are the state surface slopes"),
    "cable": (cmd_cable, "Statistics of the blackboard m-cable"),
    "bracket": (cmd_bracket, "Kauffman bracket in both normalizations"),
    "catalog": (cmd_catalog, "List the built-in knots"),
    "selftest": (cmd_selftest, "Check every catalog entry against its expected values")
}


def build_parser():
    from argparse import ArgumentParser

    common = ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--format", choices=FORMATS, help="Report format")
    common.add_argument("--engine", choices=("naive", "dp"), help="Bracket engine")
    common.add_argument("--threads", type=int, help="Worker threads")
    common.add_argument("--oracle-bound", type=int, dest="oracle_bound",
                        help="Largest crossing count the naive state sum accepts")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress to stderr (repeat for more detail)")

    source = ArgumentParser(add_help=False)
    inputs = source.add_mutually_exclusive_group(required=True)
    inputs.add_argument("--braid", help="Braid word, \"S: w1 w2 ...\"")
    inputs.add_argument("--pd", help="PD code JSON file")
    inputs.add_argument("--pretzel", help="Pretzel parameters, \"q1,q2,...\"")
    inputs.add_argument("--unknot", action="store_true", help="The crossingless unknot")
    inputs.add_argument("--knot", help="Built-in catalog knot")

    parser = ArgumentParser(
        f"pyknotslopes v{__version__}",
        description="Jones slopes and state surface slopes of adequate knot diagrams",
        allow_abbrev=False)
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, (_, helpText) in COMMANDS.items():
        parents = [common] if name in {"catalog", "selftest"} else [common, source]
        sub = subparsers.add_parser(name, parents=parents, help=helpText, allow_abbrev=False)
        if name in {"jones", "verify"}:
            sub.add_argument("--max-n", type=int, dest="max_n", help="Largest color")
        elif name == "cable":
            sub.add_argument("--m", type=int, default=2, help="Number of parallel copies")
            sub.add_argument("--emit-pd", action="store_true", dest="emit_pd",
                             help="Include the PD code of the cable")
        elif name == "catalog":
            sub.add_argument("name", nargs="?", help="Show a single entry")

    return parser


def main(argv: Optional[Tuple] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]

    args = build_parser().parse_args(args=join_option_values(list(argv)))
    configure_logging(args.verbose)

    try:
        config = ToolConfig.load(
            args.config,
            engine=args.engine,
            oracleBound=args.oracle_bound,
            threads=args.threads,
            maxN=getattr(args, "max_n", None),
            format=args.format
        )
        command, _ = COMMANDS[args.command]
        record, code = command(args, config)
    except OracleBoundExceededError as e:
        print(f"pyknotslopes: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DiagramError, MorseEventError, NonPlanarDiagramError, ConfigError,
            UnknownKnotError, InsufficientRangeError, OSError, ValueError) as e:
        print(f"pyknotslopes: {e}", file=sys.stderr)
        return EXIT_INPUT

    print(render(record, config.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
