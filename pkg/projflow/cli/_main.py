import argparse
import logging
import sys
from pathlib import Path
from typing import List
from typing import Optional

from projflow._errors import ProjflowError
from projflow._settings import DEFAULT_SETTINGS
from projflow._settings import Settings
from projflow.cli._commands import run_analyze
from projflow.cli._commands import run_examples
from projflow.cli._commands import run_partner
from projflow.cli._commands import run_verify
from projflow.cli._exit_codes import exit_code_for
from projflow.cli._exit_codes import ExitCode

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=7, help="sampling seed")
    common.add_argument(
        "--tol", type=float, default=None, help="tolerance of every residual check"
    )
    common.add_argument("--json", type=Path, default=None, help="write a JSON report")
    common.add_argument("--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(
        prog="projflow",
        description="Commuting projective flows: classification, partners and numeric checks.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="classify a vector field")
    analyze.add_argument(
        "--field", nargs=2, required=True, metavar=("VARPI", "RHO"), help="the two components"
    )

    partner = commands.add_parser("partner", parents=[common], help="partner pair of an orbit function")
    partner.add_argument("--orbit", required=True, metavar="V", help="1-homogeneous V")

    verify = commands.add_parser("verify", parents=[common], help="numeric checks")
    source = verify.add_mutually_exclusive_group(required=True)
    source.add_argument("--example", metavar="ID", help="registered example, e.g. E3 or E1:n=2")
    source.add_argument("--orbit", metavar="V", help="check the partner pair of V")
    verify.add_argument(
        "--box",
        nargs=4,
        type=float,
        default=(0.5, 1.0, 0.8, 1.2),
        metavar=("X0", "X1", "Y0", "Y1"),
        help="sampling box for --orbit",
    )
    verify.add_argument(
        "--perturb", metavar="COMPONENT:EXPR", help="add EXPR to alpha or beta of the partner"
    )

    examples = commands.add_parser("examples", parents=[common], help="re-derive the worked examples")
    examples.add_argument("--verify", action="store_true", help="also run the numeric checks")
    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    arguments = build_parser().parse_args(argv)
    configure_logging(arguments.verbose)
    settings: Settings = DEFAULT_SETTINGS
    if arguments.tol is not None:
        settings = settings.with_tolerance(arguments.tol)
    try:
        if arguments.command == "analyze":
            code = run_analyze(tuple(arguments.field), settings, arguments.json)
        elif arguments.command == "partner":
            code = run_partner(arguments.orbit, arguments.json)
        elif arguments.command == "verify":
            code = run_verify(
                example_id=arguments.example,
                orbit_text=arguments.orbit,
                box=tuple(arguments.box),
                seed=arguments.seed,
                settings=settings,
                perturbation=arguments.perturb,
                json_path=arguments.json,
            )
        else:
            code = run_examples(
                verify=arguments.verify,
                seed=arguments.seed,
                settings=settings,
                json_path=arguments.json,
            )
    except ProjflowError as error:
        code = exit_code_for(error)
        print(f"error: {error}", file=sys.stderr)
        logger.debug("command failed", exc_info=error)
    return int(code)
