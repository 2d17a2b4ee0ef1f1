import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Optional

from pydantic import ValidationError

from .commands.enums import Command, OutputFormat
from .commands.router import HANDLERS
from .commands.schemas import RunConfig
from .config import config
from .constructions.enums import ConstructionName, RepresentationEngine
from .exceptions import UsageError
from .handlers import handle_exception
from .ranges import validate_k_range


DEFAULT_FORMATS = {
    Command.COMPUTE: OutputFormat.CSV,
    Command.VERIFY: OutputFormat.TEXT,
    Command.CLASSES: OutputFormat.CSV,
    Command.FIGURE1: OutputFormat.CSV,
    Command.WITNESS: OutputFormat.TEXT,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], help="Output format")
    common.add_argument("--out", help="Write output to this path instead of stdout")
    common.add_argument("--threads", type=int, default=config.threads, help="Worker processes")
    common.add_argument("--state-cap", type=int, default=config.state_cap, help="Solver state cap")
    cache = common.add_mutually_exclusive_group()
    cache.add_argument("--cache", default=str(config.cache_dir), help="Result cache directory")
    cache.add_argument("--no-cache", action="store_true", help="Neither read nor write the cache")

    parser = argparse.ArgumentParser(
        prog="niven",
        description="Minimal Niven numbers: exact computation, constructions and classes C_m.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(Command.COMPUTE.value, parents=[common], help="Table of a_k and c_k")
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--k", required=True, help="Index range START..STOP")
    p.add_argument("--recheck", action="store_true", help="Recompute cached values and compare")

    p = sub.add_parser(Command.VERIFY.value, parents=[common], help="Run the invariant suite")
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--max", type=int, required=True, dest="k_max")

    p = sub.add_parser(Command.CLASSES.value, parents=[common], help="Class index or density scan")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--k", type=int, help="Odd k >= 3")
    target.add_argument("--scan", type=int, dest="x_max", help="Scan odd x up to this bound")
    p.add_argument("--m", type=int, help="Class index for --scan")
    p.add_argument("--stride", type=int, default=1, help="Emit every S-th odd x")

    p = sub.add_parser(Command.FIGURE1.value, parents=[common], help="ln c_k against its bounds")
    p.add_argument("--max", type=int, required=True, dest="k_max")

    p = sub.add_parser(Command.WITNESS.value, parents=[common], help="Build and verify a witness")
    p.add_argument("name", choices=[c.value for c in ConstructionName])
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument(
        "--engine",
        choices=[e.value for e in RepresentationEngine],
        default=RepresentationEngine.CONSTRUCTIVE.value,
    )
    p.add_argument(
        "--hex", action="store_true", dest="hexadecimal", help="Print value, quotient and bound in hexadecimal"
    )
    return parser


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """Validates parsed flags. Raise a `UsageError` if they conflict.

    Raises:
        UsageError: A flag is out of range or the combination is invalid.
    """
    command = Command(args.command)
    options = {
        "command": command,
        "output_format": args.format or DEFAULT_FORMATS[command],
        "out": args.out,
        "cache_dir": None if args.no_cache else args.cache,
        "state_cap": args.state_cap,
        "threads": args.threads,
    }
    for name in ("base", "k_max", "m", "x_max", "stride", "recheck", "i", "x", "ell", "engine", "hexadecimal"):
        if getattr(args, name, None) is not None:
            options[name] = getattr(args, name)
    if command == Command.COMPUTE:
        options["k_range"] = validate_k_range(args.k)
    elif getattr(args, "k", None) is not None:
        options["k"] = args.k
    if command == Command.WITNESS:
        options["construction"] = args.name

    try:
        return RunConfig(**options)
    except ValidationError as e:
        error = e.errors()[0]
        where = ".".join(map(str, error["loc"]))
        raise UsageError(f"{where}: {error['msg']}" if where else error["msg"]) from e


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=config.log_level.value, stream=sys.stderr, format="%(levelname)s %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        run = build_run_config(args)
        return int(HANDLERS[run.command](run))
    except Exception as exc:
        return int(handle_exception(exc))


def run() -> None:
    sys.exit(main())
