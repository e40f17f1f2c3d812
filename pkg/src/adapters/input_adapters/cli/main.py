import argparse
import sys

from loguru import logger

from src import __version__
from src.infrastructure.config.settings import settings
from src.infrastructure.di.container import Container
from src.infrastructure.logging.logger import setup_logging

from .commands import list_command, run_command, validate_command
from .exit_codes import ExitCode, handle_exception


def _seed(value: str) -> int:
    seed = int(value)
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {value}")
    return seed


def _threads(value: str) -> int:
    threads = int(value)
    if threads < 1:
        raise argparse.ArgumentTypeError(f"threads must be at least 1, got {value}")
    return threads


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macroreal",
        description="Spin-j decoherence simulator with macrorealism and continuity checks",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subcommands = parser.add_subparsers(dest="command", required=True)

    run = subcommands.add_parser("run", help="run a scenario and write its outputs")
    run.add_argument("--scenario", required=True, help="scenario file or bundled scenario name")
    run.add_argument("--out-dir", help="output directory (default: OUTPUT_PATH/<scenario name>)")
    run.add_argument("--seed", type=_seed, help="override the trajectory master seed")
    run.add_argument("--threads", type=_threads, help="worker threads for trajectory ensembles")
    run.set_defaults(handler=run_command)

    validate = subcommands.add_parser("validate", help="check a scenario without running it")
    validate.add_argument("--scenario", required=True, help="scenario file or bundled scenario name")
    validate.set_defaults(handler=validate_command)

    listing = subcommands.add_parser("list", help="list the bundled scenarios")
    listing.set_defaults(handler=list_command)

    return parser


def create_container() -> Container:
    """Create and configure the DI container"""
    container = Container()
    container.config.from_dict(settings.to_container_config())
    return container


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    setup_logging(settings.logging.level, settings.logging.directory, settings.logging.to_file)
    logger.debug(f"Starting {settings.name} {__version__} in {settings.env} mode")

    try:
        return int(args.handler(create_container(), args))
    except Exception as e:
        return int(handle_exception(e))


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
