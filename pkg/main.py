import argparse
import logging
import logging.config
import sys
from pathlib import Path

from cli import COMMANDS
from cli.common import render
from errors import QuandleLabError, UsageError
from models import CommandResult
from settings import Config, settings

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    common.add_argument("--max-elements", type=int, default=None)
    common.add_argument("--max-matrix-cells", type=int, default=None)
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = _Parser(prog="quandle-lab", description="Symmetric quandle extensions and their homology")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for command in COMMANDS:
        command.register(subparsers, [common])
    return parser


def invocation_config(args: argparse.Namespace) -> Config:
    """Copy of the global settings with this invocation's guard overrides applied."""
    overrides = {}
    if args.max_elements is not None:
        overrides["MAX_ELEMENTS"] = args.max_elements
    if args.max_matrix_cells is not None:
        overrides["MAX_MATRIX_CELLS"] = args.max_matrix_cells
    return settings.model_copy(update=overrides)


def configure_logging(config: Config, verbosity: int = 0):
    path = Path(config.LOG_CONFIG)
    if path.is_file():
        logging.config.fileConfig(path, disable_existing_loggers=False)
    else:
        logging.basicConfig(level=config.LOG_LEVEL, stream=sys.stderr)
    level = config.LOG_LEVEL
    if verbosity:
        level = logging.DEBUG if verbosity > 1 else logging.INFO
    for name in ("", "groups", "quandles", "homology", "coloring"):
        logging.getLogger(name).setLevel(level)


def main(argv: list[str] | None = None) -> int:
    command = None
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        command, fmt = args.command, args.format
        args.config = invocation_config(args)
        configure_logging(args.config, args.verbose)
        logger.info("running %s", command)
        result = args.handler(args)
    except QuandleLabError as exc:
        logger.error("%s failed: %s", command or "quandle-lab", exc.detail)
        failure = CommandResult(status="error", command=command or "", payload=exc.to_dict(), summary=exc.detail)
        print(render(failure, "json" if fmt == "csv" else fmt))
        return exc.exit_code
    print(render(result, fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
