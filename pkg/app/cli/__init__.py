"""Command-line front end."""

import logging
import sys
from typing import List, Optional

from cli.commands import COMMANDS
from cli.parser import EXIT_INVALID, build_parser
from config.formats import LOG_FORMAT
from exceptions import IsovError

logger = logging.getLogger(__name__)

_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=_LEVELS.get(args.verbose, logging.DEBUG), format=LOG_FORMAT)
    try:
        return COMMANDS[args.command](args)
    except (IsovError, OSError) as exc:
        logger.debug("Invalid input", exc_info=True)
        print(f"isovset: {exc}", file=sys.stderr)
        return EXIT_INVALID


__all__ = ["build_parser", "run"]
