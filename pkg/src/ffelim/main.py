"""Main entry point for the ffelim command line."""

import sys
from typing import Optional, Sequence

from .cli.app import create_parser, run_command
from .cli.formatting import format_error_message
from .config import Config
from .errors import InputError, MathDomainError
from .logging import log_error, setup_logging

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MATH = 3


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code.

    0 when the report was produced, 2 for malformed input or arguments,
    3 when the mathematics rejects the instance.
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already printed usage or help
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT

    try:
        settings = Config.from_env()
        settings.validate()
    except ValueError as e:
        print(f"ffelim: configuration error: {e}", file=sys.stderr)
        return EXIT_INPUT

    logger = setup_logging(settings.log_level)

    try:
        output = run_command(args, settings, logger)
    except InputError as e:
        log_error(logger, "command_failed", command=args.command, kind=type(e).__name__)
        print(format_error_message(e), file=sys.stderr)
        return EXIT_INPUT
    except MathDomainError as e:
        log_error(logger, "command_failed", command=args.command, kind=type(e).__name__)
        print(format_error_message(e), file=sys.stderr)
        return EXIT_MATH

    if not args.out:
        sys.stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
