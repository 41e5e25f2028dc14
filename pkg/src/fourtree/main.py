"""
Main entry point for the fourtree command line.

Parses arguments, loads the configuration, runs the subcommand and maps
failures to exit codes.
"""

import logging
import sys
from typing import List, Optional

from fourtree.cli.parser import create_parser
from fourtree.config import load_config
from fourtree.domain.errors import (
    BadParameters,
    FourTreeError,
    GraphError,
    PostconditionFailure,
    TooManyTrees,
    VerificationFailed,
)
from fourtree.utils.constants import (
    EXIT_INTERNAL,
    EXIT_INTERRUPTED,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
)
from fourtree.utils.logging import get_logger, setup_logging
from fourtree.utils.yaml_handler import dumps_yaml

logger = get_logger(__name__)


def _dump_certificates(error: FourTreeError) -> None:
    certs = getattr(error, "certificates", None) or []
    doc = {"error": str(error), "certificate": [c.to_dict() for c in certs]}
    sys.stdout.write(dumps_yaml(doc))


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the fourtree application.

    Returns:
        int: 0 on success, 1 when a verification fails, 2 for bad input,
        3 for internal failures, 130 when interrupted
    """
    try:
        setup_logging()
        parser = create_parser()
        args = parser.parse_args(argv)

        args.run_config = load_config(args.config)
        if args.verbose:
            level = logging.DEBUG
        elif args.quiet:
            level = logging.WARNING
        else:
            level = getattr(logging, args.run_config.logging.level)
        setup_logging(level)

        logger.info(f"Starting action: {args.action}")
        logger.debug(f"Parsed arguments: {vars(args)}")
        args.func(args)
        logger.info("Action completed")
        return EXIT_OK
    except KeyboardInterrupt:
        logger.info("Operation cancelled by user")
        return EXIT_INTERRUPTED
    except VerificationFailed as e:
        logger.error(f"Verification failed: {e}")
        return EXIT_VERIFICATION_FAILED
    except (BadParameters, GraphError, TooManyTrees) as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"Cannot access file: {e}")
        return EXIT_USAGE
    except PostconditionFailure as e:
        logger.error(f"Postcondition failed: {e}")
        _dump_certificates(e)
        return EXIT_INTERNAL
    except FourTreeError as e:
        logger.error(f"Internal failure: {e}")
        _dump_certificates(e)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
