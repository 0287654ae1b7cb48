import logging
import sys
from typing import TextIO


def configure_basic_logging() -> None:
    logging.basicConfig()
    logger = logging.getLogger()
    logger.handlers[0].setFormatter(
        logging.Formatter("%(asctime)s %(message)s", datefmt="%m/%d/%Y %I:%M:%S %p")
    )


def read_text(path: str, stdin: TextIO = sys.stdin) -> str:
    """Contents of path, or of stdin when path is '-'."""
    if path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()
