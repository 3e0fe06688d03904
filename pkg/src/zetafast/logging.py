# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""
Utilities for managing Zetafast's logger.

Library code only emits records.
Handlers are installed by applications, for instance the command line
front end through :func:`configure_logging`.
"""

import logging
import sys
from typing import TextIO

_FORMAT = '%(asctime)s %(levelname)-8s %(name)s: %(message)s'


def get_logger() -> logging.Logger:
    """
    Return the global logger used by Zetafast.
    """
    return logging.getLogger('zetafast')


def verbosity_to_level(verbosity: int) -> int:
    """Map a count of ``-v`` flags to a logging level."""
    if verbosity <= 0:
        return logging.WARNING
    if verbosity == 1:
        return logging.INFO
    return logging.DEBUG


def configure_logging(level: int = logging.WARNING, stream: TextIO | None = None) -> None:
    """
    Install a single stream handler on Zetafast's logger.

    Calling this repeatedly replaces the handler instead of adding more.

    Parameters
    ----------
    level:
        Minimum level of emitted records.
    stream:
        Output stream, defaults to ``sys.stderr``.
    """
    logger = get_logger()
    for handler in list(logger.handlers):
        if getattr(handler, '_zetafast_handler', False):
            logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr if stream is None else stream)
    handler.setFormatter(logging.Formatter(_FORMAT))
    handler._zetafast_handler = True  # type: ignore[attr-defined]
    logger.addHandler(handler)
    logger.setLevel(level)
