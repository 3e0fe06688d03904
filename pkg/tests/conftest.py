# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors

import logging

import pytest

pytest.register_assert_rewrite('zetafast.testing.assertions')

from zetafast.config import PRECISION_ENV_VAR  # noqa: E402


@pytest.fixture(autouse=True)
def _clean_precision_env(monkeypatch):
    monkeypatch.delenv(PRECISION_ENV_VAR, raising=False)


@pytest.fixture(autouse=True)
def _reset_zetafast_logger():
    logger = logging.getLogger('zetafast')
    level = logger.level
    handlers = list(logger.handlers)
    yield
    logger.setLevel(level)
    logger.handlers[:] = handlers
