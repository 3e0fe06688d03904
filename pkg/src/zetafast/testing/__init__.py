# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Test support."""

from .assertions import assert_close, assert_within_bound

__all__ = ['assert_close', 'assert_within_bound']
