# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors

# ruff: noqa: F403
"""
INTERNAL USE ONLY
"""

from .to_string import *
