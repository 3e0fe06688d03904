# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors

from .cli import main

main()
