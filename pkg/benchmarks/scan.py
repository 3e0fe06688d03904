# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
import zetafast as zf


class Scan:
    """
    Benchmark locating zeros on the critical line
    """

    params = [1, 4]
    param_names = ['workers']

    def time_find_zeros(self, workers):
        zf.find_zeros(1000.0, 1010.0, workers=workers)

    def track_zero_count(self, workers):
        return len(zf.find_zeros(1000.0, 1010.0, workers=workers))

    track_zero_count.unit = 'zeros'
