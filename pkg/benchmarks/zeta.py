# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
import zetafast as zf


class Zeta:
    """
    Benchmark certified evaluation at increasing height
    """

    params = ([1e2, 1e4, 1e6], [1e-3, 1e-9])
    param_names = ['tau', 'delta']

    def time_zeta(self, tau, delta):
        zf.zeta(complex(0.5, tau), delta)

    def track_summands(self, tau, delta):
        return zf.zeta(complex(0.5, tau), delta).summands_used

    track_summands.unit = 'summands'

    def track_bound_ratio(self, tau, delta):
        used = zf.zeta(complex(0.5, tau), delta).summands_used
        return used / zf.summand_bound(0.5, tau, delta)


class ZetaDerivative:
    params = [1, 2]
    param_names = ['order']

    def time_zeta_derivative(self, order):
        zf.zeta_derivative(complex(0.5, 1000.0), order, 1e-8)


class Precision:
    params = ['hardware', 'extended']
    param_names = ['precision']

    def setup(self, precision):
        self.options = zf.Options(precision=precision)

    def time_zeta(self, precision):
        zf.zeta(complex(0.5, 1000.0), 1e-8, options=self.options)


class Oracle:
    def time_zeta_em(self):
        zf.zeta_em(complex(0.5, 1000.0))
