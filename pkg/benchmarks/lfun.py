# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
import zetafast as zf


class Characters:
    params = [100, 2310, 9973]
    param_names = ['q']

    def time_characters_mod(self, q):
        zf.dirichlet.dirichlet_group.cache_clear()
        zf.characters_mod(q)

    def time_conductors(self, q):
        for chi in zf.characters_mod(q)[:50]:
            chi.conductor  # noqa: B018


class LFunction:
    params = [4, 101, 1009]
    param_names = ['q']

    def setup(self, q):
        self.chi = next(
            chi
            for chi in zf.characters_mod(q)
            if chi.is_primitive and not chi.is_principal
        )

    def time_l_function(self, q):
        zf.l_function(complex(0.5, 100.0), self.chi, 1e-8)
