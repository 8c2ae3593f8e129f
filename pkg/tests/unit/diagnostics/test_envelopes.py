# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import numpy as np
import pytest

from keller_segel_blowup.diagnostics.envelopes import empirical_envelopes
from keller_segel_blowup.params.conditions import ModelParams
from keller_segel_blowup.solver.grid import RadialGrid
from keller_segel_blowup.solver.stepper import RadialSolver


class TestEmpiricalEnvelopes:
    def test_envelopes_of_constant_density_work(self) -> None:
        grid = RadialGrid.graded(3, 1.0, 128, grading=2.0)
        M0 = grid.omega * 2.0 / 3
        params = ModelParams(N=3, R=1.0, m=1.0, chi0=1.0, a=0.0, k=0.5, M0=M0, M1=M0 / 2, L=10.0)
        state = RadialSolver(params, grid).state_from_density(np.full(128, 2.0), t=0.25)

        trace = empirical_envelopes(state, grid, 7.0)

        assert trace.t == 0.25
        assert trace.K_emp == pytest.approx(2.0, rel=1e-12)
        assert trace.Cv_emp == pytest.approx(2.0, rel=1e-10)
        assert trace.v_min == pytest.approx(2.0, rel=1e-10)
        assert trace.flux_max < 1e-9
