# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import numpy as np
import pytest

from keller_segel_blowup.diagnostics.moments import (
    MomentSampler,
    ddt_phi_terms,
    dphi_fd,
    phi_moment,
)
from keller_segel_blowup.params.conditions import ModelParams
from keller_segel_blowup.quadrature.beta import beta_integral
from keller_segel_blowup.solver.grid import RadialGrid
from keller_segel_blowup.solver.sensitivity import ZeroSensitivity
from keller_segel_blowup.solver.stepper import RadialSolver
from tests.common import assert_close

GAMMA = 0.45


@pytest.fixture
def grid() -> RadialGrid:
    return RadialGrid.graded(3, 1.0, 256, grading=2.0)


class TestPhiMoment:
    def test_phi_of_constant_w_works(self, grid: RadialGrid) -> None:
        phi = phi_moment(np.full(257, 2.5), GAMMA, 0.5, grid)

        assert phi == pytest.approx(2.5 * beta_integral(-GAMMA, 1.0, 0.5), rel=1e-10)

    def test_phi_of_zero_w_is_zero(self, grid: RadialGrid) -> None:
        assert phi_moment(np.zeros(257), GAMMA, 0.5, grid) == 0.0

    def test_phi_of_constant_density_works(self, grid: RadialGrid) -> None:
        c = 4.0
        w = c * grid.s_nodes / 3

        phi = phi_moment(w, GAMMA, 0.3, grid)

        assert phi == pytest.approx(c / 3 * beta_integral(1 - GAMMA, 1.0, 0.3), rel=1e-10)

    def test_phi_is_monotone_in_w(self, grid: RadialGrid) -> None:
        low = np.sqrt(grid.s_nodes)
        high = low + 0.1 * grid.s_nodes**2

        assert phi_moment(low, GAMMA, 0.5, grid) <= phi_moment(high, GAMMA, 0.5, grid)

    def test_phi_raises_error_when_gamma_is_outside_unit_interval(self, grid: RadialGrid) -> None:
        with pytest.raises(ValueError, match=r"^`gamma` must lie in \(0, 1\), but is 1\.2 instead\.$"):
            phi_moment(np.zeros(257), 1.2, 0.5, grid)

    def test_sampler_raises_error_when_s0_exceeds_volume(self, grid: RadialGrid, blowup_params: ModelParams) -> None:
        with pytest.raises(ValueError, match=r"^`s0` must lie in \(0, 1\], but is 2\.0 instead\.$"):
            MomentSampler(grid, blowup_params, GAMMA, 2.0)


class TestDdtPhiTerms:
    def test_terms_vanish_for_constant_density_without_chemotaxis(self, grid: RadialGrid) -> None:
        u = np.full(256, 2.0)
        M0 = grid.omega * 2.0 / 3
        params = ModelParams(N=3, R=1.0, m=1.2, chi0=10.0, a=0.0, k=0.5, M0=M0, M1=M0 / 2, L=10.0)
        state = RadialSolver(params, grid, ZeroSensitivity()).state_from_density(u)

        I1, I2, I3 = ddt_phi_terms(state, GAMMA, 0.5, params, grid, ZeroSensitivity())

        assert I2 == 0.0
        assert I3 == 0.0
        assert abs(I1) < 1e-8

    def test_chemotaxis_terms_cancel_for_constant_density(self, grid: RadialGrid) -> None:
        u = np.full(256, 2.0)
        M0 = grid.omega * 2.0 / 3
        params = ModelParams(N=3, R=1.0, m=1.0, chi0=10.0, a=0.0, k=0.5, M0=M0, M1=M0 / 2, L=10.0)
        state = RadialSolver(params, grid).state_from_density(u)

        _, I2, I3 = ddt_phi_terms(state, GAMMA, 0.5, params, grid)

        assert I2 > 0
        assert I2 + I3 == pytest.approx(0.0, abs=1e-9 * I2)


class TestDphiFd:
    def test_dphi_fd_is_exact_for_quadratics(self) -> None:
        t = np.array([0.0, 0.1, 0.15, 0.3, 0.32, 0.5])

        assert_close(dphi_fd(t, t**2)[1:-1], (2 * t)[1:-1], rtol=1e-12)

    def test_dphi_fd_raises_error_when_samples_are_too_few(self) -> None:
        with pytest.raises(ValueError, match=r"^`t` must hold at least 3 samples, but holds 2\.$"):
            dphi_fd(np.array([0.0, 1.0]), np.array([0.0, 1.0]))
