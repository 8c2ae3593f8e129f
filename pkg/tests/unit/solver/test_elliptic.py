# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import numpy as np
import pytest

from keller_segel_blowup.solver.convergence import elliptic_convergence
from keller_segel_blowup.solver.elliptic import EllipticSystem, solve_elliptic
from keller_segel_blowup.solver.grid import RadialGrid, compute_z, radial_mass
from tests.common import assert_close, observed_order


class TestEllipticSystem:
    def test_constant_density_gives_constant_signal(self) -> None:
        grid = RadialGrid.graded(3, 1.0, 128, grading=2.5)

        v = EllipticSystem(grid).solve(np.full(128, 3.0))

        assert_close(v, np.full(129, 3.0), rtol=1e-12)

    def test_signal_mass_equals_density_mass(self) -> None:
        grid = RadialGrid.graded(4, 1.5, 100, grading=3.0)
        u = np.random.default_rng(0).uniform(0.0, 5.0, size=100)
        system = EllipticSystem(grid)

        v = system.solve(u)

        assert system.mass_v(v) == pytest.approx(radial_mass(u, grid), rel=1e-10)

    def test_residual_is_small(self) -> None:
        grid = RadialGrid.graded(3, 1.0, 128, grading=2.0)
        u = 1 + np.random.default_rng(1).uniform(0.0, 1.0, size=128)
        system = EllipticSystem(grid)

        v = system.solve(u)

        assert np.max(np.abs(system.residual(v, u))) <= 1e-10

    def test_signal_is_positive_for_nonnegative_density(self) -> None:
        grid = RadialGrid.graded(3, 1.0, 64, grading=3.0)
        u = np.zeros(64)
        u[:4] = 100.0

        v = EllipticSystem(grid).solve(u)

        assert np.all(v > 0)

    def test_signal_lies_between_density_extremes(self) -> None:
        grid = RadialGrid.graded(3, 1.0, 96, grading=2.0)
        mid = (grid.r_nodes[:-1] + grid.r_nodes[1:]) / 2
        u = 2 + np.cos(3 * np.pi * mid)
        u[10:20] += 40.0

        v = EllipticSystem(grid).solve(u)

        assert np.min(v) >= np.min(u) * (1 - 1e-12)
        assert np.max(v) <= np.max(u) * (1 + 1e-12)
        assert np.max(v) < np.max(u)

    def test_manufactured_signal_converges_at_second_order(self) -> None:
        levels = elliptic_convergence([32, 64, 128, 256], N=3, R=1.0)

        assert observed_order([level.error for level in levels]) >= 1.9
        assert levels[-1].error < 1e-3

    def test_rhs_raises_error_when_u_is_nodal(self) -> None:
        grid = RadialGrid.graded(3, 1.0, 8)

        with pytest.raises(ValueError, match=r"^`u` must hold one value per cell \(8\), but has shape \(9,\) instead\.$"):
            EllipticSystem(grid).rhs(np.ones(9))


class TestSolveElliptic:
    def test_solve_elliptic_returns_cumulative_signal(self) -> None:
        grid = RadialGrid.graded(3, 1.0, 32)
        u = np.linspace(1.0, 2.0, 32)

        v, z = solve_elliptic(u, grid)

        assert_close(z, compute_z(v, grid))
        assert z[0] == 0.0
        assert np.all(np.diff(z) > 0)
