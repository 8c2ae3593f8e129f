# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

"""Radial solve of -Δv + v = u with homogeneous Neumann data.

The unknown v lives on the r-nodes. Each node owns the dual cell between the
neighbouring r-midpoints, the equation is integrated against rho^(N-1) over
it and the fluxes rho^(N-1) v_r are taken at the midpoints, vanishing at
r = 0 and r = R. Since u is piecewise constant on the primal cells, the
right-hand side is exact and the discrete mass of v equals that of u.
"""

from typing import Optional, Tuple

import numpy as np
from scipy.linalg import solve_banded

from keller_segel_blowup.solver.grid import RadialGrid, compute_z
from keller_segel_blowup.typing import FloatArray


class EllipticSystem:
    """Tridiagonal finite volume system of the signal equation on ``grid``."""

    def __init__(self, grid: RadialGrid) -> None:
        self.grid = grid

        N = grid.N
        r = grid.r_nodes
        mid = (r[:-1] + r[1:]) / 2

        self.conductance: FloatArray = mid ** (N - 1) / np.diff(r)

        edges_pow = np.concatenate(([0.0], mid**N, [grid.R**N])) / N
        r_pow = r**N / N
        self.dual_volumes: FloatArray = np.diff(edges_pow)

        # Shares of each dual cell in the primal cell to its left and right.
        self._left_share = r_pow - edges_pow[:-1]
        self._right_share = edges_pow[1:] - r_pow

        diag = self.dual_volumes.copy()
        diag[:-1] += self.conductance
        diag[1:] += self.conductance

        ab = np.zeros((3, len(r)))
        ab[0, 1:] = -self.conductance
        ab[1] = diag
        ab[2, :-1] = -self.conductance
        self._banded = ab

        assert np.all(self.dual_volumes > 0)

    def rhs(self, u: FloatArray) -> FloatArray:
        if u.shape != (self.grid.cells,):
            raise ValueError(
                f"`u` must hold one value per cell ({self.grid.cells}), but has shape {u.shape} instead."
            )
        out = np.zeros(self.grid.cells + 1)
        out[1:] += self._left_share[1:] * u
        out[:-1] += self._right_share[:-1] * u
        return out

    def apply(self, v: FloatArray) -> FloatArray:
        """Discrete operator applied to nodal ``v``."""
        out = self.dual_volumes * v
        flux = self.interface_flux(v)
        out[:-1] -= flux
        out[1:] += flux
        return out

    def solve(self, u: FloatArray) -> FloatArray:
        """Nodal v for the cell-valued density ``u``."""
        v = solve_banded((1, 1), self._banded, self.rhs(u))
        return np.asarray(v, dtype=np.float64)

    def residual(self, v: FloatArray, u: FloatArray) -> FloatArray:
        """Nodal residual in density units (divided by the dual volumes)."""
        return (self.apply(v) - self.rhs(u)) / self.dual_volumes

    def interface_flux(self, v: FloatArray) -> FloatArray:
        """rho^(N-1) v_r at the r-midpoints."""
        return self.conductance * np.diff(v)

    def mass_v(self, v: FloatArray) -> float:
        return float(self.grid.omega * np.dot(self.dual_volumes, v))


def solve_elliptic(
    u: FloatArray, grid: RadialGrid, system: Optional[EllipticSystem] = None
) -> Tuple[FloatArray, FloatArray]:
    """Return (v, z) for the cell-valued density ``u``."""
    if system is None:
        system = EllipticSystem(grid)
    v = system.solve(u)
    return v, compute_z(v, grid)
