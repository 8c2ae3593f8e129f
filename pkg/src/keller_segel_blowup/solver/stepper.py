# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import logging
from typing import Optional

import numpy as np
from numpy.linalg import LinAlgError
from scipy.linalg import solve_banded

from keller_segel_blowup.params.conditions import ModelParams
from keller_segel_blowup.solver.elliptic import EllipticSystem, solve_elliptic
from keller_segel_blowup.solver.grid import (
    RadialGrid,
    cell_values,
    nodal_derivative,
    second_derivative,
)
from keller_segel_blowup.solver.sensitivity import Sensitivity, power_sensitivity
from keller_segel_blowup.solver.state import State
from keller_segel_blowup.typing import FloatArray

logger = logging.getLogger(__name__)


class StepRejected(RuntimeError):
    """Raised when a step leaves the admissible states; retry with a smaller step."""

    def __init__(self, message: str, dt: float):
        super().__init__(message)
        self.dt = dt


class RadialSolver:
    """IMEX stepper for the mass accumulation w on a fixed grid.

    Diffusion is implicit with its coefficient frozen at the current state,
    transport is explicit and upwinded by the sign of the velocity
    N chi(v) (z - w). Both ends of w are Dirichlet data.
    """

    def __init__(
        self,
        params: ModelParams,
        grid: RadialGrid,
        sensitivity: Optional[Sensitivity] = None,
    ) -> None:
        if params.N != grid.N or params.R != grid.R:
            raise ValueError(
                f"`grid` must match N = {params.N} and R = {params.R}, but has "
                f"N = {grid.N} and R = {grid.R} instead."
            )
        self.params = params
        self.grid = grid
        self.sensitivity = power_sensitivity(params) if sensitivity is None else sensitivity
        self.elliptic = EllipticSystem(grid)
        self.boundary_value = params.M0 / grid.omega

        N = params.N
        s, h = grid.s_nodes, grid.h
        self._diffusivity = params.m * N**2 * s ** (2 - 2 / N)
        self._a = 2 / ((h[:-1] + h[1:]) * h[:-1])
        self._b = 2 / ((h[:-1] + h[1:]) * h[1:])
        self._h_min = np.minimum(h[:-1], h[1:])

    def refresh(self, t: float, w: FloatArray, u: Optional[FloatArray] = None) -> State:
        """State at time ``t`` with v and z recomputed from the density."""
        if u is None:
            u = cell_values(w, self.grid)
        v, z = solve_elliptic(u, self.grid, self.elliptic)
        return State(t=t, w=w, u=u, v=v, z=z)

    def state_from_density(self, u: FloatArray, t: float = 0.0) -> State:
        w = np.concatenate(([0.0], np.cumsum(u * self.grid.h / self.grid.N)))
        return self.refresh(t, w, u)

    def diffusion_coefficient(self, state: State) -> FloatArray:
        """m N^2 s^(2 - 2/N) (N w_s + 1)^(m - 1) at the nodes."""
        u_nodal = self.params.N * nodal_derivative(state.w, self.grid.s_nodes)
        return self._diffusivity * (np.maximum(u_nodal, 0.0) + 1) ** (self.params.m - 1)

    def velocity(self, state: State) -> FloatArray:
        return self.params.N * self.sensitivity(state.v) * (state.z - state.w)

    def transport(self, state: State) -> FloatArray:
        """-c w_s with w_s upwinded by the sign of c; zero at the ends."""
        c = self.velocity(state)[1:-1]
        slopes = np.diff(state.w) / self.grid.h
        upwind = np.where(c > 0, slopes[:-1], slopes[1:])
        out = np.zeros_like(state.w)
        out[1:-1] = -c * upwind
        return out

    def semidiscrete_rhs(self, state: State) -> FloatArray:
        """Time derivative of w given by the spatial discretization of ``step``."""
        out = self.transport(state)
        d2w = second_derivative(state.w, self.grid.s_nodes)
        out[1:-1] += self.diffusion_coefficient(state)[1:-1] * d2w[1:-1]
        return out

    def stable_dt(self, state: State) -> float:
        """Transport CFL limit min ds / |c|; infinite without transport."""
        speed = np.abs(self.velocity(state)[1:-1]) / self._h_min
        peak = float(np.max(speed))
        return np.inf if peak == 0 else 1 / peak

    def step(self, state: State, dt: float, tol_neg: Optional[float] = None) -> State:
        """Advance ``state`` by ``dt``.

        :raises StepRejected:
            if the implicit solve fails, the result is not finite or the
            density drops below ``-tol_neg`` (default 1e-12 M0).
        """
        if not dt > 0:
            raise ValueError(f"`dt` must be positive, but is {dt} instead.")
        if tol_neg is None:
            tol_neg = 1e-12 * self.params.M0

        W = self.boundary_value
        D = self.diffusion_coefficient(state)[1:-1]
        lower = -dt * D * self._a
        upper = -dt * D * self._b

        ab = np.zeros((3, len(D)))
        ab[0, 1:] = upper[:-1]
        ab[1] = 1 - lower - upper
        ab[2, :-1] = lower[1:]

        rhs = state.w[1:-1] + dt * self.transport(state)[1:-1]
        rhs[-1] -= upper[-1] * W

        try:
            interior = solve_banded((1, 1), ab, rhs)
        except (LinAlgError, ValueError) as ex:
            raise StepRejected(f"implicit solve failed at t = {state.t}: {ex}", dt) from ex

        w = np.concatenate(([0.0], interior, [W]))
        if not np.all(np.isfinite(w)):
            raise StepRejected(f"non-finite w after a step of {dt} at t = {state.t}.", dt)

        u = cell_values(w, self.grid)
        u_min = float(np.min(u))
        if u_min < -tol_neg:
            raise StepRejected(
                f"density {u_min:.3e} below -{tol_neg:.1e} after a step of {dt} at t = {state.t}.",
                dt,
            )
        if u_min < 0:
            logger.debug(f"Clipping negative density {u_min:.3e} at t = {state.t + dt}.")
            u = np.maximum(u, 0.0)

        new_state = self.refresh(state.t + dt, w, u)
        if not np.all(np.isfinite(new_state.v)):
            raise StepRejected(f"non-finite signal after a step of {dt} at t = {state.t}.", dt)
        return new_state


def step(
    state: State,
    dt: float,
    params: ModelParams,
    grid: RadialGrid,
    sensitivity: Optional[Sensitivity] = None,
) -> State:
    return RadialSolver(params, grid, sensitivity).step(state, dt)
