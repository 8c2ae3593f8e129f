# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

"""Refinement studies: the elliptic solve against a manufactured solution,
time steps by Richardson differences, and the moment identity residual."""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

from keller_segel_blowup.diagnostics.checks import check_identity
from keller_segel_blowup.params.conditions import ModelParams, MomentConfig
from keller_segel_blowup.solver.elliptic import EllipticSystem
from keller_segel_blowup.solver.grid import RadialGrid
from keller_segel_blowup.solver.runner import run
from keller_segel_blowup.solver.sensitivity import Sensitivity
from keller_segel_blowup.solver.state import State, StepControl
from keller_segel_blowup.solver.stepper import RadialSolver
from keller_segel_blowup.typing import FloatArray

logger = logging.getLogger(__name__)


@dataclass
class ConvergenceLevel:
    study: str
    level: int
    resolution: float
    """Cells for spatial studies, dt for temporal ones."""

    error: float
    order: Optional[float] = None
    """log2 of the error ratio to the previous level."""

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def observed_orders(errors: Sequence[float]) -> List[Optional[float]]:
    """Orders between successive levels that halve the resolution."""
    orders: List[Optional[float]] = [None]
    for coarse, fine in zip(errors[:-1], errors[1:]):
        if coarse > 0 and fine > 0:
            orders.append(math.log2(coarse / fine))
        else:
            orders.append(None)
    return orders


def _with_orders(study: str, resolutions: Sequence[float], errors: Sequence[float]) -> List[ConvergenceLevel]:
    return [
        ConvergenceLevel(study=study, level=i, resolution=float(res), error=float(err), order=order)
        for i, (res, err, order) in enumerate(zip(resolutions, errors, observed_orders(errors)))
    ]


def manufactured_signal(N: int, R: float) -> Callable[[FloatArray], FloatArray]:
    """v*(r) = 2 + cos(pi r / R), which has v*_r = 0 at r = 0 and r = R."""
    return lambda r: 2 + np.cos(np.pi * r / R)


def manufactured_density(grid: RadialGrid) -> FloatArray:
    """Cell averages of u* = v* - Δv* against rho^(N-1)."""
    N, R = grid.N, grid.R
    r = grid.r_nodes
    v_star = manufactured_signal(N, R)

    x, wts = leggauss(12)
    left, dr = r[:-1], np.diff(r)
    rho = left[:, None] + dr[:, None] * (1 + x[None, :]) / 2
    mass_v = (rho ** (N - 1) * v_star(rho) * wts[None, :]).sum(axis=1) * dr / 2

    flux = r ** (N - 1) * (-np.pi / R) * np.sin(np.pi * r / R)
    volumes = np.diff(r**N) / N
    return np.asarray((mass_v - np.diff(flux)) / volumes, dtype=np.float64)


def elliptic_convergence(
    levels: Sequence[int], N: int = 3, R: float = 1.0
) -> List[ConvergenceLevel]:
    """Max-norm error of the elliptic solve on grids uniform in r."""
    errors = []
    for cells in levels:
        grid = RadialGrid.graded(N, R, cells, grading=float(N))
        v = EllipticSystem(grid).solve(manufactured_density(grid))
        errors.append(float(np.max(np.abs(v - manufactured_signal(N, R)(grid.r_nodes)))))
        logger.info(f"Elliptic solve on {cells} cells: error {errors[-1]:.3e}.")
    return _with_orders("elliptic", levels, errors)


def fixed_step(solver: RadialSolver, state: State, horizon: float, dt: float) -> State:
    steps = int(round(horizon / dt))
    for _ in range(steps):
        state = solver.step(state, dt)
    return state


def temporal_convergence(
    solver: RadialSolver,
    initial: State,
    horizon: float,
    dt0: float,
    levels: int = 4,
) -> List[ConvergenceLevel]:
    """Richardson differences max |w_dt - w_(dt/2)| over halving steps."""
    if levels < 3:
        raise ValueError(f"`levels` must be at least 3, but is {levels} instead.")
    steps = [dt0 / 2**i for i in range(levels)]
    finals = [fixed_step(solver, initial, horizon, dt).w for dt in steps]
    differences = [float(np.max(np.abs(a - b))) for a, b in zip(finals[:-1], finals[1:])]
    for dt, diff in zip(steps, differences):
        logger.info(f"Fixed step {dt:.3e}: Richardson difference {diff:.3e}.")
    return _with_orders("temporal", steps[:-1], differences)


def identity_convergence(
    params: ModelParams,
    control: StepControl,
    moment: MomentConfig,
    initial_for: Callable[[RadialGrid], State],
    levels: Sequence[int],
    grading: float = 2.0,
    envelope_p: float = 0.0,
    sensitivity: Optional[Sensitivity] = None,
) -> List[ConvergenceLevel]:
    """Worst identity deviation of the smooth window at each grid level."""
    deviations = []
    for cells in levels:
        grid = RadialGrid.graded(params.N, params.R, cells, grading)
        result = run(params, grid, control, [moment], initial_for(grid), envelope_p, sensitivity)
        check = check_identity(result.series, 0, params, moment.gamma, moment.s0)
        deviations.append(check.value)
        logger.info(f"Identity on {cells} cells: deviation {check.value:.3e}.")
    return _with_orders("identity", levels, deviations)
