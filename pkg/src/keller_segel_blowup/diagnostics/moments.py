# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

"""The moment phi(s0, t) = ∫ s^-gamma (s0 - s) w ds and its time derivative.

Differentiating under the integral with the w equation gives
dphi/dt = I1 + I2 + I3 with the integrands

    I1:  m N^2 s^(2 - 2/N) (N w_s + 1)^(m - 1) w_ss
    I2:  N chi(v) w_s w
    I3: -N chi(v) w_s z

against the same weight. All of them are evaluated from nodal values with
the product weights of the piecewise-linear interpolant.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from keller_segel_blowup.params.conditions import ModelParams
from keller_segel_blowup.quadrature.singular import product_weights, singular_moment_quad
from keller_segel_blowup.solver.grid import RadialGrid, nodal_derivative, second_derivative
from keller_segel_blowup.solver.sensitivity import Sensitivity, power_sensitivity
from keller_segel_blowup.solver.series import TimeSeries
from keller_segel_blowup.solver.state import State
from keller_segel_blowup.typing import FloatArray


@dataclass(frozen=True)
class MomentSample:
    t: float
    s0: float
    gamma: float
    phi: float
    I1: float
    I2: float
    I3: float
    dphi_fd: Optional[float] = None
    """Finite-difference time derivative of phi, when neighbours are available."""

    @property
    def total(self) -> float:
        return self.I1 + self.I2 + self.I3


def _check_moment(gamma: float, s0: float, grid: RadialGrid) -> None:
    if not 0 < gamma < 1:
        raise ValueError(f"`gamma` must lie in (0, 1), but is {gamma} instead.")
    if not 0 < s0 <= grid.volume:
        raise ValueError(
            f"`s0` must lie in (0, {grid.volume:g}], but is {s0} instead."
        )


class MomentSampler:
    """Moment and decomposition for one (gamma, s0) on a fixed grid."""

    def __init__(
        self,
        grid: RadialGrid,
        params: ModelParams,
        gamma: float,
        s0: float,
        sensitivity: Optional[Sensitivity] = None,
    ) -> None:
        _check_moment(gamma, s0, grid)
        self.grid = grid
        self.params = params
        self.gamma = gamma
        self.s0 = s0
        self.sensitivity = power_sensitivity(params) if sensitivity is None else sensitivity

        s = grid.s_nodes
        self._inside = s < s0
        self.nodes = np.append(s[self._inside], s0)
        self.weights = product_weights(self.nodes, gamma, s0)

        N = params.N
        self._diffusivity = params.m * N**2 * s ** (2 - 2 / N)

    def restrict(self, values: FloatArray) -> FloatArray:
        """Nodal ``values`` on [0, s0], interpolated at s0."""
        return np.append(
            values[self._inside], np.interp(self.s0, self.grid.s_nodes, values)
        )

    def integrate(self, values: FloatArray) -> float:
        return float(np.dot(self.weights, self.restrict(values)))

    def phi(self, w: FloatArray) -> float:
        return self.integrate(w)

    def integrands(self, state: State) -> Tuple[FloatArray, FloatArray, FloatArray]:
        s = self.grid.s_nodes
        N, m = self.params.N, self.params.m
        w_s = nodal_derivative(state.w, s)
        w_ss = second_derivative(state.w, s)
        chi = self.sensitivity(state.v)
        f1 = self._diffusivity * (np.maximum(N * w_s, 0.0) + 1) ** (m - 1) * w_ss
        f2 = N * chi * w_s * state.w
        f3 = -N * chi * w_s * state.z
        return f1, f2, f3

    def terms(self, state: State) -> Tuple[float, float, float]:
        f1, f2, f3 = self.integrands(state)
        return self.integrate(f1), self.integrate(f2), self.integrate(f3)

    def sample(self, state: State) -> MomentSample:
        I1, I2, I3 = self.terms(state)
        return MomentSample(
            t=state.t,
            s0=self.s0,
            gamma=self.gamma,
            phi=self.phi(state.w),
            I1=I1,
            I2=I2,
            I3=I3,
        )


def phi_moment(w: FloatArray, gamma: float, s0: float, grid: RadialGrid) -> float:
    _check_moment(gamma, s0, grid)
    return singular_moment_quad(grid.s_nodes, w, gamma, s0)


def ddt_phi_terms(
    state: State,
    gamma: float,
    s0: float,
    params: ModelParams,
    grid: RadialGrid,
    sensitivity: Optional[Sensitivity] = None,
) -> Tuple[float, float, float]:
    return MomentSampler(grid, params, gamma, s0, sensitivity).terms(state)


def dphi_fd(t: FloatArray, phi: FloatArray) -> FloatArray:
    """Three-point derivative of ``phi`` on the non-uniform times ``t``."""
    if len(t) < 3:
        raise ValueError(f"`t` must hold at least 3 samples, but holds {len(t)}.")
    return nodal_derivative(phi, t)


def moment_samples(
    series: TimeSeries, index: int, gamma: float, s0: float
) -> List[MomentSample]:
    """Samples of the ``index``-th moment recorded in ``series``."""
    t = series.t
    phi = series.column(f"phi_{index}")
    I1, I2, I3 = (series.column(f"{name}_{index}") for name in ("I1", "I2", "I3"))
    derivative = dphi_fd(t, phi) if len(t) >= 3 else np.full_like(t, np.nan)
    return [
        MomentSample(
            t=float(t[j]),
            s0=s0,
            gamma=gamma,
            phi=float(phi[j]),
            I1=float(I1[j]),
            I2=float(I2[j]),
            I3=float(I3[j]),
            dphi_fd=float(derivative[j]) if 0 < j < len(t) - 1 else None,
        )
        for j in range(len(t))
    ]
