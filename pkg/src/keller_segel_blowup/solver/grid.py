# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from keller_segel_blowup.params.bounds import surface_measure
from keller_segel_blowup.typing import FloatArray


@dataclass(frozen=True, eq=False)
class RadialGrid:
    """Nodes 0 = s_0 < ... < s_J = R^N of the volume coordinate s = r^N."""

    N: int
    R: float
    s_nodes: FloatArray
    grading: float = 2.0

    def __post_init__(self) -> None:
        s = self.s_nodes
        if s.ndim != 1 or len(s) < 3:
            raise ValueError("`s_nodes` must be a 1-D array with at least 3 nodes.")
        if s[0] != 0 or not np.all(np.diff(s) > 0):
            raise ValueError("`s_nodes` must start at 0 and increase strictly.")
        if not np.isclose(s[-1], self.R**self.N, rtol=1e-14, atol=0):
            raise ValueError(
                f"`s_nodes` must end at R^N = {self.R ** self.N}, but ends at {s[-1]} instead."
            )

    @classmethod
    def graded(
        cls, N: int, R: float, cells: int, grading: float = 2.0
    ) -> "RadialGrid":
        """Grid with s_j = R^N (j / J)^grading; ``grading = N`` is uniform in r."""
        if cells < 2:
            raise ValueError(f"`cells` must be at least 2, but is {cells} instead.")
        if grading < 1:
            raise ValueError(f"`grading` must be at least 1, but is {grading} instead.")
        xi = np.linspace(0.0, 1.0, cells + 1)
        s = R**N * xi**grading
        s[-1] = R**N
        return cls(N=N, R=R, s_nodes=s, grading=grading)

    @property
    def cells(self) -> int:
        return len(self.s_nodes) - 1

    @property
    def volume(self) -> float:
        return float(self.s_nodes[-1])

    @cached_property
    def r_nodes(self) -> FloatArray:
        r = self.s_nodes ** (1 / self.N)
        r[-1] = self.R
        return r

    @cached_property
    def h(self) -> FloatArray:
        """Cell widths in s."""
        return np.diff(self.s_nodes)

    @cached_property
    def omega(self) -> float:
        return surface_measure(self.N)


def _radial_cell_weights(grid: RadialGrid) -> Tuple[FloatArray, FloatArray]:
    """Integrals of rho^(N-1) against the left and right hat function of each r-cell."""
    # rho^(N-1) times a linear function has degree N
    x, w = leggauss(grid.N // 2 + 2)
    r = grid.r_nodes
    left, dr = r[:-1], np.diff(r)
    rho = left[:, None] + dr[:, None] * (1 + x[None, :]) / 2
    kernel = rho ** (grid.N - 1) * w[None, :] * dr[:, None] / 2
    return kernel @ ((1 - x) / 2), kernel @ ((1 + x) / 2)


def cumulative_radial_integral(values: FloatArray, grid: RadialGrid) -> FloatArray:
    """Cumulative trapezoid of rho^(N-1) f(rho) in rho, exact for piecewise-linear f."""
    if values.shape != grid.s_nodes.shape:
        raise ValueError(
            f"`values` must be given at the {len(grid.s_nodes)} grid nodes, but has shape {values.shape}."
        )
    w_left, w_right = _radial_cell_weights(grid)
    increments = w_left * values[:-1] + w_right * values[1:]
    return np.concatenate(([0.0], np.cumsum(increments)))


def compute_w(u: FloatArray, grid: RadialGrid) -> FloatArray:
    """Mass accumulation w(s) of a density ``u`` given at the r-nodes."""
    return cumulative_radial_integral(u, grid)


def compute_z(v: FloatArray, grid: RadialGrid) -> FloatArray:
    return cumulative_radial_integral(v, grid)


def cell_values(w: FloatArray, grid: RadialGrid) -> FloatArray:
    """Cell averages N dw/ds of the density."""
    return grid.N * np.diff(w) / grid.h


def radial_mass(u: FloatArray, grid: RadialGrid) -> float:
    """Integral of the cell-valued density over the ball, computed in r.

    Each cell contributes ``u_j`` times the Gauss integral of rho^(N-1) over
    its r-interval. Nothing here reads w, so a density that drifted from the
    mass accumulation (clipping, a stale or corrupted state) shows up as a
    deviation from M0.
    """
    if u.shape != grid.h.shape:
        raise ValueError(
            f"`u` must hold one value per cell ({grid.cells}), but has shape {u.shape} instead."
        )
    w_left, w_right = _radial_cell_weights(grid)
    return float(grid.omega * np.sum(u * (w_left + w_right)))


def nodal_derivative(f: FloatArray, s: FloatArray) -> FloatArray:
    """Three-point derivative on a non-uniform grid, one-sided at the ends.

    Interior values are the h-weighted mean of the adjacent slopes, so a
    nondecreasing ``f`` has a nonnegative derivative.
    """
    h = np.diff(s)
    slopes = np.diff(f) / h
    out = np.empty_like(f)
    out[1:-1] = (h[1:] * slopes[:-1] + h[:-1] * slopes[1:]) / (h[:-1] + h[1:])
    out[0] = slopes[0]
    out[-1] = slopes[-1]
    return out


def second_derivative(f: FloatArray, s: FloatArray) -> FloatArray:
    """Three-point second derivative at interior nodes, zero at the ends."""
    h = np.diff(s)
    slopes = np.diff(f) / h
    out = np.zeros_like(f)
    out[1:-1] = 2 * (slopes[1:] - slopes[:-1]) / (h[:-1] + h[1:])
    return out
