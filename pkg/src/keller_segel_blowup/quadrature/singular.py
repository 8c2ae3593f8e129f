# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

"""Quadrature for the weight s^-gamma (s0 - s) on (0, s0).

Gridded integrands are treated as piecewise linear between nodes and
integrated against the weight cell by cell (product integration). The cell
touching s = 0 uses a Gauss-Jacobi rule that absorbs s^-gamma exactly, the
remaining cells a Gauss-Legendre rule, so all nodal weights are positive.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import roots_jacobi

from keller_segel_blowup.typing import FloatArray

_CELL_ORDER = 16
_ORIGIN_ORDER = 4


@lru_cache(maxsize=None)
def _legendre(order: int) -> Tuple[FloatArray, FloatArray]:
    x, w = leggauss(order)
    return x, w


@lru_cache(maxsize=64)
def _jacobi(order: int, alpha: float, beta: float) -> Tuple[FloatArray, FloatArray]:
    x, w = roots_jacobi(order, alpha, beta)
    return x, w


def _check_exponent(gamma: float) -> None:
    if not gamma < 1:
        raise ValueError(
            f"`gamma` must be smaller than 1 for an integrable weight, but is {gamma} instead."
        )


@dataclass(frozen=True)
class SingularWeightRule:
    """Gauss-Jacobi rule for the weight s^-gamma (s0 - s) on (0, s0)."""

    gamma: float
    s0: float
    nodes: FloatArray
    weights: FloatArray

    @classmethod
    def build(cls, gamma: float, s0: float, order: int = 8) -> "SingularWeightRule":
        """Rule with ``order`` nodes, exact for polynomials of degree < 2 * order."""
        _check_exponent(gamma)
        if s0 <= 0:
            raise ValueError(f"`s0` must be positive, but is {s0} instead.")
        # s = s0 (1 + x) / 2 maps the Jacobi weight (1 - x)(1 + x)^-gamma onto ours
        x, w = _jacobi(order, 1.0, -gamma)
        return cls(
            gamma=gamma,
            s0=s0,
            nodes=s0 * (1 + x) / 2,
            weights=w * (s0 / 2) ** (2 - gamma),
        )

    def integrate(self, f: Callable[[FloatArray], FloatArray]) -> float:
        return float(np.dot(self.weights, f(self.nodes)))


def truncate_grid(
    s_nodes: FloatArray, values: FloatArray, s0: float
) -> Tuple[FloatArray, FloatArray]:
    """Restrict nodal ``values`` to [0, s0], interpolating linearly at ``s0``."""
    if s_nodes.shape != values.shape:
        raise ValueError(
            f"`values` must have the shape of the grid {s_nodes.shape}, but has {values.shape} instead."
        )
    if s_nodes[0] != 0 or s_nodes[-1] < s0 * (1 - 1e-14) or s0 <= 0:
        raise ValueError(
            f"the grid [{s_nodes[0]}, {s_nodes[-1]}] must cover [0, {s0}]."
        )
    s0 = min(s0, float(s_nodes[-1]))
    inside = s_nodes < s0
    nodes = np.append(s_nodes[inside], s0)
    vals = np.append(values[inside], np.interp(s0, s_nodes, values))
    return nodes, vals


def cell_weights(
    nodes: FloatArray, gamma: float, s0: float
) -> Tuple[FloatArray, FloatArray]:
    """Integrals of the weight times the left and right hat function of each cell."""
    _check_exponent(gamma)
    left, right = nodes[:-1], nodes[1:]
    h = right - left

    x, w = _legendre(_CELL_ORDER)
    s = left[:, None] + h[:, None] * (1 + x[None, :]) / 2
    with np.errstate(divide="ignore"):
        kernel = np.where(s > 0, s ** (-gamma), 0.0) * (s0 - s) * w[None, :] * h[:, None] / 2
    w_left = kernel @ ((1 - x) / 2)
    w_right = kernel @ ((1 + x) / 2)

    if left[0] == 0:
        # s^-gamma absorbed by the Jacobi weight (1 + x)^-gamma
        xj, wj = _jacobi(_ORIGIN_ORDER, 0.0, -gamma)
        h0 = h[0]
        sj = h0 * (1 + xj) / 2
        scale = (h0 / 2) ** (1 - gamma)
        w_left[0] = scale * np.sum(wj * (s0 - sj) * (1 - xj) / 2)
        w_right[0] = scale * np.sum(wj * (s0 - sj) * (1 + xj) / 2)

    return w_left, w_right


def product_weights(nodes: FloatArray, gamma: float, s0: float) -> FloatArray:
    """Nodal weights integrating the piecewise-linear interpolant exactly."""
    w_left, w_right = cell_weights(nodes, gamma, s0)
    weights = np.zeros_like(nodes)
    weights[:-1] += w_left
    weights[1:] += w_right
    return weights


def singular_moment_quad(
    s_nodes: FloatArray, values: FloatArray, gamma: float, s0: float
) -> float:
    """Integral of s^-gamma (s0 - s) f(s) over (0, s0) for f given at ``s_nodes``."""
    nodes, vals = truncate_grid(s_nodes, values, s0)
    return float(np.dot(product_weights(nodes, gamma, s0), vals))


def slope_moment_quad(
    s_nodes: FloatArray, w: FloatArray, gamma: float, s0: float
) -> float:
    """Integral of s^-gamma (s0 - s) w w_s over (0, s0) for piecewise-linear ``w``."""
    nodes, vals = truncate_grid(s_nodes, w, s0)
    w_left, w_right = cell_weights(nodes, gamma, s0)
    slopes = np.diff(vals) / np.diff(nodes)
    return float(np.sum(slopes * (vals[:-1] * w_left + vals[1:] * w_right)))
