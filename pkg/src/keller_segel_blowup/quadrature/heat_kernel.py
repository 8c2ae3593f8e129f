# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import logging
import math

import numpy as np
from scipy.integrate import quad
from scipy.special import kv

logger = logging.getLogger(__name__)


class QuadratureError(RuntimeError):
    """Raised when adaptive quadrature misses its error target."""

    def __init__(self, message: str, achieved_error: float):
        super().__init__(message)
        self.achieved_error = achieved_error


def heat_kernel_integral(N: int, d: float, tol: float = 1e-12) -> float:
    """Integral over t > 0 of (4 pi t)^(-N/2) exp(-t - d^2 / (4 t)).

    The domain is split at t = 1 and the tail mapped back onto (0, 1] with
    t -> 1/t; both pieces are integrated in log space.
    """
    if N < 1:
        raise ValueError(f"`N` must be at least 1, but is {N} instead.")
    if d <= 0:
        raise ValueError(f"`d` must be positive, but is {d} instead.")

    half = N / 2
    q = d * d / 4

    def head(t: float) -> float:
        return math.exp(-half * math.log(t) - t - q / t)

    def tail(tau: float) -> float:
        return math.exp((half - 2) * math.log(tau) - 1 / tau - q * tau)

    head_value, head_error = quad(head, 0.0, 1.0, epsabs=0.0, epsrel=1e-13, limit=200)
    tail_value, tail_error = quad(tail, 0.0, 1.0, epsabs=0.0, epsrel=1e-13, limit=200)

    scale = (4 * math.pi) ** (-half)
    error = scale * (head_error + tail_error)
    if error > tol:
        raise QuadratureError(
            f"heat kernel integral for N={N}, d={d} reached only {error:.3e} (target {tol:.1e}).",
            achieved_error=error,
        )
    return float(scale * (head_value + tail_value))


def heat_kernel_bessel(N: int, d: float) -> float:
    """Closed form 2 (4 pi)^(-N/2) (d/2)^(1 - N/2) K_(N/2 - 1)(d) of the same integral."""
    nu = N / 2 - 1
    return float(2 * (4 * np.pi) ** (-N / 2) * (d / 2) ** (-nu) * kv(nu, d))
