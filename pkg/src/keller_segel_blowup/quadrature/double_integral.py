# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import numpy as np
from scipy.integrate import quad


def _check_exponents(a: float, b: float) -> None:
    if not 1 < a < 2:
        raise ValueError(
            f"`a` must lie in (1, 2) for a convergent outer integral, but is {a} instead."
        )
    if not 0 <= b < 1:
        raise ValueError(
            f"`b` must lie in [0, 1) for a convergent inner integral, but is {b} instead."
        )


def nested_integral(s: float, a: float, b: float, s0: float) -> float:
    """Integral over sigma in (0, s) of the integral over xi in (sigma, s0) of xi^-a (s0 - xi)^-b.

    Swapping the order gives the integral of xi^-a (s0 - xi)^-b min(xi, s)
    over (0, s0), split at s so that QUADPACK's algebraic weights absorb the
    endpoint singularities.
    """
    _check_exponents(a, b)
    if not 0 < s < s0:
        raise ValueError(f"`s` must lie in (0, {s0}), but is {s} instead.")

    near, _ = quad(lambda xi: (s0 - xi) ** (-b), 0.0, s, weight="alg", wvar=(1 - a, 0.0))
    far, _ = quad(lambda xi: xi ** (-a), s, s0, weight="alg", wvar=(0.0, -b))
    return float(near + s * far)


def nested_integral_ratio(a: float, b: float, s0: float, samples: int = 64) -> float:
    """Largest sampled ratio of the nested integral to s0^-b s^(2 - a).

    Samples are geometric in s from 1e-6 s0 to just below s0; a finite,
    refinement-stable value is the constant of the bound.
    """
    _check_exponents(a, b)
    if s0 <= 0:
        raise ValueError(f"`s0` must be positive, but is {s0} instead.")
    if samples < 2:
        raise ValueError(f"`samples` must be at least 2, but is {samples} instead.")

    s_values = np.geomspace(1e-6 * s0, s0 * (1 - 1e-3), samples)
    ratios = [
        nested_integral(float(s), a, b, s0) / (s0 ** (-b) * s ** (2 - a))
        for s in s_values
    ]
    return float(max(ratios))
