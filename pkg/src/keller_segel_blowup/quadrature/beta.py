# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import math

from scipy.special import gammaln


def log_beta(x: float, y: float) -> float:
    return float(gammaln(x) + gammaln(y) - gammaln(x + y))


def beta_integral(a: float, b: float, s0: float) -> float:
    """Closed form of the integral of s^a (s0 - s)^b over (0, s0).

    Equals B(a + 1, b + 1) s0^(a + b + 1).
    """
    if a <= -1:
        raise ValueError(f"`a` must be greater than -1, but is {a} instead.")
    if b <= -1:
        raise ValueError(f"`b` must be greater than -1, but is {b} instead.")
    if s0 < 0:
        raise ValueError(f"`s0` must be nonnegative, but is {s0} instead.")
    if s0 == 0:
        return 0.0
    return math.exp(log_beta(a + 1, b + 1) + (a + b + 1) * math.log(s0))
