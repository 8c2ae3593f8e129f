# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import math
from typing import Optional

from scipy.special import gamma as gamma_fn

from keller_segel_blowup.quadrature.heat_kernel import heat_kernel_integral


def surface_measure(N: int) -> float:
    """(N-1)-dimensional measure 2 pi^(N/2) / Gamma(N/2) of the unit sphere in R^N."""
    return float(2 * math.pi ** (N / 2) / gamma_fn(N / 2))


def eta_lower_bound(M0: float, N: int, diam: float) -> float:
    """Uniform lower bound on v for initial mass ``M0`` on a domain of diameter ``diam``."""
    if M0 <= 0:
        raise ValueError(f"`M0` must be positive, but is {M0} instead.")
    if diam <= 0:
        raise ValueError(f"`diam` must be positive, but is {diam} instead.")
    return M0 * heat_kernel_integral(N, diam)


def blowup_time_bound(phi0: float, C1: float, C2: float) -> Optional[float]:
    """Blow-up time of y' = C1 y^2 - C2 started from ``phi0``.

    Returns ``None`` when ``phi0`` does not exceed the equilibrium sqrt(C2 / C1),
    in which case the comparison gives no finite bound.
    """
    if C1 <= 0:
        raise ValueError(f"`C1` must be positive, but is {C1} instead.")
    if C2 < 0:
        raise ValueError(f"`C2` must be nonnegative, but is {C2} instead.")

    c = math.sqrt(C2 / C1)
    if phi0 <= c:
        return None
    if c == 0:
        return 1 / (C1 * phi0)
    # ln((phi0 + c) / (phi0 - c)) without cancellation for small c
    return math.log1p(2 * c / (phi0 - c)) / (2 * C1 * c)
