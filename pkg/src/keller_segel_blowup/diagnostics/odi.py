# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

"""Empirical constants of the differential inequality

    dphi/dt >= C1 s0^(-3 + gamma + (1 - 2/N) k) phi^2 - C2 s0^(3 - gamma - theta1)

along a recorded moment history.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from keller_segel_blowup.diagnostics.moments import dphi_fd
from keller_segel_blowup.params.bounds import blowup_time_bound
from keller_segel_blowup.typing import FloatArray

logger = logging.getLogger(__name__)


@dataclass
class OdiFit:
    feasible: bool
    C1_emp: Optional[float] = None
    C2_emp: Optional[float] = None
    predicted_T: Optional[float] = None
    """Blow-up time of the comparison equation started from the first phi."""

    s0_below_s1_like: bool = False
    """Whether the fitted inequality forces blow-up from the initial moment."""

    message: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _cross(o: Tuple[float, float], a: Tuple[float, float], b: Tuple[float, float]) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(x: FloatArray, y: FloatArray) -> List[Tuple[float, float]]:
    """Lower convex hull of the points, ordered by increasing x."""
    points = sorted(set(zip(x.tolist(), y.tolist())))
    hull: List[Tuple[float, float]] = []
    for point in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)
    return hull


def odi_fit(
    t: FloatArray,
    phi: FloatArray,
    gamma: float,
    s0: float,
    N: int,
    k: float,
    theta1: float,
    dphi: Optional[FloatArray] = None,
) -> OdiFit:
    """Fit C1 and C2 so that the inequality holds at every sample.

    With X = s0^(-3 + gamma + (1 - 2/N) k) phi^2 and Y = dphi/dt, a line
    Y = C1 X - C2 b below all points is sought. If every Y is positive,
    C2 = 0 and C1 = min Y / X. Otherwise the steepest edge of the lower
    convex hull of the points gives C1 and its intercept gives C2.
    ``dphi`` defaults to the three-point finite difference of ``phi``.
    """
    if dphi is None:
        dphi = dphi_fd(t, phi)
    if len(phi) != len(dphi) or len(phi) < 2:
        raise ValueError("`phi` and `dphi` must have equal length of at least 2.")

    a = s0 ** (-3 + gamma + (1 - 2 / N) * k)
    b = s0 ** (3 - gamma - theta1)
    X = a * phi**2
    Y = np.asarray(dphi, dtype=np.float64)

    if np.all(X > 0) and np.all(Y > 0):
        C1, C2 = float(np.min(Y / X)), 0.0
    else:
        hull = lower_hull(X, Y)
        if len(hull) < 2:
            return OdiFit(feasible=False, message="fewer than two distinct samples.")
        (x0, y0), (x1, y1) = hull[-2], hull[-1]
        C1 = (y1 - y0) / (x1 - x0)
        if not C1 > 0:
            logger.warning(f"No positive C1 fits the moment history (steepest slope {C1:.3e}).")
            return OdiFit(
                feasible=False,
                message=f"the steepest lower hull edge has slope {C1:.6g} <= 0.",
            )
        C2 = max(C1 * x1 - y1, 0.0) / b

    predicted = blowup_time_bound(float(phi[0]), C1 * a, C2 * b)
    return OdiFit(
        feasible=True,
        C1_emp=C1,
        C2_emp=C2,
        predicted_T=None if predicted is None else float(t[0]) + predicted,
        s0_below_s1_like=predicted is not None,
    )
