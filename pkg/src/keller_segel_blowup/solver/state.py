# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from dataclasses import dataclass, replace

import numpy as np

from keller_segel_blowup.typing import FloatArray


@dataclass(frozen=True, eq=False)
class State:
    t: float
    """Time."""

    w: FloatArray
    """Mass accumulation at the s-nodes, pinned to 0 and M0 / omega at the ends."""

    u: FloatArray
    """Cell values N dw/ds of the density."""

    v: FloatArray
    """Signal at the r-nodes."""

    z: FloatArray
    """Cumulative integral of rho^(N-1) v at the r-nodes."""

    @property
    def u_max(self) -> float:
        return float(np.max(self.u))

    @property
    def v_min(self) -> float:
        return float(np.min(self.v))

    def at_time(self, t: float) -> "State":
        return replace(self, t=t)


@dataclass(frozen=True)
class StepControl:
    dt_init: float
    """Step size of the first attempt."""

    dt_min: float
    """Floor of the proposed step; rejections may still go below it."""

    dt_max: float
    """Ceiling of the proposed step."""

    cfl_safety: float = 0.5
    """Factor in (0, 1) applied to the stability and growth estimates."""

    c_growth: float = 0.01
    """Growth budget, the step is limited by c_growth / (1 + u_max)."""

    U_blow: float = 1.0e6
    """Density threshold of the blow-up verdict."""

    max_steps: int = 200_000
    """Upper limit on accepted steps."""

    t_end: float = 1.0
    """Time horizon."""

    bounded_factor: float = 10.0
    """A run reaching t_end with u_max below this multiple of its initial value is bounded."""

    max_rejections: int = 30
    """Consecutive halvings allowed before the run fails."""

    tol_neg_rel: float = 1e-12
    """Negative densities down to -tol_neg_rel * M0 are clipped, anything below rejects the step."""

    log_steps: int = 1000
    """Accepted steps between debug log lines."""

    def __post_init__(self) -> None:
        if not 0 < self.dt_min <= self.dt_init <= self.dt_max:
            raise ValueError(
                "`dt_min`, `dt_init` and `dt_max` must satisfy 0 < dt_min <= dt_init <= dt_max, "
                f"but are {self.dt_min}, {self.dt_init} and {self.dt_max} instead."
            )
        if not 0 < self.cfl_safety < 1:
            raise ValueError(
                f"`cfl_safety` must lie in (0, 1), but is {self.cfl_safety} instead."
            )
        for name in ("c_growth", "U_blow", "t_end", "bounded_factor"):
            if not getattr(self, name) > 0:
                raise ValueError(
                    f"`{name}` must be positive, but is {getattr(self, name)} instead."
                )
        if self.max_steps < 1:
            raise ValueError(
                f"`max_steps` must be at least 1, but is {self.max_steps} instead."
            )
        if self.max_rejections < 0:
            raise ValueError(
                f"`max_rejections` must be nonnegative, but is {self.max_rejections} instead."
            )

    def clamp(self, dt: float) -> float:
        return min(max(dt, self.dt_min), self.dt_max)
