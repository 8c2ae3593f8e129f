# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from dataclasses import dataclass
from typing import Optional

import numpy as np

from keller_segel_blowup.solver.elliptic import EllipticSystem
from keller_segel_blowup.solver.grid import RadialGrid
from keller_segel_blowup.solver.state import State


@dataclass(frozen=True)
class EnvelopeTrace:
    t: float
    K_emp: float
    """Largest u r^p, taking r at the outer edge of each cell."""

    Cv_emp: float
    """Larger of sup v r^(N-2) and sup |r^(N-1) v_r|."""

    v_min: float
    flux_max: float
    """sup |r^(N-1) v_r| over the r-midpoints."""


def empirical_envelopes(
    state: State,
    grid: RadialGrid,
    p: float,
    system: Optional[EllipticSystem] = None,
) -> EnvelopeTrace:
    """Envelope constants of ``state``, taken over the grid without r = 0."""
    if system is None:
        system = EllipticSystem(grid)
    r = grid.r_nodes
    K = float(np.max(state.u * r[1:] ** p))
    v_decay = float(np.max(state.v[1:] * r[1:] ** (grid.N - 2)))
    flux = float(np.max(np.abs(system.interface_flux(state.v))))
    return EnvelopeTrace(
        t=state.t,
        K_emp=K,
        Cv_emp=max(v_decay, flux),
        v_min=state.v_min,
        flux_max=flux,
    )
