# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from dataclasses import dataclass
from typing import Protocol

import numpy as np

from keller_segel_blowup.params.conditions import ModelParams
from keller_segel_blowup.typing import FloatArray


class Sensitivity(Protocol):
    """Signal-dependent sensitivity chi(v), evaluated elementwise."""

    def __call__(self, v: FloatArray) -> FloatArray:
        ...


@dataclass(frozen=True)
class PowerSensitivity:
    """chi(v) = chi0 (a + v)^-k."""

    chi0: float
    a: float
    k: float

    def __call__(self, v: FloatArray) -> FloatArray:
        return self.chi0 * (self.a + v) ** (-self.k)

    def sup_above(self, eta: float) -> float:
        """Supremum of chi on [eta, infinity)."""
        return float(self.chi0 * (self.a + eta) ** (-self.k))


@dataclass(frozen=True)
class ZeroSensitivity:
    """chi = 0, leaving pure nonlinear diffusion."""

    def __call__(self, v: FloatArray) -> FloatArray:
        return np.zeros_like(v)


def power_sensitivity(params: ModelParams) -> PowerSensitivity:
    return PowerSensitivity(chi0=params.chi0, a=params.a, k=params.k)
