# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Sequence

import numpy as np

from keller_segel_blowup.diagnostics.moments import MomentSampler, dphi_fd, phi_moment
from keller_segel_blowup.params.conditions import ModelParams, alpha_of_gamma
from keller_segel_blowup.quadrature.beta import log_beta
from keller_segel_blowup.quadrature.singular import slope_moment_quad
from keller_segel_blowup.solver.grid import RadialGrid, nodal_derivative
from keller_segel_blowup.solver.sensitivity import Sensitivity
from keller_segel_blowup.solver.series import TimeSeries
from keller_segel_blowup.solver.state import State
from keller_segel_blowup.typing import FloatArray

logger = logging.getLogger(__name__)


class InsufficientSamplesError(ValueError):
    """Raised when a series is too short for a finite-difference check."""


class BoundNotApplicableError(ValueError):
    """Raised when the hypothesis of a lower bound fails for the given data."""


@dataclass
class CheckResult:
    name: str
    passed: bool
    value: float
    """Margin or ratio, compared against ``tolerance``."""

    tolerance: float
    refinement_order_observed: Optional[float] = None
    kind: str = "inequality"
    """One of "identity", "inequality", "conservation" or "empirical"."""

    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out["pass"] = out.pop("passed")
        out["margin_or_ratio"] = out.pop("value")
        return out


def identity_floor(M0: float, gamma: float, s0: float) -> float:
    return 1e-12 * max(1.0, M0 * s0 ** (2 - gamma))


def smooth_window(series: TimeSeries, factor: float = 10.0) -> int:
    """Number of leading samples before u_max first exceeds ``factor`` times its initial value."""
    u_max = series.u_max
    above = np.nonzero(u_max > factor * u_max[0])[0]
    return int(above[0]) if len(above) else len(u_max)


def identity_deviations(
    series: TimeSeries, index: int, eps_floor: float, window: Optional[int] = None
) -> FloatArray:
    """Relative gap between the finite-difference dphi/dt and I1 + I2 + I3.

    Only samples with a neighbour on both sides are compared.
    """
    n = len(series) if window is None else window
    if n < 3:
        raise InsufficientSamplesError(
            f"the identity check needs at least 3 samples, but has {n}."
        )
    t = series.t[:n]
    phi = series.column(f"phi_{index}")[:n]
    terms = np.stack([series.column(f"I{j}_{index}")[:n] for j in (1, 2, 3)])

    fd = dphi_fd(t, phi)[1:-1]
    total = terms.sum(axis=0)[1:-1]
    scale = np.maximum.reduce(
        [np.abs(fd), np.abs(terms).sum(axis=0)[1:-1], np.full_like(fd, eps_floor)]
    )
    return np.asarray(np.abs(fd - total) / scale, dtype=np.float64)


def check_identity(
    series: TimeSeries,
    index: int,
    params: ModelParams,
    gamma: float,
    s0: float,
    tolerance: float = 0.05,
    window_factor: float = 10.0,
) -> CheckResult:
    """Compare dphi/dt with I1 + I2 + I3 over the smooth window of ``series``."""
    window = smooth_window(series, window_factor)
    deviations = identity_deviations(
        series, index, identity_floor(params.M0, gamma, s0), window
    )
    worst = float(np.max(deviations))
    return CheckResult(
        name=f"identity[{index}]",
        passed=worst <= tolerance,
        value=worst,
        tolerance=tolerance,
        kind="identity",
        detail=f"{len(deviations)} samples before u_max exceeds {window_factor:g} x initial.",
    )


def i2_lower_constant(params: ModelParams, Cv: float) -> float:
    return params.N * params.chi0 * (params.a * params.R ** (params.N - 2) + Cv) ** (-params.k)


def check_I2_lower(
    state: State,
    gamma: float,
    s0: float,
    params: ModelParams,
    grid: RadialGrid,
    Cv: float,
    sensitivity: Optional[Sensitivity] = None,
) -> float:
    """I2 minus C ∫ s^(-gamma + (1 - 2/N) k) (s0 - s) w w_s, C = N chi0 (a R^(N-2) + Cv)^-k.

    Both integrals share the product weights of ``gamma``, so the margin is
    nonnegative whenever v r^(N-2) <= Cv holds at the nodes.
    """
    sampler = MomentSampler(grid, params, gamma, s0, sensitivity)
    _, f2, _ = sampler.integrands(state)
    N, k = params.N, params.k
    w_s = nodal_derivative(state.w, grid.s_nodes)
    lower = (
        i2_lower_constant(params, Cv)
        * grid.s_nodes ** ((1 - 2 / N) * k)
        * w_s
        * state.w
    )
    return sampler.integrate(f2) - sampler.integrate(lower)


def check_pointwise_bound(
    state: State,
    gamma: float,
    s0: float,
    N: int,
    k: float,
    grid: RadialGrid,
    sample_s: Optional[Sequence[float]] = None,
) -> float:
    """Largest ratio of w(s) to sqrt(2) s^(alpha/2) (s0 - s)^(-1/2) J^(1/2).

    J = ∫ s^-alpha (s0 - s) w w_s over (0, s0) with alpha = gamma - (1 - 2/N) k.
    Samples default to 64 geometric points in (0, s0).
    """
    alpha = alpha_of_gamma(gamma, N, k)
    if sample_s is None:
        sample_s = np.geomspace(1e-3 * s0, 0.99 * s0, 64)
    s = np.asarray(sample_s, dtype=np.float64)
    if np.any(s <= 0) or np.any(s >= s0):
        raise ValueError(f"`sample_s` must lie in (0, {s0}).")

    J = slope_moment_quad(grid.s_nodes, state.w, alpha, s0)
    lhs = np.interp(s, grid.s_nodes, state.w)
    rhs = math.sqrt(2) * s ** (alpha / 2) * (s0 - s) ** (-0.5) * math.sqrt(max(J, 0.0))
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(rhs > 0, lhs / rhs, np.where(lhs > 0, np.inf, 0.0))
    return float(np.max(ratio))


def check_initial_moment(
    state: State,
    gamma: float,
    s0: float,
    eta_frac: float,
    M1: float,
    grid: RadialGrid,
) -> float:
    """phi(s0, 0) minus eta_frac^2 M1 / omega s0^(2 - gamma).

    ``eta_frac`` is the fraction with s_eta = (1 - eta_frac) s0, unrelated to
    the lower bound eta of v.

    :raises BoundNotApplicableError:
        if the mass inside r = s_eta^(1/N) is below M1.
    """
    if not 0 < eta_frac < 1:
        raise ValueError(f"`eta_frac` must lie in (0, 1), but is {eta_frac} instead.")
    s_eta = (1 - eta_frac) * s0
    inner = grid.omega * float(np.interp(s_eta, grid.s_nodes, state.w))
    if inner < M1 * (1 - 1e-12):
        raise BoundNotApplicableError(
            f"the mass {inner:.6g} inside r = {s_eta ** (1 / grid.N):.6g} is below M1 = {M1}."
        )
    phi = phi_moment(state.w, gamma, s0, grid)
    return phi - eta_frac**2 * M1 / grid.omega * s0 ** (2 - gamma)


def phi_upper_bound(J: float, gamma: float, N: int, k: float, s0: float) -> float:
    """Upper bound on phi from the pointwise estimate of w in terms of J."""
    drift = (1 - 2 / N) * k
    a = 1 - gamma / 2 - drift / 2
    return math.sqrt(2) * math.exp(log_beta(a, 0.5)) * s0 ** (1.5 - gamma / 2 - drift / 2) * math.sqrt(J)


def check_phi_upper(
    state: State, gamma: float, s0: float, N: int, k: float, grid: RadialGrid
) -> float:
    """Ratio of phi to its upper bound; at most 1."""
    alpha = alpha_of_gamma(gamma, N, k)
    J = slope_moment_quad(grid.s_nodes, state.w, alpha, s0)
    bound = phi_upper_bound(max(J, 0.0), gamma, N, k, s0)
    phi = phi_moment(state.w, gamma, s0, grid)
    if bound == 0:
        return 0.0 if phi == 0 else math.inf
    return phi / bound
