# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

"""Concentrated initial densities below the decay envelope L r^-p.

The profile is a capped power law min(A, L r^-p) on [0, r1], continued by a
smoothstep taper over [r1, r1 + taper_fraction r1], plus a bump
B (4y(1 - y))^2, y = (r - r1) / (R - r1), on (r1, R) that carries the
remaining mass. A places exactly M1 inside B_r1.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from keller_segel_blowup.params.bounds import surface_measure
from keller_segel_blowup.params.conditions import ModelParams
from keller_segel_blowup.solver.grid import RadialGrid
from keller_segel_blowup.solver.sensitivity import Sensitivity
from keller_segel_blowup.solver.state import State
from keller_segel_blowup.solver.stepper import RadialSolver
from keller_segel_blowup.typing import FloatArray

logger = logging.getLogger(__name__)


class InfeasibleInitialDataError(ValueError):
    """Raised when M0, M1, r1, L and p admit no profile of the required form."""


@dataclass(frozen=True)
class InitialProfile:
    N: int
    R: float
    L: float
    p: float
    r1: float
    taper_width: float
    A: float
    """Cap level of the inner power law."""

    B: float
    """Amplitude of the outer bump."""

    @property
    def rho_c(self) -> float:
        """Radius where the cap meets the envelope, L rho_c^-p = A."""
        return float((self.L / self.A) ** (1 / self.p))

    def capped(self, r: FloatArray) -> FloatArray:
        with np.errstate(divide="ignore"):
            envelope = np.where(r > 0, self.L * np.abs(r) ** (-self.p), np.inf)
        return np.minimum(self.A, envelope)

    def taper(self, r: FloatArray) -> FloatArray:
        x = np.clip((r - self.r1) / self.taper_width, 0.0, 1.0)
        return 1 - 3 * x**2 + 2 * x**3

    def bump(self, r: FloatArray) -> FloatArray:
        y = (r - self.r1) / (self.R - self.r1)
        inside = (y > 0) & (y < 1)
        return np.where(inside, (4 * y * (1 - y)) ** 2, 0.0)

    def density(self, r: FloatArray) -> FloatArray:
        return self.capped(r) * self.taper(r) + self.B * self.bump(r)

    @property
    def breakpoints(self) -> List[float]:
        return sorted({self.rho_c, self.r1, self.r1 + self.taper_width})


def _inner_mass(A: float, L: float, p: float, r1: float, N: int) -> float:
    """Mass of min(A, L r^-p) inside B_r1."""
    omega = surface_measure(N)
    rho_c = (L / A) ** (1 / p)
    if rho_c >= r1:
        return omega * A * r1**N / N
    mass = A * rho_c**N / N
    if p == N:
        mass += L * math.log(r1 / rho_c)
    else:
        mass += L * (r1 ** (N - p) - rho_c ** (N - p)) / (N - p)
    return omega * mass


def _integrate_radial(profile: InitialProfile, lo: float, hi: float) -> float:
    """Integral of rho^(N-1) u0(rho) over (lo, hi), split at the profile's kinks."""
    cuts = [lo] + [x for x in profile.breakpoints if lo < x < hi] + [hi]
    total = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        value, _ = quad(
            lambda rho: rho ** (profile.N - 1) * float(profile.density(np.array(rho))),
            a,
            b,
            epsabs=0.0,
            epsrel=1e-13,
            limit=100,
        )
        total += value
    return total


def _bump_integral(profile: InitialProfile) -> float:
    """Integral of rho^(N-1) (4y(1 - y))^2 over (r1, R)."""
    value, _ = quad(
        lambda rho: rho ** (profile.N - 1) * float(profile.bump(np.array(rho))),
        profile.r1,
        profile.R,
        epsabs=0.0,
        epsrel=1e-13,
    )
    return float(value)


def initial_profile(
    params: ModelParams,
    p: float,
    r1: float,
    taper_fraction: float = 0.1,
    cap_max: Optional[float] = None,
) -> InitialProfile:
    """Solve for the cap level A and bump amplitude B.

    :raises InfeasibleInitialDataError:
        if no cap places M1 inside B_r1 under the envelope, or if the inner
        part alone already exceeds M0.
    """
    N, R, L, M0, M1 = params.N, params.R, params.L, params.M0, params.M1
    if not p > 0:
        raise ValueError(f"`p` must be positive, but is {p} instead.")
    if not 0 < taper_fraction:
        raise ValueError(
            f"`taper_fraction` must be positive, but is {taper_fraction} instead."
        )
    taper_width = taper_fraction * r1
    if not (0 < r1 and r1 + taper_width < R):
        raise ValueError(
            f"`r1` must satisfy 0 < r1 (1 + taper_fraction) < R = {R}, but is {r1} instead."
        )
    omega = surface_measure(N)

    if p < N:
        limit = omega * L * r1 ** (N - p) / (N - p)
        if M1 >= limit:
            raise InfeasibleInitialDataError(
                f"the envelope L r^-p holds at most {limit:.6g} inside B_r1, "
                f"which is below M1 = {M1}."
            )

    def excess(A: float) -> float:
        return _inner_mass(A, L, p, r1, N) - M1

    flat = L * r1 ** (-p)
    if cap_max is not None and excess(cap_max) < 0:
        raise InfeasibleInitialDataError(
            f"the cap `cap_max` = {cap_max} places only "
            f"{_inner_mass(cap_max, L, p, r1, N):.6g} inside B_r1, which is below M1 = {M1}."
        )

    if excess(flat) >= 0:
        # the cap stays below the envelope on all of B_r1
        A = M1 * N / (omega * r1**N)
    else:
        upper = 2 * flat if cap_max is None else cap_max
        while excess(upper) < 0:
            upper *= 2
            if not math.isfinite(upper):
                raise InfeasibleInitialDataError(
                    f"no finite cap places M1 = {M1} inside B_r1 under the envelope."
                )
        A = brentq(excess, flat, upper, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)

    profile = InitialProfile(
        N=N, R=R, L=L, p=p, r1=r1, taper_width=taper_width, A=float(A), B=0.0
    )
    core = omega * _integrate_radial(profile, 0.0, R)
    remainder = M0 - core
    if remainder < 0:
        raise InfeasibleInitialDataError(
            f"remainder negative: the capped core and its taper carry {core:.6g}, "
            f"which exceeds M0 = {M0}."
        )

    bump_mass = omega * _bump_integral(profile)
    profile = InitialProfile(
        N=N,
        R=R,
        L=L,
        p=p,
        r1=r1,
        taper_width=taper_width,
        A=float(A),
        B=remainder / bump_mass,
    )

    r = np.linspace(r1, R, 4097)[1:]
    ratio = profile.density(r) * r**p / L
    if np.max(ratio) > 1 + 1e-12:
        worst = float(r[np.argmax(ratio)])
        raise InfeasibleInitialDataError(
            f"the bump carrying the remaining mass {remainder:.6g} exceeds the envelope "
            f"L r^-p at r = {worst:.6g}."
        )

    logger.debug(f"Initial profile: A = {profile.A:.6g}, B = {profile.B:.6g}.")
    return profile


def build_initial_data(
    params: ModelParams,
    p: float,
    r1: float,
    grid: RadialGrid,
    taper_fraction: float = 0.1,
    cap_max: Optional[float] = None,
    sensitivity: Optional[Sensitivity] = None,
) -> State:
    """Initial state whose cell masses are the exact integrals of the profile."""
    if r1 <= grid.r_nodes[1]:
        raise InfeasibleInitialDataError(
            f"`r1` = {r1} is not resolved by the grid, whose first radius is {grid.r_nodes[1]:.6g}."
        )
    profile = initial_profile(params, p, r1, taper_fraction, cap_max)

    r = grid.r_nodes
    increments = np.array(
        [_integrate_radial(profile, float(a), float(b)) for a, b in zip(r[:-1], r[1:])]
    )
    w = np.concatenate(([0.0], np.cumsum(increments)))
    w[-1] = params.M0 / grid.omega

    solver = RadialSolver(params, grid, sensitivity)
    state = solver.refresh(0.0, w)
    logger.info(
        f"Initial data: u_max = {state.u_max:.6g}, cap A = {profile.A:.6g}, "
        f"bump B = {profile.B:.6g}."
    )
    return state
