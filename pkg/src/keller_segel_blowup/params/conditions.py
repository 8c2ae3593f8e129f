# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple, Union

logger = logging.getLogger(__name__)

# Relative slack at the open endpoints of the admissible region, so that
# parameters sitting on a threshold up to rounding count as excluded.
_BOUNDARY_RTOL = 1e-12


class ScopeError(ValueError):
    """Raised for dimensions outside the blow-up theorem (``N < 3``)."""


class InadmissibleParametersError(ValueError):
    """Raised when (m, k) lie outside the admissible region."""


class EmptyIntervalError(ValueError):
    """Raised when the requested eps0 leaves no valid moment exponent."""


class Supremum(Enum):
    UNBOUNDED = "unbounded"


Eps0Bound = Union[float, Supremum]


@dataclass(frozen=True)
class ModelParams:
    N: int
    """Space dimension."""

    R: float
    """Radius of the ball."""

    m: float
    """Diffusion exponent of (u + 1)^m."""

    chi0: float
    """Sensitivity amplitude."""

    a: float
    """Sensitivity shift, chi(v) = chi0 (a + v)^-k."""

    k: float
    """Sensitivity decay exponent."""

    M0: float
    """Total mass of the initial density."""

    M1: float
    """Mass required inside the inner ball of the initial data."""

    L: float
    """Amplitude of the initial decay envelope L r^-p."""

    def __post_init__(self) -> None:
        if self.N < 3:
            raise ScopeError(
                f"`N` must be at least 3 for the blow-up theorem, but is {self.N} instead."
            )
        for name in ("R", "chi0", "k", "L", "M0", "M1"):
            if not getattr(self, name) > 0:
                raise ValueError(
                    f"`{name}` must be positive, but is {getattr(self, name)} instead."
                )
        if self.m < 1:
            raise ValueError(f"`m` must be at least 1, but is {self.m} instead.")
        if self.a < 0:
            raise ValueError(f"`a` must be nonnegative, but is {self.a} instead.")
        if self.M1 >= self.M0:
            raise ValueError(
                f"`M1` must be smaller than `M0` ({self.M0}), but is {self.M1} instead."
            )

    @property
    def volume(self) -> float:
        """Upper end R^N of the volume coordinate."""
        return float(self.R**self.N)


@dataclass(frozen=True)
class MomentConfig:
    eps0: float
    p: float
    gamma: float
    alpha: float
    theta1: float
    s0: float


@dataclass
class AdmissibilityReport:
    admissible: bool
    m_upper: float
    k_upper: float
    eps0_max: Optional[Eps0Bound]
    """Supremum of valid eps0, ``None`` when the parameters are inadmissible."""

    gamma_interval: Optional[Tuple[float, float]]
    """Open interval of moment exponents for the chosen eps0, ``None`` when empty."""

    eps0: Optional[float] = None
    envelope_applicable: bool = False
    """Whether the pointwise decay envelope u <= K r^-p holds for (m, k)."""

    messages: List[str] = field(default_factory=list)


def m_upper_of(N: int) -> float:
    return (2 * N - 2) / N


def _k_brackets(N: int, m: float) -> Tuple[float, float]:
    first = 2 / (N - 2)
    second = (2 * N - 2 - N * m) / (((m - 1) * N + 1) * (N - 2))
    return first, second


def _below(x: float, upper: float) -> bool:
    return x < upper - _BOUNDARY_RTOL * max(1.0, abs(upper))


def _check_scope(N: int) -> None:
    if N < 3:
        raise ScopeError(
            f"`N` must be at least 3 for the blow-up theorem, but is {N} instead."
        )


def k_threshold(N: int, m: float) -> float:
    """Return the upper bound on ``k`` of the admissible region for ``m``."""
    _check_scope(N)
    if m < 1 or not _below(m, m_upper_of(N)):
        raise ValueError(
            f"`m` must lie in [1, {m_upper_of(N):g}), but is {m} instead; "
            "the admissible k-range is empty."
        )
    return min(_k_brackets(N, m))


def is_admissible(N: int, m: float, k: float) -> bool:
    _check_scope(N)
    if m < 1 or not _below(m, m_upper_of(N)):
        return False
    return k > 0 and _below(k, min(_k_brackets(N, m)))


def p_of_eps(N: int, m: float, eps: float) -> float:
    """Decay exponent N(N-1)/((m-1)N+1) + eps of the initial envelope."""
    return N * (N - 1) / ((m - 1) * N + 1) + eps


def eps0_max(N: int, m: float, k: float) -> Eps0Bound:
    if not is_admissible(N, m, k):
        raise InadmissibleParametersError(
            f"(m, k) = ({m}, {k}) is not admissible for N = {N}; "
            "eps0 has no valid range."
        )
    if m == 1:
        return Supremum.UNBOUNDED
    _, second = _k_brackets(N, m)
    return (N - 2) / (m - 1) * (second - k)


def default_eps0(N: int, m: float, k: float) -> float:
    bound = eps0_max(N, m, k)
    if bound is Supremum.UNBOUNDED:
        return 1.0
    assert isinstance(bound, float)
    return min(1.0, bound / 2)


def gamma_interval(N: int, m: float, k: float, eps0: float) -> Tuple[float, float]:
    """Open interval of admissible moment exponents gamma."""
    if eps0 <= 0:
        raise ValueError(f"`eps0` must be positive, but is {eps0} instead.")
    bound = eps0_max(N, m, k)
    if bound is not Supremum.UNBOUNDED:
        assert isinstance(bound, float)
        if not _below(eps0, bound):
            raise EmptyIntervalError(
                f"`eps0` must be smaller than {bound:g}, but is {eps0} instead; "
                "the gamma interval is empty."
            )
    p = p_of_eps(N, m, eps0)
    lo = 1 - 2 / N - p * (m - 1) / N
    hi = min(2 - 4 / N - 2 * p * (m - 1) / N - (1 - 2 / N) * k, 1.0)
    assert 0 < lo < hi <= 1, (lo, hi)
    return lo, hi


def alpha_of_gamma(gamma: float, N: int, k: float) -> float:
    alpha = gamma - (1 - 2 / N) * k
    if not 0 < alpha < 1:
        raise ValueError(
            f"`alpha` = gamma - (1 - 2/N) k must lie in (0, 1), but is {alpha} "
            f"for gamma = {gamma}, N = {N}, k = {k}."
        )
    return alpha


def alpha_identity(gamma: float, N: int, k: float) -> Tuple[float, float]:
    """Return (-gamma + 2/N + alpha, (2 - (N - 2) k) / N); the two agree."""
    alpha = gamma - (1 - 2 / N) * k
    return -gamma + 2 / N + alpha, (2 - (N - 2) * k) / N


def exponent_window(alpha: float, N: int) -> Tuple[float, bool]:
    """Exponent -2/N + 2 - alpha/2 of the diffusion estimate and whether it lies in (1, 2)."""
    value = -2 / N + 2 - alpha / 2
    return value, 1 < value < 2


def theta1_of(N: int, m: float, k: float, eps0: float) -> float:
    p = p_of_eps(N, m, eps0)
    drift = (1 - 2 / N) * k
    theta1 = max(4 / N + 2 * p * (m - 1) / N + drift, 2 - 4 / N + drift, 2 / N)
    assert 0 < theta1 < 2 - drift, theta1
    return theta1


def envelope_applicable(N: int, m: float, k: float) -> bool:
    return 1 - 1 / N < m <= 1 + (N - 2) / N and 0 < k < 1


def resolve_moment_config(
    params: ModelParams,
    gamma: Optional[float] = None,
    s0_fraction: float = 0.5,
    eps0: Optional[float] = None,
) -> MomentConfig:
    """Derive the moment exponents for ``params``.

    ``gamma=None`` picks the midpoint of the gamma interval and ``eps0=None``
    the default eps0 (1 for m = 1, otherwise min(1, eps0_max / 2)).
    """
    N, m, k = params.N, params.m, params.k
    if not 0 < s0_fraction < 1:
        raise ValueError(
            f"`s0_fraction` must lie in (0, 1), but is {s0_fraction} instead."
        )
    if eps0 is None:
        eps0 = default_eps0(N, m, k)
    lo, hi = gamma_interval(N, m, k, eps0)
    if gamma is None:
        gamma = (lo + hi) / 2
    elif not lo < gamma < hi:
        raise ValueError(
            f"`gamma` must lie in ({lo:g}, {hi:g}), but is {gamma} instead."
        )
    return MomentConfig(
        eps0=eps0,
        p=p_of_eps(N, m, eps0),
        gamma=gamma,
        alpha=alpha_of_gamma(gamma, N, k),
        theta1=theta1_of(N, m, k, eps0),
        s0=s0_fraction * params.volume,
    )


def check_conditions(
    params: ModelParams, eps0: Optional[float] = None
) -> AdmissibilityReport:
    N, m, k = params.N, params.m, params.k
    _check_scope(N)

    m_upper = m_upper_of(N)
    k_upper = min(_k_brackets(N, m))

    messages: List[str] = []
    if m < 1 or not _below(m, m_upper):
        messages.append(f"`m` must lie in [1, {m_upper:g}), but is {m} instead.")
    if not (k > 0 and _below(k, k_upper)):
        messages.append(f"`k` must lie in (0, {k_upper:g}), but is {k} instead.")

    report = AdmissibilityReport(
        admissible=not messages,
        m_upper=m_upper,
        k_upper=k_upper,
        eps0_max=None,
        gamma_interval=None,
        envelope_applicable=envelope_applicable(N, m, k),
        messages=messages,
    )
    if not report.envelope_applicable:
        messages.append(
            "the decay envelope u <= K r^-p is only established for "
            f"m in ({1 - 1 / N:g}, {1 + (N - 2) / N:g}] and k in (0, 1)."
        )
    if not report.admissible:
        return report

    report.eps0_max = eps0_max(N, m, k)
    report.eps0 = default_eps0(N, m, k) if eps0 is None else eps0
    try:
        report.gamma_interval = gamma_interval(N, m, k, report.eps0)
    except EmptyIntervalError as ex:
        messages.append(str(ex))

    logger.debug(f"Admissibility of {params}: {report}")
    return report
