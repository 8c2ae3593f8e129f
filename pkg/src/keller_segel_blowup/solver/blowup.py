# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from keller_segel_blowup.solver.series import TimeSeries
from keller_segel_blowup.solver.state import StepControl

# Accepted steps over which the collapse of dt and the growth of u_max are judged.
BLOWUP_WINDOW = 10


class Verdict(str, Enum):
    BLOWUP = "blowup"
    BOUNDED = "bounded"
    INCONCLUSIVE = "inconclusive"


@dataclass
class BlowupReport:
    verdict: Verdict
    t_last: float
    u_max_last: float
    T_star_estimate: Optional[float] = None
    """Zero of the least-squares line through 1/u_max over the final window."""

    fit_residual: Optional[float] = None
    """Root mean square residual of that fit."""

    evidence: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out["verdict"] = self.verdict.value
        return out


def _collapse_window(series: TimeSeries, control: StepControl) -> List[str]:
    """Reasons the final window fails the collapse test, empty when it passes."""
    reasons = []
    if len(series) < BLOWUP_WINDOW + 1:
        reasons.append(f"fewer than {BLOWUP_WINDOW} accepted steps.")
        return reasons
    dt = series.dt[-BLOWUP_WINDOW:]
    u_max = series.u_max[-BLOWUP_WINDOW - 1 :]
    if np.any(dt > control.dt_min * (1 + 1e-9)):
        reasons.append(
            f"dt exceeds dt_min = {control.dt_min:g} within the last {BLOWUP_WINDOW} steps."
        )
    if np.any(np.diff(u_max) <= 0):
        reasons.append(f"u_max is not increasing over the last {BLOWUP_WINDOW} steps.")
    return reasons


def detect_blowup(series: TimeSeries, control: StepControl) -> BlowupReport:
    """Classify a run from its time series."""
    if len(series) == 0:
        raise ValueError("`series` must not be empty.")

    t, u_max = series.t, series.u_max
    t_last, u_last = float(t[-1]), float(u_max[-1])

    if u_last >= control.U_blow:
        reasons = _collapse_window(series, control)
        if not reasons:
            window = slice(-BLOWUP_WINDOW - 1, None)
            slope, intercept = np.polyfit(t[window], 1 / u_max[window], 1)
            fitted = slope * t[window] + intercept
            residual = float(np.sqrt(np.mean((fitted - 1 / u_max[window]) ** 2)))
            T_star = float(-intercept / slope) if slope < 0 else None
            return BlowupReport(
                verdict=Verdict.BLOWUP,
                t_last=t_last,
                u_max_last=u_last,
                T_star_estimate=T_star,
                fit_residual=residual,
                evidence=[
                    f"u_max = {u_last:.6g} >= U_blow = {control.U_blow:g}.",
                    f"dt <= dt_min over the last {BLOWUP_WINDOW} steps.",
                    f"u_max increasing over the last {BLOWUP_WINDOW} steps.",
                ],
            )
        return BlowupReport(
            verdict=Verdict.INCONCLUSIVE,
            t_last=t_last,
            u_max_last=u_last,
            evidence=[f"u_max = {u_last:.6g} >= U_blow = {control.U_blow:g}, but"] + reasons,
        )

    reached_end = t_last >= control.t_end * (1 - 1e-12)
    ceiling = control.bounded_factor * float(u_max[0])
    peak = float(np.max(u_max))
    if reached_end and peak <= ceiling:
        return BlowupReport(
            verdict=Verdict.BOUNDED,
            t_last=t_last,
            u_max_last=u_last,
            evidence=[
                f"t_end = {control.t_end:g} reached.",
                f"max u_max = {peak:.6g} <= {control.bounded_factor:g} x initial u_max.",
            ],
        )

    evidence = []
    if not reached_end:
        evidence.append(f"stopped at t = {t_last:.6g} before t_end = {control.t_end:g}.")
    if peak > ceiling:
        evidence.append(
            f"max u_max = {peak:.6g} exceeds {control.bounded_factor:g} x initial u_max "
            f"but stays below U_blow = {control.U_blow:g}."
        )
    return BlowupReport(
        verdict=Verdict.INCONCLUSIVE, t_last=t_last, u_max_last=u_last, evidence=evidence
    )
