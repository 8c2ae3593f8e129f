# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from keller_segel_blowup.diagnostics.checks import (
    BoundNotApplicableError,
    CheckResult,
    InsufficientSamplesError,
    check_I2_lower,
    check_identity,
    check_initial_moment,
    check_phi_upper,
    check_pointwise_bound,
)
from keller_segel_blowup.diagnostics.envelopes import empirical_envelopes
from keller_segel_blowup.diagnostics.odi import OdiFit, odi_fit
from keller_segel_blowup.params.bounds import eta_lower_bound, surface_measure
from keller_segel_blowup.params.conditions import (
    ModelParams,
    MomentConfig,
    alpha_identity,
    exponent_window,
)
from keller_segel_blowup.quadrature.double_integral import nested_integral_ratio
from keller_segel_blowup.solver.elliptic import EllipticSystem
from keller_segel_blowup.solver.grid import RadialGrid
from keller_segel_blowup.solver.sensitivity import Sensitivity
from keller_segel_blowup.solver.series import TimeSeries
from keller_segel_blowup.solver.state import State

logger = logging.getLogger(__name__)

POINTWISE_SLACK = 0.01
MASS_DRIFT = 1e-4
ENVELOPE_GROWTH = 10.0


@dataclass
class DiagnosticReport:
    entries: List[CheckResult] = field(default_factory=list)
    odi: List[OdiFit] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every check except the empirical ones passed."""
        return all(e.passed for e in self.entries if e.kind != "empirical")

    @property
    def failures(self) -> List[str]:
        return [e.name for e in self.entries if not e.passed and e.kind != "empirical"]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pass": self.passed,
            "checks": [e.to_dict() for e in self.entries],
            "odi_fit": [fit.to_dict() for fit in self.odi],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def _conservation_checks(
    params: ModelParams, series: TimeSeries
) -> List[CheckResult]:
    drift = float(np.max(np.abs(series.column("mass_u") - params.M0)) / params.M0)
    eta = eta_lower_bound(params.M0, params.N, 2 * params.R)
    v_min = float(np.min(series.column("v_min")))
    flux_cap = 2 * params.M0 / surface_measure(params.N)
    flux = float(np.max(series.column("flux_max")))
    return [
        CheckResult("mass_drift", drift <= MASS_DRIFT, drift, MASS_DRIFT, kind="conservation"),
        CheckResult(
            "v_lower_bound",
            v_min >= eta * (1 - 1e-9),
            v_min - eta,
            0.0,
            kind="conservation",
            detail=f"min v = {v_min:.6g}, eta = {eta:.6g}.",
        ),
        CheckResult(
            "flux_bound",
            flux <= flux_cap,
            flux / flux_cap,
            1.0,
            kind="conservation",
        ),
    ]


def _envelope_checks(series: TimeSeries) -> List[CheckResult]:
    """Growth of the recorded envelope constants over their initial values.

    ``K_emp`` is usually attained by the outer part of the profile, which the
    dynamics leave almost untouched, so its ratio stays near 1 even while the
    core collapses. ``Cv_emp`` follows the signal near the origin.
    """
    entries = []
    for name, column in (("envelope_growth", "K_emp"), ("signal_growth", "Cv_emp")):
        values = series.column(column)
        growth = float(np.max(values) / values[0])
        entries.append(
            CheckResult(
                name,
                growth < ENVELOPE_GROWTH,
                growth,
                ENVELOPE_GROWTH,
                kind="empirical",
                detail=f"max {column} over its initial value.",
            )
        )
    return entries


def _moment_checks(
    index: int,
    config: MomentConfig,
    params: ModelParams,
    grid: RadialGrid,
    series: TimeSeries,
    snapshots: Sequence[State],
    eta_frac: float,
    sensitivity: Optional[Sensitivity],
    system: EllipticSystem,
) -> List[CheckResult]:
    N, k = params.N, params.k
    gamma, s0 = config.gamma, config.s0
    entries = []

    try:
        entries.append(check_identity(series, index, params, gamma, s0))
    except InsufficientSamplesError as ex:
        entries.append(
            CheckResult(f"identity[{index}]", False, math.nan, 0.05, kind="identity", detail=str(ex))
        )

    margins, ratios, upper = [], [], []
    for state in snapshots:
        Cv = empirical_envelopes(state, grid, config.p, system).Cv_emp
        margins.append(check_I2_lower(state, gamma, s0, params, grid, Cv, sensitivity))
        ratios.append(check_pointwise_bound(state, gamma, s0, N, k, grid))
        upper.append(check_phi_upper(state, gamma, s0, N, k, grid))

    scale = 1e-12 * max(1.0, params.M0 * s0 ** (2 - gamma))
    entries.append(
        CheckResult(f"I2_lower[{index}]", min(margins) >= -scale, min(margins), 0.0)
    )
    entries.append(
        CheckResult(
            f"pointwise_bound[{index}]", max(ratios) <= 1 + POINTWISE_SLACK, max(ratios), 1 + POINTWISE_SLACK
        )
    )
    entries.append(
        CheckResult(f"phi_upper[{index}]", max(upper) <= 1 + 1e-9, max(upper), 1.0)
    )

    try:
        margin = check_initial_moment(snapshots[0], gamma, s0, eta_frac, params.M1, grid)
        entries.append(CheckResult(f"initial_moment[{index}]", margin >= 0, margin, 0.0))
    except BoundNotApplicableError as ex:
        entries.append(
            CheckResult(f"initial_moment[{index}]", False, math.nan, 0.0, detail=str(ex))
        )

    window_exponent, inside = exponent_window(config.alpha, N)
    entries.append(
        CheckResult(
            f"exponent_window[{index}]",
            inside,
            window_exponent,
            2.0,
            detail="-2/N + 2 - alpha/2 must lie in (1, 2).",
        )
    )
    lhs, rhs = alpha_identity(gamma, N, k)
    entries.append(
        CheckResult(f"alpha_identity[{index}]", abs(lhs - rhs) <= 1e-12 and rhs > 0, lhs - rhs, 1e-12)
    )

    if inside:
        coarse = nested_integral_ratio(window_exponent, 0.5, s0, samples=64)
        fine = nested_integral_ratio(window_exponent, 0.5, s0, samples=128)
        change = abs(fine - coarse) / fine
        entries.append(
            CheckResult(
                f"nested_integral_ratio[{index}]",
                math.isfinite(fine) and change <= 0.05,
                fine,
                0.05,
                detail=f"relative change {change:.3e} from 64 to 128 samples.",
            )
        )

    return entries


def run_checks(
    params: ModelParams,
    grid: RadialGrid,
    series: TimeSeries,
    snapshots: Sequence[State],
    moment_configs: Sequence[MomentConfig],
    eta_frac: float = 0.5,
    sensitivity: Optional[Sensitivity] = None,
) -> DiagnosticReport:
    """Evaluate the identity and inequality suite on a finished run."""
    if not snapshots:
        raise ValueError("`snapshots` must hold at least the initial state.")
    system = EllipticSystem(grid)
    report = DiagnosticReport(entries=_conservation_checks(params, series))
    report.entries += _envelope_checks(series)

    t = series.t
    for index, config in enumerate(moment_configs):
        report.entries += _moment_checks(
            index, config, params, grid, series, snapshots, eta_frac, sensitivity, system
        )
        if len(t) >= 3:
            fit = odi_fit(
                t,
                series.column(f"phi_{index}"),
                config.gamma,
                config.s0,
                params.N,
                params.k,
                config.theta1,
            )
            report.odi.append(fit)
            report.entries.append(
                CheckResult(
                    f"s0_below_s1_like[{index}]",
                    fit.s0_below_s1_like,
                    math.nan if fit.predicted_T is None else fit.predicted_T,
                    float(t[-1]),
                    kind="empirical",
                    detail=fit.message,
                )
            )

    for failure in report.failures:
        logger.warning(f"Diagnostic check `{failure}` failed.")
    return report
