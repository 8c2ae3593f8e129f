# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from typing import Dict, Sequence

import numpy as np
import pytest

from keller_segel_blowup.solver.blowup import Verdict, detect_blowup
from keller_segel_blowup.solver.series import TimeSeries
from keller_segel_blowup.solver.state import StepControl


def make_series(t: Sequence[float], u_max: Sequence[float], dt: float) -> TimeSeries:
    series = TimeSeries()
    for i, (ti, ui) in enumerate(zip(t, u_max)):
        record: Dict[str, float] = {name: 0.0 for name in series.columns}
        record.update(t=ti, dt=0.0 if i == 0 else dt, u_max=ui)
        series.append(record)
    return series


class TestDetectBlowup:
    def test_detect_works_on_synthetic_blowup(self) -> None:
        t = np.linspace(0.9, 0.999, 100)
        control = StepControl(dt_init=1e-3, dt_min=1e-3, dt_max=1e-3, U_blow=500.0, t_end=2.0)

        report = detect_blowup(make_series(t, 1 / (1 - t), 1e-3), control)

        assert report.verdict is Verdict.BLOWUP
        assert report.T_star_estimate == pytest.approx(1.0, abs=1e-3)
        assert report.fit_residual is not None and report.fit_residual < 1e-9
        assert report.to_dict()["verdict"] == "blowup"

    def test_detect_works_on_constant_series(self) -> None:
        t = np.linspace(0.0, 1.0, 11)
        control = StepControl(dt_init=0.1, dt_min=0.01, dt_max=0.1, t_end=1.0)

        report = detect_blowup(make_series(t, np.full(11, 5.0), 0.1), control)

        assert report.verdict is Verdict.BOUNDED
        assert report.T_star_estimate is None

    def test_detect_reports_growth_below_threshold_as_inconclusive(self) -> None:
        t = np.linspace(0.0, 0.5, 11)
        control = StepControl(dt_init=0.05, dt_min=0.01, dt_max=0.1, t_end=1.0, U_blow=1e6)

        report = detect_blowup(make_series(t, 5.0 * np.exp(10 * t), 0.05), control)

        assert report.verdict is Verdict.INCONCLUSIVE
        assert any(line.startswith("stopped at t = 0.5") for line in report.evidence)

    def test_detect_requires_collapsed_steps(self) -> None:
        t = np.linspace(0.9, 0.999, 100)
        control = StepControl(dt_init=1e-4, dt_min=1e-4, dt_max=1e-2, U_blow=500.0, t_end=2.0)

        report = detect_blowup(make_series(t, 1 / (1 - t), 1e-3), control)

        assert report.verdict is Verdict.INCONCLUSIVE
        assert any("dt exceeds dt_min" in line for line in report.evidence)

    def test_detect_requires_monotone_growth(self) -> None:
        t = np.linspace(0.9, 0.999, 100)
        u_max = 1 / (1 - t)
        u_max[-3] = u_max[-2]
        control = StepControl(dt_init=1e-3, dt_min=1e-3, dt_max=1e-3, U_blow=500.0, t_end=2.0)

        report = detect_blowup(make_series(t, u_max, 1e-3), control)

        assert report.verdict is Verdict.INCONCLUSIVE

    def test_detect_raises_error_when_series_is_empty(self) -> None:
        control = StepControl(dt_init=1e-3, dt_min=1e-3, dt_max=1e-3)

        with pytest.raises(ValueError, match=r"^`series` must not be empty\.$"):
            detect_blowup(TimeSeries(), control)
