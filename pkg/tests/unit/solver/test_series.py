# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import pytest

from keller_segel_blowup.solver.series import TimeSeries, moment_columns
from keller_segel_blowup.solver.state import StepControl
from tests.common import assert_equal


def record(series: TimeSeries, t: float) -> dict:
    values = {name: float(i) for i, name in enumerate(series.columns)}
    values["t"] = t
    return values


class TestTimeSeries:
    def test_columns_work(self) -> None:
        series = TimeSeries(moment_count=2)

        assert series.columns[:6] == ["t", "dt", "u_max", "mass_u", "mass_v", "v_min"]
        assert series.columns[6:10] == moment_columns(0) == ["phi_0", "I1_0", "I2_0", "I3_0"]
        assert series.columns[-3:] == ["K_emp", "Cv_emp", "flux_max"]

    def test_frame_keeps_moment_count(self) -> None:
        series = TimeSeries(moment_count=1)
        series.append(record(series, 0.0))
        series.append(record(series, 0.5))

        restored = TimeSeries.from_frame(series.to_frame())

        assert restored.moment_count == 1
        assert_equal(restored.column("phi_0"), series.column("phi_0"))
        assert_equal(restored.t, [0.0, 0.5])

    def test_append_raises_error_when_record_is_incomplete(self) -> None:
        series = TimeSeries()

        with pytest.raises(ValueError, match=r"^`record` must contain \['flux_max'\]\.$"):
            series.append({name: 0.0 for name in series.columns if name != "flux_max"})

    def test_append_raises_error_when_time_does_not_increase(self) -> None:
        series = TimeSeries()
        series.append(record(series, 1.0))

        with pytest.raises(ValueError, match=r"^`t` must increase, but 1\.0 follows 1\.0\.$"):
            series.append(record(series, 1.0))

    def test_column_raises_error_when_name_is_unknown(self) -> None:
        with pytest.raises(KeyError):
            TimeSeries().column("phi_0")


class TestStepControl:
    def test_clamp_works(self) -> None:
        control = StepControl(dt_init=1e-4, dt_min=1e-6, dt_max=1e-3)

        assert control.clamp(1e-8) == 1e-6
        assert control.clamp(1e-2) == 1e-3
        assert control.clamp(5e-5) == 5e-5

    def test_init_raises_error_when_steps_are_unordered(self) -> None:
        with pytest.raises(ValueError, match=r"^`dt_min`, `dt_init` and `dt_max` must satisfy"):
            StepControl(dt_init=1e-2, dt_min=1e-6, dt_max=1e-3)

    def test_init_raises_error_when_cfl_safety_is_not_below_1(self) -> None:
        with pytest.raises(ValueError, match=r"^`cfl_safety` must lie in \(0, 1\), but is 1\.0 instead\.$"):
            StepControl(dt_init=1e-4, dt_min=1e-6, dt_max=1e-3, cfl_safety=1.0)
