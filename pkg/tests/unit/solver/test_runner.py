# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import math
from dataclasses import replace
from typing import Any

import pytest

from keller_segel_blowup.cli.config import RunConfig
from keller_segel_blowup.solver.grid import RadialGrid
from keller_segel_blowup.solver.initial_data import build_initial_data
from keller_segel_blowup.solver.runner import RunResult, SolverFailure, run
from keller_segel_blowup.solver.state import State, StepControl


@pytest.fixture(scope="module")
def grid(blowup_config: RunConfig) -> RadialGrid:
    return blowup_config.build_grid()


@pytest.fixture(scope="module")
def initial(blowup_config: RunConfig, grid: RadialGrid) -> State:
    return build_initial_data(
        blowup_config.model_params(),
        blowup_config.envelope_p(),
        blowup_config.initial_data.r1,
        grid,
        blowup_config.initial_data.taper_fraction,
        blowup_config.initial_data.cap_max,
        blowup_config.model.to_sensitivity(),
    )


def run_with(
    config: RunConfig, grid: RadialGrid, initial: State, control: StepControl, **kwargs: Any
) -> RunResult:
    return run(
        config.model_params(),
        grid,
        control,
        [],
        initial,
        config.envelope_p(),
        config.model.to_sensitivity(),
        **kwargs,
    )


class TestRun:
    def test_run_recovers_from_rejected_steps(
        self, blowup_config: RunConfig, grid: RadialGrid, initial: State
    ) -> None:
        control = replace(blowup_config.step_control(), dt_init=1e-4, max_steps=5)

        result = run_with(blowup_config, grid, initial, control)

        assert result.rejections >= 1
        assert len(result.series) == 6

        halvings = math.log2(1e-4 / result.series.dt[1])
        assert halvings >= 1
        assert halvings == pytest.approx(round(halvings), abs=1e-9)

        assert result.final_state.t == result.series.t[-1]

    def test_run_raises_error_when_rejections_are_exhausted(
        self, blowup_config: RunConfig, grid: RadialGrid, initial: State
    ) -> None:
        control = replace(
            blowup_config.step_control(), dt_init=1e-2, dt_min=1e-2, dt_max=1e-2, max_rejections=3
        )

        with pytest.raises(SolverFailure, match=r"^step at t = 0\.0 rejected 4 times: density ") as info:
            run_with(blowup_config, grid, initial, control, snapshot_times=[1e-3])

        ex = info.value
        assert ex.state is initial
        assert len(ex.series) == 1
        assert [s.t for s in ex.snapshots] == [0.0, 0.0]

    def test_run_stops_at_t_end(
        self, blowup_config: RunConfig, grid: RadialGrid, initial: State
    ) -> None:
        control = replace(blowup_config.step_control(), t_end=1e-6)

        result = run_with(blowup_config, grid, initial, control, snapshot_times=[5e-7])

        assert result.series.t[-1] == pytest.approx(1e-6, rel=1e-12)
        assert result.snapshot_times[0] == 0.0
        assert result.snapshot_times[-1] == result.series.t[-1]
        assert any(t >= 5e-7 for t in result.snapshot_times[1:])
