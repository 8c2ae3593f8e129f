# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from pathlib import Path

import pytest

from keller_segel_blowup.cli.artifacts import (
    REPORT_FILE,
    TIMESERIES_FILE,
    read_json,
    read_timeseries,
    snapshot_name,
)
from keller_segel_blowup.cli.common import ConfigError
from keller_segel_blowup.cli.config import RunConfig
from keller_segel_blowup.cli.simulate import simulate
from keller_segel_blowup.solver.runner import SolverFailure


class TestSimulate:
    def test_simulate_writes_partial_outputs_on_failure(
        self, blowup_config: RunConfig, tmp_path: Path
    ) -> None:
        config = RunConfig.from_dict(blowup_config.to_dict())
        config.control.dt_init = config.control.dt_min = config.control.dt_max = 1e-2
        config.control.max_rejections = 3

        with pytest.raises(SolverFailure, match=r"^step at t = 0\.0 rejected 4 times"):
            simulate(config, tmp_path)

        report = read_json(tmp_path.joinpath(REPORT_FILE))
        assert report["failure"].startswith("step at t = 0.0 rejected 4 times")
        assert report["t_last"] == 0.0
        assert report["snapshot_times"] == [0.0, 0.0]
        assert tmp_path.joinpath(TIMESERIES_FILE).exists()
        assert len(read_timeseries(tmp_path)) == 1
        for index in range(2):
            assert tmp_path.joinpath(snapshot_name(index)).exists()

    def test_simulate_raises_error_when_config_is_invalid(
        self, blowup_config: RunConfig, tmp_path: Path
    ) -> None:
        config = RunConfig.from_dict(blowup_config.to_dict())
        config.control.dt_init = 1.0

        with pytest.raises(ConfigError, match=r"dt_min <= dt_init <= dt_max"):
            simulate(config, tmp_path)

        assert not tmp_path.joinpath(REPORT_FILE).exists()
