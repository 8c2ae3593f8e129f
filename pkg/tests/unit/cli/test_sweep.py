# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from pathlib import Path

import pytest

from keller_segel_blowup.cli.config import RunConfig
from keller_segel_blowup.cli.sweep import cell_config, sweep_cells


class TestSweepCells:
    def test_sweep_cells_cover_the_plane(self, blowup_config: RunConfig, tmp_path: Path) -> None:
        cells = sweep_cells(blowup_config, tmp_path)

        assert len(cells) == 16
        assert (cells[0].m, cells[0].k) == (1.0, pytest.approx(0.2))
        assert (cells[-1].m, cells[-1].k) == (pytest.approx(1.3), pytest.approx(0.9))
        assert cells[5].run_dir == tmp_path.joinpath("m01_k01")

    def test_cell_config_leaves_base_untouched(self, blowup_config: RunConfig) -> None:
        cell = cell_config(blowup_config, 1.2, 0.3)

        assert (cell.model.m, cell.model.k) == (1.2, 0.3)
        assert cell.grid.cells == 256
        assert cell.moments == []
        assert cell.snapshots == []
        assert blowup_config.model.m == 1.0
        assert len(blowup_config.moments) == 2
