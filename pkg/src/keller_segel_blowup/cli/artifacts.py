# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Sequence

import numpy as np
import pandas as pd

from keller_segel_blowup.solver.grid import RadialGrid
from keller_segel_blowup.solver.series import TimeSeries
from keller_segel_blowup.solver.state import State

logger = logging.getLogger(__name__)

TIMESERIES_FILE = "timeseries.csv"
REPORT_FILE = "report.json"
DIAGNOSTICS_FILE = "diagnostics.json"
CONFIG_FILE = "config.yaml"
SNAPSHOT_COLUMNS = ["s", "r", "w", "u", "v", "z"]


def snapshot_name(index: int) -> str:
    return f"snapshot_{index}.csv"


def write_timeseries(series: TimeSeries, run_dir: Path) -> Path:
    path = run_dir.joinpath(TIMESERIES_FILE)
    series.to_frame().to_csv(path, index=False, float_format="%.17g")
    return path


def read_timeseries(run_dir: Path) -> TimeSeries:
    path = run_dir.joinpath(TIMESERIES_FILE)
    if not path.exists():
        raise FileNotFoundError(f"`{run_dir}` holds no {TIMESERIES_FILE}.")
    return TimeSeries.from_frame(pd.read_csv(path))


def snapshot_frame(state: State, grid: RadialGrid) -> pd.DataFrame:
    """Nodal profile; the cell density is written at each cell's left node."""
    u = np.append(state.u, state.u[-1])
    return pd.DataFrame(
        {
            "s": grid.s_nodes,
            "r": grid.r_nodes,
            "w": state.w,
            "u": u,
            "v": state.v,
            "z": state.z,
        },
        columns=SNAPSHOT_COLUMNS,
    )


def write_snapshots(states: Sequence[State], grid: RadialGrid, run_dir: Path) -> List[Path]:
    paths = []
    for index, state in enumerate(states):
        path = run_dir.joinpath(snapshot_name(index))
        snapshot_frame(state, grid).to_csv(path, index=False, float_format="%.17g")
        paths.append(path)
    logger.info(f"Wrote {len(paths)} snapshot(s) to {run_dir}.")
    return paths


def read_snapshot(path: Path, t: float) -> State:
    frame = pd.read_csv(path)
    if list(frame.columns) != SNAPSHOT_COLUMNS:
        raise ValueError(
            f"`{path}` must have the columns {SNAPSHOT_COLUMNS}, but has {list(frame.columns)}."
        )
    return State(
        t=t,
        w=frame["w"].to_numpy(dtype=np.float64),
        u=frame["u"].to_numpy(dtype=np.float64)[:-1],
        v=frame["v"].to_numpy(dtype=np.float64),
        z=frame["z"].to_numpy(dtype=np.float64),
    )


def read_snapshots(run_dir: Path, times: Sequence[float]) -> List[State]:
    return [read_snapshot(run_dir.joinpath(snapshot_name(i)), t) for i, t in enumerate(times)]


def write_json(document: Dict[str, Any], path: Path) -> None:
    path.write_text(json.dumps(document, indent=1) + "\n")


def read_json(path: Path) -> Dict[str, Any]:
    if not path.exists():
        raise FileNotFoundError(f"`{path}` does not exist.")
    document: Dict[str, Any] = json.loads(path.read_text())
    return document
