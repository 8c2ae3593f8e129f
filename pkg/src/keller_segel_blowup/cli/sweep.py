# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import argparse
import concurrent.futures as cf
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List

import numpy as np
import pandas as pd
from tqdm import tqdm

from keller_segel_blowup.cli.common import (
    ConfigError,
    ExitCode,
    add_config_argument,
    add_out_argument,
    add_threads_argument,
    load_config,
    output_dir,
)
from keller_segel_blowup.cli.config import RunConfig
from keller_segel_blowup.cli.simulate import simulate
from keller_segel_blowup.params.conditions import is_admissible
from keller_segel_blowup.solver.runner import SolverFailure

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s %(levelname)s -- %(name)s: %(message)s",
)

logger = logging.getLogger("sweep")

PHASE_FILE = "phase.csv"
PHASE_COLUMNS = ["m", "k", "admissible", "verdict", "t_last", "u_max_last", "failure"]


@dataclass(frozen=True)
class SweepCell:
    m: float
    k: float
    run_dir: Path
    config: Dict[str, Any]
    """Base config as a plain mapping, so that cells pickle across processes."""


def cell_config(config: RunConfig, m: float, k: float) -> RunConfig:
    """Copy of ``config`` at (m, k) on the sweep resolution, without moments."""
    cell = RunConfig.from_dict(config.to_dict())
    cell.model.m = m
    cell.model.k = k
    cell.grid.cells = config.sweep.cells
    cell.moments = []
    cell.snapshots = []
    return cell


def sweep_cells(config: RunConfig, out: Path) -> List[SweepCell]:
    sweep = config.sweep
    ms = np.linspace(sweep.m_min, sweep.m_max, sweep.m_count)
    ks = np.linspace(sweep.k_min, sweep.k_max, sweep.k_count)
    base = config.to_dict()
    return [
        SweepCell(
            m=float(m),
            k=float(k),
            run_dir=out.joinpath(f"m{i:02d}_k{j:02d}"),
            config=base,
        )
        for i, m in enumerate(ms)
        for j, k in enumerate(ks)
    ]


def run_cell(cell: SweepCell) -> Dict[str, Any]:
    config = cell_config(RunConfig.from_dict(cell.config), cell.m, cell.k)
    row: Dict[str, Any] = {
        "m": cell.m,
        "k": cell.k,
        "admissible": is_admissible(config.model.N, cell.m, cell.k),
        "verdict": "",
        "t_last": float("nan"),
        "u_max_last": float("nan"),
        "failure": "",
    }
    try:
        document = simulate(config, cell.run_dir)
    except ConfigError as ex:
        row.update(verdict="config_error", failure=str(ex))
    except SolverFailure as ex:
        row.update(
            verdict="solver_failure",
            t_last=ex.state.t,
            u_max_last=ex.state.u_max,
            failure=str(ex),
        )
    else:
        report = document["report"]
        row.update(
            verdict=report["verdict"],
            t_last=report["t_last"],
            u_max_last=report["u_max_last"],
        )
    return row


def run_sweep(config: RunConfig, out: Path, threads: int = 1) -> pd.DataFrame:
    """Run every (m, k) cell and write the phase table in cell order."""
    cells = sweep_cells(config, out)
    logger.info(f"Sweeping {len(cells)} cell(s) on {threads} worker(s).")

    if threads <= 1:
        rows = [run_cell(cell) for cell in tqdm(cells, desc="sweep")]
    else:
        with cf.ProcessPoolExecutor(max_workers=threads) as ex:
            futures = [ex.submit(run_cell, cell) for cell in cells]
            rows = [future.result() for future in tqdm(futures, desc="sweep")]

    frame = pd.DataFrame(rows, columns=PHASE_COLUMNS)
    frame.to_csv(out.joinpath(PHASE_FILE), index=False, float_format="%.17g")
    failed = int((frame["failure"] != "").sum())
    if failed:
        logger.warning(f"{failed} of {len(cells)} cell(s) failed; see `{PHASE_FILE}`.")
    return frame


def add_arguments(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    add_config_argument(parser)
    add_out_argument(parser)
    add_threads_argument(parser)
    return parser


def init_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Sweep the (m, k) plane and tabulate admissibility against the observed verdict."
    )
    return add_arguments(parser)


def execute(args: argparse.Namespace) -> int:
    try:
        config = load_config(args.config)
        if args.threads < 1:
            raise ConfigError(f"`threads` must be at least 1, but is {args.threads} instead.")
        out = output_dir(config, args.out)
    except ConfigError as ex:
        logger.error(f"Invalid config: {ex}")
        return ExitCode.CONFIG

    run_sweep(config, out, args.threads)
    logger.info(f"Wrote {out.joinpath(PHASE_FILE)}.")
    return ExitCode.OK


def main() -> None:
    args = init_parser().parse_args()
    raise SystemExit(execute(args))


if __name__ == "__main__":
    main()
