# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import argparse
import logging
from pathlib import Path
from typing import Any, Dict

from keller_segel_blowup.cli.artifacts import (
    CONFIG_FILE,
    REPORT_FILE,
    write_json,
    write_snapshots,
    write_timeseries,
)
from keller_segel_blowup.cli.common import (
    ConfigError,
    ExitCode,
    add_config_argument,
    add_out_argument,
    load_config,
    output_dir,
)
from keller_segel_blowup.cli.config import RunConfig
from keller_segel_blowup.diagnostics.report import run_checks
from keller_segel_blowup.solver.initial_data import build_initial_data
from keller_segel_blowup.solver.runner import SolverFailure, run

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s %(levelname)s -- %(name)s: %(message)s",
)

logger = logging.getLogger("simulate")


def simulate(config: RunConfig, out: Path, progress: bool = False) -> Dict[str, Any]:
    """Run ``config`` and write its artifacts to ``out``.

    :raises ConfigError:
        if the parameters, moments or initial data are invalid.
    :raises SolverFailure:
        after writing the partial series, snapshots and report.
    """
    try:
        params = config.model_params()
        sensitivity = config.model.to_sensitivity()
        grid = config.build_grid()
        control = config.step_control()
        moments = config.moment_configs(params)
        envelope_p = config.envelope_p()
        initial = build_initial_data(
            params,
            envelope_p,
            config.initial_data.r1,
            grid,
            config.initial_data.taper_fraction,
            config.initial_data.cap_max,
            sensitivity,
        )
    except ValueError as ex:
        raise ConfigError(str(ex)) from ex

    out.mkdir(parents=True, exist_ok=True)
    config.dump(out.joinpath(CONFIG_FILE))

    try:
        result = run(
            params,
            grid,
            control,
            moments,
            initial,
            envelope_p,
            sensitivity,
            config.snapshots,
            progress,
        )
    except SolverFailure as ex:
        write_timeseries(ex.series, out)
        write_snapshots(ex.snapshots, grid, out)
        write_json(
            {
                "failure": str(ex),
                "t_last": ex.state.t,
                "snapshot_times": [s.t for s in ex.snapshots],
            },
            out.joinpath(REPORT_FILE),
        )
        raise

    write_timeseries(result.series, out)
    write_snapshots(result.snapshots, grid, out)

    diagnostics = run_checks(
        params, grid, result.series, result.snapshots, moments, sensitivity=sensitivity
    )
    document: Dict[str, Any] = {
        "report": result.report.to_dict(),
        "snapshot_times": result.snapshot_times,
        "rejections": result.rejections,
        "diagnostics": {"pass": diagnostics.passed, "failures": diagnostics.failures},
    }
    write_json(document, out.joinpath(REPORT_FILE))
    logger.info(f"Wrote run artifacts to {out}.")
    return document


def add_arguments(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    add_config_argument(parser)
    add_out_argument(parser)
    parser.add_argument(
        "--progress",
        action="store_true",
        help="Show a progress bar over the time steps.",
    )
    return parser


def init_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Simulate one radial Keller-Segel run and write its time series and profiles."
    )
    return add_arguments(parser)


def execute(args: argparse.Namespace) -> int:
    try:
        config = load_config(args.config)
        out = output_dir(config, args.out)
        document = simulate(config, out, args.progress)
    except ConfigError as ex:
        logger.error(f"Invalid config: {ex}")
        return ExitCode.CONFIG
    except SolverFailure as ex:
        logger.error(f"Solver failure: {ex}")
        return ExitCode.SOLVER

    logger.info(f"Verdict: {document['report']['verdict']}.")
    return ExitCode.OK


def main() -> None:
    args = init_parser().parse_args()
    raise SystemExit(execute(args))


if __name__ == "__main__":
    main()
