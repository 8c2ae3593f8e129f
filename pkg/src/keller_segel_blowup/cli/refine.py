# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import argparse
import logging
from dataclasses import replace
from pathlib import Path
from typing import List

import pandas as pd

from keller_segel_blowup.cli.common import (
    ConfigError,
    ExitCode,
    add_config_argument,
    add_out_argument,
    load_config,
    output_dir,
)
from keller_segel_blowup.cli.config import RunConfig
from keller_segel_blowup.solver.convergence import (
    ConvergenceLevel,
    elliptic_convergence,
    identity_convergence,
    temporal_convergence,
)
from keller_segel_blowup.solver.grid import RadialGrid
from keller_segel_blowup.solver.initial_data import build_initial_data
from keller_segel_blowup.solver.state import State
from keller_segel_blowup.solver.stepper import RadialSolver

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s %(levelname)s -- %(name)s: %(message)s",
)

logger = logging.getLogger("refine")

CONVERGENCE_FILE = "convergence.csv"
CONVERGENCE_COLUMNS = ["study", "level", "resolution", "error", "order"]


def refine(config: RunConfig, out: Path) -> pd.DataFrame:
    """Run the elliptic, temporal and identity studies of ``config.refine``.

    The identity study is skipped when the config declares no moment.
    """
    settings = config.refine
    try:
        params = config.model_params()
        sensitivity = config.model.to_sensitivity()
        moments = config.moment_configs(params)
        envelope_p = config.envelope_p()
        control = replace(config.step_control(), t_end=settings.horizon)
    except ValueError as ex:
        raise ConfigError(str(ex)) from ex

    def initial_for(grid: RadialGrid) -> State:
        return build_initial_data(
            params,
            envelope_p,
            config.initial_data.r1,
            grid,
            config.initial_data.taper_fraction,
            config.initial_data.cap_max,
            sensitivity,
        )

    levels: List[ConvergenceLevel] = elliptic_convergence(
        settings.elliptic_levels, params.N, params.R
    )

    grid = config.build_grid()
    try:
        initial = initial_for(grid)
    except ValueError as ex:
        raise ConfigError(str(ex)) from ex
    solver = RadialSolver(params, grid, sensitivity)
    levels += temporal_convergence(
        solver, initial, settings.horizon, settings.dt0, settings.temporal_levels
    )

    if moments:
        levels += identity_convergence(
            params,
            control,
            moments[0],
            initial_for,
            settings.identity_levels,
            config.grid.grading,
            envelope_p,
            sensitivity,
        )
    else:
        logger.warning("The config declares no moment; skipping the identity study.")

    frame = pd.DataFrame([level.to_dict() for level in levels], columns=CONVERGENCE_COLUMNS)
    frame.to_csv(out.joinpath(CONVERGENCE_FILE), index=False, float_format="%.17g")
    return frame


def add_arguments(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    add_config_argument(parser)
    add_out_argument(parser)
    return parser


def init_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Measure observed orders of the elliptic solve, the time step and the moment identity."
    )
    return add_arguments(parser)


def execute(args: argparse.Namespace) -> int:
    try:
        config = load_config(args.config)
        out = output_dir(config, args.out)
        frame = refine(config, out)
    except ConfigError as ex:
        logger.error(f"Invalid config: {ex}")
        return ExitCode.CONFIG

    for study, rows in frame.groupby("study", sort=False):
        orders = ", ".join(f"{o:.3f}" for o in rows["order"].dropna())
        logger.info(f"{study}: observed orders [{orders}].")
    logger.info(f"Wrote {out.joinpath(CONVERGENCE_FILE)}.")
    return ExitCode.OK


def main() -> None:
    args = init_parser().parse_args()
    raise SystemExit(execute(args))


if __name__ == "__main__":
    main()
