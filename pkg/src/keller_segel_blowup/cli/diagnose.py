# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import argparse
import logging
from pathlib import Path

from keller_segel_blowup.cli.artifacts import (
    CONFIG_FILE,
    DIAGNOSTICS_FILE,
    REPORT_FILE,
    read_json,
    read_snapshots,
    read_timeseries,
    write_json,
)
from keller_segel_blowup.cli.common import ConfigError, ExitCode
from keller_segel_blowup.cli.config import RunConfig
from keller_segel_blowup.diagnostics.report import DiagnosticReport, run_checks

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s %(levelname)s -- %(name)s: %(message)s",
)

logger = logging.getLogger("diagnose")


def diagnose(run_dir: Path, eta_frac: float = 0.5) -> DiagnosticReport:
    """Run the diagnostic suite over the artifacts of a finished run.

    :raises FileNotFoundError:
        if ``run_dir`` lacks the config, series, report or a snapshot.
    """
    if not run_dir.is_dir():
        raise FileNotFoundError(f"`{run_dir}` is not a run directory.")

    config_path = run_dir.joinpath(CONFIG_FILE)
    if not config_path.exists():
        raise FileNotFoundError(f"`{run_dir}` holds no {CONFIG_FILE}.")
    try:
        config = RunConfig.load(config_path)
        params = config.model_params()
        sensitivity = config.model.to_sensitivity()
        moments = config.moment_configs(params)
    except ValueError as ex:
        raise ConfigError(str(ex)) from ex

    series = read_timeseries(run_dir)
    times = read_json(run_dir.joinpath(REPORT_FILE)).get("snapshot_times", [])
    snapshots = read_snapshots(run_dir, times)

    report = run_checks(
        params,
        config.build_grid(),
        series,
        snapshots,
        moments,
        eta_frac=eta_frac,
        sensitivity=sensitivity,
    )
    write_json(report.to_dict(), run_dir.joinpath(DIAGNOSTICS_FILE))
    logger.info(f"Wrote {run_dir.joinpath(DIAGNOSTICS_FILE)}.")
    return report


def add_arguments(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument(
        "run_dir",
        type=Path,
        help="Directory written by the `simulate` command.",
    )
    parser.add_argument(
        "--eta-frac",
        type=float,
        default=0.5,
        help="Share of s0 kept outside the mass ball of the initial moment bound (default: %(default)s).",
    )
    return parser


def init_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Evaluate the moment identity and inequality checks on a stored run."
    )
    return add_arguments(parser)


def execute(args: argparse.Namespace) -> int:
    try:
        report = diagnose(args.run_dir, args.eta_frac)
    except (FileNotFoundError, ConfigError) as ex:
        logger.error(str(ex))
        return ExitCode.CONFIG
    except ValueError as ex:
        logger.error(f"Unusable run artifacts: {ex}")
        return ExitCode.CONFIG

    if not report.passed:
        logger.error(f"Failed checks: {', '.join(report.failures)}.")
        return ExitCode.DIAGNOSTIC
    logger.info("All checks passed.")
    return ExitCode.OK


def main() -> None:
    args = init_parser().parse_args()
    raise SystemExit(execute(args))


if __name__ == "__main__":
    main()
