# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import argparse
import logging
from typing import Any, Dict

import numpy as np

from keller_segel_blowup.cli.artifacts import write_json
from keller_segel_blowup.cli.common import (
    ConfigError,
    ExitCode,
    add_config_argument,
    add_out_argument,
    load_config,
)
from keller_segel_blowup.cli.config import RunConfig
from keller_segel_blowup.params.bounds import eta_lower_bound
from keller_segel_blowup.params.conditions import (
    Supremum,
    check_conditions,
    p_of_eps,
    theta1_of,
)
from keller_segel_blowup.params.sampling import count_interval_failures, sample_admissible
from keller_segel_blowup.solver.sensitivity import power_sensitivity

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s %(levelname)s -- %(name)s: %(message)s",
)

logger = logging.getLogger("check")

SAMPLE_COUNT = 1000


def build_check(config: RunConfig) -> Dict[str, Any]:
    """Admissibility report of ``config`` plus the derived constants."""
    params = config.model_params()
    eps0 = config.initial_data.eps0
    report = check_conditions(params, eps0 if isinstance(eps0, float) else None)

    eta = eta_lower_bound(params.M0, params.N, 2 * params.R)
    document: Dict[str, Any] = {
        "N": params.N,
        "m": params.m,
        "k": params.k,
        "admissible": report.admissible,
        "m_upper": report.m_upper,
        "k_upper": report.k_upper,
        "eps0_max": (
            "unbounded" if report.eps0_max is Supremum.UNBOUNDED else report.eps0_max
        ),
        "eps0": report.eps0,
        "gamma_interval": (
            None if report.gamma_interval is None else list(report.gamma_interval)
        ),
        "envelope_applicable": report.envelope_applicable,
        "eta": eta,
        "chi_sup": power_sensitivity(params).sup_above(eta),
        "messages": report.messages,
    }

    if report.admissible and report.eps0 is not None and report.gamma_interval is not None:
        document["p"] = p_of_eps(params.N, params.m, report.eps0)
        document["theta1"] = theta1_of(params.N, params.m, params.k, report.eps0)
        document["moments"] = [
            {"gamma": c.gamma, "alpha": c.alpha, "s0": c.s0}
            for c in config.moment_configs(params)
        ]

    rng = np.random.default_rng(config.seed)
    samples = sample_admissible(params.N, rng, SAMPLE_COUNT)
    document["sampled_intervals"] = SAMPLE_COUNT
    document["sampled_interval_failures"] = count_interval_failures(samples)
    return document


def format_check(document: Dict[str, Any]) -> str:
    lines = []
    for key, value in document.items():
        if key == "messages":
            lines += [f"  note: {message}" for message in value]
        elif isinstance(value, float):
            lines.append(f"{key:>28}: {value:.12g}")
        else:
            lines.append(f"{key:>28}: {value}")
    return "\n".join(lines)


def add_arguments(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    add_config_argument(parser)
    add_out_argument(parser)
    return parser


def init_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Check the blow-up conditions of a config and print the derived exponents."
    )
    return add_arguments(parser)


def execute(args: argparse.Namespace) -> int:
    try:
        config = load_config(args.config)
        document = build_check(config)
    except (ConfigError, ValueError) as ex:
        logger.error(f"Invalid config: {ex}")
        return ExitCode.CONFIG

    print(format_check(document))
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        write_json(document, args.out.joinpath("check.json"))
        logger.info(f"Wrote {args.out.joinpath('check.json')}.")
    return ExitCode.OK


def main() -> None:
    args = init_parser().parse_args()
    raise SystemExit(execute(args))


if __name__ == "__main__":
    main()
