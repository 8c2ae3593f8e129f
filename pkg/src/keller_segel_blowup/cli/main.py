# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import argparse
from typing import List, Optional

from keller_segel_blowup.cli import check, diagnose, refine, simulate, sweep

COMMANDS = {
    "check": (check, "Check the blow-up conditions of a config."),
    "simulate": (simulate, "Simulate one run."),
    "diagnose": (diagnose, "Evaluate the diagnostic suite on a stored run."),
    "sweep": (sweep, "Sweep the (m, k) plane."),
    "refine": (refine, "Run the refinement studies."),
}


def init_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ks_lab",
        description="Radial Keller-Segel blow-up laboratory.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (module, help_text) in COMMANDS.items():
        module.add_arguments(subparsers.add_parser(name, help=help_text))
    return parser


def execute(argv: Optional[List[str]] = None) -> int:
    args = init_parser().parse_args(argv)
    module, _ = COMMANDS[args.command]
    return int(module.execute(args))


def main() -> None:
    raise SystemExit(execute())


if __name__ == "__main__":
    main()
