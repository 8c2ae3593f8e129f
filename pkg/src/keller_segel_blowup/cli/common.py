# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import argparse
import logging
from enum import IntEnum
from pathlib import Path
from typing import Optional

from keller_segel_blowup.cli.config import RunConfig

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    CONFIG = 1
    SOLVER = 2
    DIAGNOSTIC = 3


class ConfigError(Exception):
    """Raised for unreadable configs or parameters outside the model's scope."""


def add_config_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--config",
        type=str,
        default="blowup",
        help="Config file or packaged card name (default: %(default)s).",
    )


def add_out_argument(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument(
        "--out",
        type=Path,
        default=None,
        required=required,
        help="Output directory (default: `output` of the config).",
    )


def add_threads_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        help="Worker processes for independent runs (default: %(default)s).",
    )


def load_config(name_or_path: str) -> RunConfig:
    try:
        config = RunConfig.load(name_or_path)
        config.model_params()
    except (OSError, ValueError) as ex:
        raise ConfigError(str(ex)) from ex
    return config


def output_dir(config: RunConfig, out: Optional[Path]) -> Path:
    path = Path(config.output) if out is None else out
    path.mkdir(parents=True, exist_ok=True)
    return path
