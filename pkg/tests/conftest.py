# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from argparse import ArgumentTypeError

import pytest

import tests.common
from keller_segel_blowup.cli.config import RunConfig
from keller_segel_blowup.params.conditions import ModelParams


def parse_cells_arg(value: str) -> int:
    try:
        cells = int(value)
    except ValueError:
        raise ArgumentTypeError(f"'{value}' is not a valid cell count.")
    if cells < 16:
        raise ArgumentTypeError(f"'{value}' is below the minimum of 16 cells.")
    return cells


def pytest_addoption(parser: pytest.Parser) -> None:
    # fmt: off
    parser.addoption(
        "--cells", default=1024, type=parse_cells_arg,
        help="baseline resolution of fixture simulations (default: %(default)s)",
    )
    # fmt: on


def pytest_sessionstart(session: pytest.Session) -> None:
    tests.common.cells = int(session.config.getoption("cells"))


@pytest.fixture(scope="module")
def blowup_config() -> RunConfig:
    return RunConfig.load("blowup")


@pytest.fixture(scope="module")
def bounded_config() -> RunConfig:
    return RunConfig.load("bounded")


@pytest.fixture(scope="module")
def blowup_params() -> ModelParams:
    return ModelParams(N=3, R=1.0, m=1.0, chi0=10.0, a=0.0, k=0.5, M0=50.0, M1=40.0, L=10.0)
