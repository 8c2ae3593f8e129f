# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from pathlib import Path

import pytest

from keller_segel_blowup.cli.check import SAMPLE_COUNT, build_check, format_check
from keller_segel_blowup.cli.config import RunConfig
from keller_segel_blowup.cli.main import init_parser


class TestBuildCheck:
    def test_check_of_blowup_card_works(self, blowup_config: RunConfig) -> None:
        document = build_check(blowup_config)

        assert document["admissible"]
        assert document["k_upper"] == pytest.approx(1.0)
        assert document["eps0_max"] == "unbounded"
        assert document["p"] == pytest.approx(7.0)

        lo, hi = document["gamma_interval"]
        assert 0 < lo < 0.45 < hi < 1
        assert [m["gamma"] for m in document["moments"]][0] == 0.45
        assert document["sampled_intervals"] == SAMPLE_COUNT
        assert document["sampled_interval_failures"] == 0

    def test_check_of_bounded_card_works(self, bounded_config: RunConfig) -> None:
        document = build_check(bounded_config)

        assert not document["admissible"]
        assert "p" not in document
        assert document["messages"]

    def test_format_check_lists_every_key(self, blowup_config: RunConfig) -> None:
        document = build_check(blowup_config)

        text = format_check(document)

        for key in document:
            if key != "messages":
                assert key in text


class TestMainParser:
    def test_parser_dispatches_subcommands(self) -> None:
        args = init_parser().parse_args(["sweep", "--config", "bounded", "--threads", "2", "--out", "x"])

        assert args.command == "sweep"
        assert args.config == "bounded"
        assert args.threads == 2
        assert args.out == Path("x")

    def test_parser_raises_error_without_subcommand(self) -> None:
        with pytest.raises(SystemExit):
            init_parser().parse_args([])
