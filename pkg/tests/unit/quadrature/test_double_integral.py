# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import pytest

from keller_segel_blowup.quadrature.double_integral import (
    nested_integral,
    nested_integral_ratio,
)


class TestNestedIntegral:
    def test_nested_integral_works_without_endpoint_weight(self) -> None:
        a, s0, s = 1.5, 1.0, 0.3

        expected = (s ** (2 - a) / (2 - a) - s * s0 ** (1 - a)) / (a - 1)

        assert nested_integral(s, a, 0.0, s0) == pytest.approx(expected, rel=1e-10)

    def test_nested_integral_scales_near_origin(self) -> None:
        a, b, s0, s = 1.5, 0.5, 1.0, 1e-6

        ratio = nested_integral(s, a, b, s0) / (s0 ** (-b) * s ** (2 - a))

        assert ratio == pytest.approx(1 / (2 - a) + 1 / (a - 1), rel=1e-3)

    def test_nested_integral_raises_error_when_s_is_outside_range(self) -> None:
        with pytest.raises(ValueError, match=r"^`s` must lie in \(0, 1\.0\), but is 1\.0 instead\.$"):
            nested_integral(1.0, 1.5, 0.5, 1.0)


class TestNestedIntegralRatio:
    def test_ratio_is_finite_and_stable_under_refinement(self) -> None:
        coarse = nested_integral_ratio(1.5, 0.5, 1.0, samples=64)
        fine = nested_integral_ratio(1.5, 0.5, 1.0, samples=128)

        assert 4.0 * (1 - 1e-3) <= fine < 1e3
        assert abs(fine - coarse) / fine <= 0.05

    def test_ratio_raises_error_when_a_is_outside_window(self) -> None:
        with pytest.raises(ValueError, match=r"^`a` must lie in \(1, 2\) for a convergent outer integral, but is 2\.0 instead\.$"):
            nested_integral_ratio(2.0, 0.5, 1.0)

    def test_ratio_raises_error_when_b_is_not_below_1(self) -> None:
        with pytest.raises(ValueError, match=r"^`b` must lie in \[0, 1\)"):
            nested_integral_ratio(1.5, 1.0, 1.0)
