# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import math

import pytest

from keller_segel_blowup.quadrature.heat_kernel import (
    QuadratureError,
    heat_kernel_bessel,
    heat_kernel_integral,
)


class TestHeatKernelIntegral:
    @pytest.mark.parametrize("N", [3, 4, 5, 6, 7, 8])
    @pytest.mark.parametrize("d", [0.5, 1.0, 2.0, 5.0, 10.0])
    def test_integral_matches_bessel_form(self, N: int, d: float) -> None:
        assert heat_kernel_integral(N, d) == pytest.approx(heat_kernel_bessel(N, d), rel=1e-8)

    def test_integral_works_in_three_dimensions(self) -> None:
        d = 2.0
        assert heat_kernel_integral(3, d) == pytest.approx(
            math.exp(-d) / (4 * math.pi * d), rel=1e-10
        )

    def test_integral_decreases_with_distance(self) -> None:
        values = [heat_kernel_integral(4, d) for d in (0.5, 1.0, 2.0, 4.0)]

        assert values == sorted(values, reverse=True)

    def test_integral_raises_error_when_d_is_not_positive(self) -> None:
        with pytest.raises(ValueError, match=r"^`d` must be positive, but is 0\.0 instead\.$"):
            heat_kernel_integral(3, 0.0)

    def test_integral_raises_error_when_target_is_unreachable(self) -> None:
        with pytest.raises(QuadratureError) as info:
            heat_kernel_integral(3, 2.0, tol=1e-300)

        assert info.value.achieved_error > 1e-300
