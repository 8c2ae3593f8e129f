# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import math

import numpy as np
import pytest
from scipy.integrate import quad

from keller_segel_blowup.params.bounds import (
    blowup_time_bound,
    eta_lower_bound,
    surface_measure,
)
from keller_segel_blowup.params.sampling import count_interval_failures, sample_admissible


class TestSurfaceMeasure:
    def test_surface_measure_works(self) -> None:
        assert surface_measure(2) == pytest.approx(2 * math.pi)
        assert surface_measure(3) == pytest.approx(4 * math.pi)
        assert surface_measure(4) == pytest.approx(2 * math.pi**2)


class TestEtaLowerBound:
    def test_eta_works_in_three_dimensions(self) -> None:
        # the kernel integral is exp(-d) / (4 pi d) for N = 3
        eta = eta_lower_bound(50.0, 3, 2.0)

        assert eta == pytest.approx(50.0 * math.exp(-2.0) / (8 * math.pi), rel=1e-10)

    def test_eta_is_linear_in_mass(self) -> None:
        assert eta_lower_bound(20.0, 5, 1.0) == pytest.approx(
            2 * eta_lower_bound(10.0, 5, 1.0), rel=1e-14
        )

    def test_eta_raises_error_when_mass_is_not_positive(self) -> None:
        with pytest.raises(ValueError, match=r"^`M0` must be positive, but is 0\.0 instead\.$"):
            eta_lower_bound(0.0, 3, 2.0)


class TestBlowupTimeBound:
    def test_bound_works_without_decay(self) -> None:
        assert blowup_time_bound(1.0, 1.0, 0.0) == pytest.approx(1.0)
        assert blowup_time_bound(4.0, 0.5, 0.0) == pytest.approx(0.5)

    def test_bound_works_with_decay(self) -> None:
        assert blowup_time_bound(2.0, 1.0, 1.0) == pytest.approx(math.log(3) / 2, rel=1e-14)

    def test_bound_is_none_below_equilibrium(self) -> None:
        assert blowup_time_bound(1.0, 1.0, 1.0) is None
        assert blowup_time_bound(0.5, 1.0, 4.0) is None

    def test_bound_matches_quadrature_on_random_instances(self) -> None:
        rng = np.random.default_rng(0)
        for _ in range(100):
            C1 = float(rng.uniform(0.1, 10.0))
            C2 = float(rng.uniform(0.0, 10.0))
            phi0 = math.sqrt(C2 / C1) * float(rng.uniform(1.1, 5.0)) + 1e-3

            expected, _ = quad(
                lambda y: 1 / (C1 * y * y - C2), phi0, np.inf, epsabs=0.0, epsrel=1e-10
            )

            assert blowup_time_bound(phi0, C1, C2) == pytest.approx(expected, rel=1e-6)

    def test_bound_raises_error_when_C1_is_not_positive(self) -> None:
        with pytest.raises(ValueError, match=r"^`C1` must be positive, but is 0\.0 instead\.$"):
            blowup_time_bound(1.0, 0.0, 1.0)


class TestSampling:
    def test_sample_admissible_works(self) -> None:
        rng = np.random.default_rng(3)
        samples = sample_admissible(3, rng, 200)

        assert len(samples) == 200
        assert any(s.m == 1.0 for s in samples)
        assert all(1.0 <= s.m < 4 / 3 and s.k > 0 and s.eps0 > 0 for s in samples)

    def test_sampled_gamma_intervals_are_nonempty(self) -> None:
        for N in (3, 4, 6):
            samples = sample_admissible(N, np.random.default_rng(N), 1000)
            assert len(samples) == 1000
            assert count_interval_failures(samples) == 0

    def test_sample_admissible_is_reproducible(self) -> None:
        first = sample_admissible(4, np.random.default_rng(11), 50)
        second = sample_admissible(4, np.random.default_rng(11), 50)

        assert first == second
