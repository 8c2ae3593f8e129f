# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from keller_segel_blowup.params.conditions import (
    Supremum,
    eps0_max,
    gamma_interval,
    k_threshold,
    m_upper_of,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdmissibleSample:
    N: int
    m: float
    k: float
    eps0: float


def sample_admissible(
    N: int, rng: np.random.Generator, count: int, m1_share: float = 0.2
) -> List[AdmissibleSample]:
    """Draw ``count`` points (m, k, eps0) from the admissible region.

    A share ``m1_share`` of the draws sits exactly on m = 1, where eps0 is
    unbounded and drawn from (0, 10).
    """
    samples = []
    m_upper = m_upper_of(N)
    while len(samples) < count:
        m = 1.0 if rng.random() < m1_share else float(rng.uniform(1.0, m_upper))
        if m >= m_upper:
            continue
        k = float(rng.uniform(0.0, k_threshold(N, m)))
        if k <= 0:
            continue
        bound = eps0_max(N, m, k)
        upper = 10.0 if bound is Supremum.UNBOUNDED else float(bound)
        eps0 = float(rng.uniform(0.0, upper))
        if not 0 < eps0 < upper:
            continue
        samples.append(AdmissibleSample(N=N, m=m, k=k, eps0=eps0))
    return samples


def count_interval_failures(samples: List[AdmissibleSample]) -> int:
    """Number of samples whose gamma interval is empty or leaves (0, 1)."""
    failures = 0
    for sample in samples:
        try:
            lo, hi = gamma_interval(sample.N, sample.m, sample.k, sample.eps0)
        except (ValueError, AssertionError) as ex:
            logger.warning(f"Sample {sample} has no gamma interval: {ex}")
            failures += 1
            continue
        if not 0 < lo < hi <= 1:
            failures += 1
    return failures
