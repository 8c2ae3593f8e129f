# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import math
from typing import Any, List, Sequence, Union

import numpy as np
from numpy.typing import ArrayLike

# The baseline resolution of fixture simulations. Note that pytest can change
# it based on the provided command line arguments.
cells = 1024


def assert_close(
    a: ArrayLike,
    b: Union[ArrayLike, List[Any]],
    rtol: float = 1e-7,
    atol: float = 0.0,
) -> None:
    """Assert that ``a`` and ``b`` are element-wise equal within a tolerance."""
    np.testing.assert_allclose(a, b, rtol=rtol, atol=atol)


def assert_equal(a: ArrayLike, b: Union[ArrayLike, List[Any]]) -> None:
    """Assert that ``a`` and ``b`` are element-wise equal."""
    np.testing.assert_array_equal(a, b)


def observed_order(errors: Sequence[float]) -> float:
    """Smallest log2 ratio of successive errors over halving resolutions."""
    return min(math.log2(c / f) for c, f in zip(errors[:-1], errors[1:]))
