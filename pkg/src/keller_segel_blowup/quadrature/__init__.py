# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from keller_segel_blowup.quadrature.beta import beta_integral as beta_integral
from keller_segel_blowup.quadrature.double_integral import (
    nested_integral_ratio as nested_integral_ratio,
)
from keller_segel_blowup.quadrature.heat_kernel import (
    QuadratureError as QuadratureError,
)
from keller_segel_blowup.quadrature.heat_kernel import (
    heat_kernel_bessel as heat_kernel_bessel,
)
from keller_segel_blowup.quadrature.heat_kernel import (
    heat_kernel_integral as heat_kernel_integral,
)
from keller_segel_blowup.quadrature.singular import (
    SingularWeightRule as SingularWeightRule,
)
from keller_segel_blowup.quadrature.singular import (
    singular_moment_quad as singular_moment_quad,
)
