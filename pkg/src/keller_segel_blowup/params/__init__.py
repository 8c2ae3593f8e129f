# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from keller_segel_blowup.params.bounds import (
    blowup_time_bound as blowup_time_bound,
)
from keller_segel_blowup.params.bounds import eta_lower_bound as eta_lower_bound
from keller_segel_blowup.params.bounds import surface_measure as surface_measure
from keller_segel_blowup.params.conditions import (
    AdmissibilityReport as AdmissibilityReport,
)
from keller_segel_blowup.params.conditions import (
    EmptyIntervalError as EmptyIntervalError,
)
from keller_segel_blowup.params.conditions import (
    InadmissibleParametersError as InadmissibleParametersError,
)
from keller_segel_blowup.params.conditions import MomentConfig as MomentConfig
from keller_segel_blowup.params.conditions import ModelParams as ModelParams
from keller_segel_blowup.params.conditions import ScopeError as ScopeError
from keller_segel_blowup.params.conditions import Supremum as Supremum
from keller_segel_blowup.params.conditions import alpha_of_gamma as alpha_of_gamma
from keller_segel_blowup.params.conditions import (
    check_conditions as check_conditions,
)
from keller_segel_blowup.params.conditions import default_eps0 as default_eps0
from keller_segel_blowup.params.conditions import eps0_max as eps0_max
from keller_segel_blowup.params.conditions import gamma_interval as gamma_interval
from keller_segel_blowup.params.conditions import k_threshold as k_threshold
from keller_segel_blowup.params.conditions import p_of_eps as p_of_eps
from keller_segel_blowup.params.conditions import (
    resolve_moment_config as resolve_moment_config,
)
from keller_segel_blowup.params.conditions import theta1_of as theta1_of
