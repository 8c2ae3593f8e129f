# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from keller_segel_blowup.diagnostics.checks import (
    BoundNotApplicableError as BoundNotApplicableError,
)
from keller_segel_blowup.diagnostics.checks import CheckResult as CheckResult
from keller_segel_blowup.diagnostics.checks import (
    InsufficientSamplesError as InsufficientSamplesError,
)
from keller_segel_blowup.diagnostics.checks import check_I2_lower as check_I2_lower
from keller_segel_blowup.diagnostics.checks import check_identity as check_identity
from keller_segel_blowup.diagnostics.checks import (
    check_initial_moment as check_initial_moment,
)
from keller_segel_blowup.diagnostics.checks import check_phi_upper as check_phi_upper
from keller_segel_blowup.diagnostics.checks import (
    check_pointwise_bound as check_pointwise_bound,
)
from keller_segel_blowup.diagnostics.checks import phi_upper_bound as phi_upper_bound
from keller_segel_blowup.diagnostics.envelopes import EnvelopeTrace as EnvelopeTrace
from keller_segel_blowup.diagnostics.envelopes import (
    empirical_envelopes as empirical_envelopes,
)
from keller_segel_blowup.diagnostics.moments import MomentSampler as MomentSampler
from keller_segel_blowup.diagnostics.moments import MomentSample as MomentSample
from keller_segel_blowup.diagnostics.moments import ddt_phi_terms as ddt_phi_terms
from keller_segel_blowup.diagnostics.moments import dphi_fd as dphi_fd
from keller_segel_blowup.diagnostics.moments import phi_moment as phi_moment
from keller_segel_blowup.diagnostics.odi import OdiFit as OdiFit
from keller_segel_blowup.diagnostics.odi import odi_fit as odi_fit
from keller_segel_blowup.diagnostics.report import DiagnosticReport as DiagnosticReport
from keller_segel_blowup.diagnostics.report import run_checks as run_checks
