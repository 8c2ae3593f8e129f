# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from keller_segel_blowup.solver.blowup import BlowupReport as BlowupReport
from keller_segel_blowup.solver.blowup import Verdict as Verdict
from keller_segel_blowup.solver.blowup import detect_blowup as detect_blowup
from keller_segel_blowup.solver.elliptic import EllipticSystem as EllipticSystem
from keller_segel_blowup.solver.elliptic import solve_elliptic as solve_elliptic
from keller_segel_blowup.solver.grid import RadialGrid as RadialGrid
from keller_segel_blowup.solver.grid import compute_w as compute_w
from keller_segel_blowup.solver.grid import compute_z as compute_z
from keller_segel_blowup.solver.initial_data import (
    InfeasibleInitialDataError as InfeasibleInitialDataError,
)
from keller_segel_blowup.solver.initial_data import InitialProfile as InitialProfile
from keller_segel_blowup.solver.initial_data import (
    build_initial_data as build_initial_data,
)
from keller_segel_blowup.solver.initial_data import initial_profile as initial_profile
from keller_segel_blowup.solver.sensitivity import PowerSensitivity as PowerSensitivity
from keller_segel_blowup.solver.sensitivity import Sensitivity as Sensitivity
from keller_segel_blowup.solver.sensitivity import ZeroSensitivity as ZeroSensitivity
from keller_segel_blowup.solver.sensitivity import (
    power_sensitivity as power_sensitivity,
)
from keller_segel_blowup.solver.series import TimeSeries as TimeSeries
from keller_segel_blowup.solver.state import State as State
from keller_segel_blowup.solver.state import StepControl as StepControl
from keller_segel_blowup.solver.stepper import RadialSolver as RadialSolver
from keller_segel_blowup.solver.stepper import StepRejected as StepRejected
from keller_segel_blowup.solver.stepper import step as step
