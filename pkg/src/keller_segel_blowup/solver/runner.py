# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from tqdm import tqdm

from keller_segel_blowup.diagnostics.envelopes import empirical_envelopes
from keller_segel_blowup.diagnostics.moments import MomentSampler
from keller_segel_blowup.params.conditions import ModelParams, MomentConfig
from keller_segel_blowup.solver.blowup import BlowupReport, Verdict, detect_blowup
from keller_segel_blowup.solver.grid import RadialGrid, radial_mass
from keller_segel_blowup.solver.sensitivity import Sensitivity
from keller_segel_blowup.solver.series import TimeSeries, moment_columns
from keller_segel_blowup.solver.state import State, StepControl
from keller_segel_blowup.solver.stepper import RadialSolver, StepRejected

logger = logging.getLogger(__name__)


class SolverFailure(RuntimeError):
    """Raised when a step keeps being rejected; carries what the run produced so far."""

    def __init__(
        self,
        message: str,
        state: State,
        series: TimeSeries,
        snapshots: List[State],
    ):
        super().__init__(message)
        self.state = state
        self.series = series
        self.snapshots = snapshots


@dataclass
class RunResult:
    series: TimeSeries
    report: BlowupReport
    snapshots: List[State]
    """Initial state, the first states at or past each snapshot time, final state."""

    rejections: int = 0
    snapshot_times: List[float] = field(default_factory=list)

    @property
    def final_state(self) -> State:
        return self.snapshots[-1]


class _Recorder:
    def __init__(
        self,
        solver: RadialSolver,
        samplers: List[MomentSampler],
        envelope_p: float,
    ) -> None:
        self.solver = solver
        self.samplers = samplers
        self.envelope_p = envelope_p
        self.series = TimeSeries(moment_count=len(samplers))

    def __call__(self, state: State, dt: float) -> None:
        grid = self.solver.grid
        record: Dict[str, float] = {
            "t": state.t,
            "dt": dt,
            "u_max": state.u_max,
            "mass_u": radial_mass(state.u, grid),
            "mass_v": self.solver.elliptic.mass_v(state.v),
            "v_min": state.v_min,
        }
        for i, sampler in enumerate(self.samplers):
            sample = sampler.sample(state)
            values = (sample.phi, sample.I1, sample.I2, sample.I3)
            record.update(zip(moment_columns(i), values))

        trace = empirical_envelopes(state, grid, self.envelope_p, self.solver.elliptic)
        record["K_emp"] = trace.K_emp
        record["Cv_emp"] = trace.Cv_emp
        record["flux_max"] = trace.flux_max
        self.series.append(record)


def run(
    params: ModelParams,
    grid: RadialGrid,
    control: StepControl,
    moment_configs: Sequence[MomentConfig],
    initial: State,
    envelope_p: float,
    sensitivity: Optional[Sensitivity] = None,
    snapshot_times: Sequence[float] = (),
    progress: bool = False,
) -> RunResult:
    """Advance ``initial`` until t_end, max_steps or a blow-up verdict.

    :raises SolverFailure:
        if a step is still rejected after ``control.max_rejections`` halvings.
    """
    solver = RadialSolver(params, grid, sensitivity)
    samplers = [
        MomentSampler(grid, params, config.gamma, config.s0, solver.sensitivity)
        for config in moment_configs
    ]
    record = _Recorder(solver, samplers, envelope_p)

    state = initial
    record(state, 0.0)
    snapshots = [state]
    pending = sorted(t for t in snapshot_times if t > initial.t)

    logger.info(
        f"Running N = {params.N}, m = {params.m}, k = {params.k} on {grid.cells} cells "
        f"up to t = {control.t_end:g}."
    )

    dt = control.dt_init
    rejections = 0
    with tqdm(total=control.max_steps, disable=not progress, unit="step") as bar:
        for n in range(control.max_steps):
            if state.t >= control.t_end * (1 - 1e-12):
                break
            dt = min(dt, control.t_end - state.t)

            attempts = 0
            while True:
                try:
                    new_state = solver.step(
                        state, dt, tol_neg=control.tol_neg_rel * params.M0
                    )
                    break
                except StepRejected as ex:
                    attempts += 1
                    rejections += 1
                    if attempts > control.max_rejections:
                        raise SolverFailure(
                            f"step at t = {state.t} rejected {attempts} times: {ex}",
                            state,
                            record.series,
                            snapshots + [state],
                        ) from ex
                    logger.warning(f"{ex} Retrying with dt = {dt / 2:.3e}.")
                    dt /= 2

            state = new_state
            record(state, dt)
            bar.update(1)

            while pending and state.t >= pending[0]:
                snapshots.append(state)
                pending.pop(0)

            if (n + 1) % control.log_steps == 0:
                logger.debug(
                    f"Step {n + 1}: t = {state.t:.6e}, dt = {dt:.3e}, u_max = {state.u_max:.6g}."
                )

            if state.u_max >= control.U_blow:
                if detect_blowup(record.series, control).verdict is Verdict.BLOWUP:
                    break

            growth = control.c_growth / (1 + state.u_max)
            dt = control.clamp(control.cfl_safety * min(solver.stable_dt(state), growth))

    if snapshots[-1] is not state:
        snapshots.append(state)

    report = detect_blowup(record.series, control)
    logger.info(
        f"Run finished at t = {report.t_last:.6g} with u_max = {report.u_max_last:.6g}: "
        f"{report.verdict.value}."
    )
    if rejections:
        logger.info(f"{rejections} step(s) rejected during the run.")
    return RunResult(
        series=record.series,
        report=report,
        snapshots=snapshots,
        rejections=rejections,
        snapshot_times=[s.t for s in snapshots],
    )
