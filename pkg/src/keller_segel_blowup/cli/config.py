# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

import logging
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Type, TypeVar, Union

import yaml

from keller_segel_blowup.params.conditions import (
    ModelParams,
    MomentConfig,
    default_eps0,
    is_admissible,
    p_of_eps,
    resolve_moment_config,
)
from keller_segel_blowup.solver.grid import RadialGrid
from keller_segel_blowup.solver.sensitivity import (
    Sensitivity,
    ZeroSensitivity,
    power_sensitivity,
)
from keller_segel_blowup.solver.state import StepControl
from keller_segel_blowup.store import resolve_card

logger = logging.getLogger(__name__)

AUTO = "auto"

SectionT = TypeVar("SectionT")


def _coerce(value: Any, kind: Any, name: str) -> Any:
    if value is None:
        return None
    if kind is float or kind == Optional[float]:
        return float(value)
    if kind is int:
        if isinstance(value, float) and not value.is_integer():
            raise ValueError(f"`{name}` must be an integer, but is {value} instead.")
        return int(value)
    return value


def _section_from_dict(cls: Type[SectionT], data: Optional[Mapping[str, Any]], section: str) -> SectionT:
    data = {} if data is None else dict(data)
    known = {f.name: f for f in fields(cls)}  # type: ignore[arg-type]
    unknown = sorted(set(data) - set(known))
    if unknown:
        raise ValueError(
            f"`{section}` has unknown key(s) {unknown}; valid keys are {sorted(known)}."
        )
    kwargs = {name: _coerce(value, known[name].type, f"{section}.{name}") for name, value in data.items()}
    return cls(**kwargs)


@dataclass
class ModelSection:
    N: int = 3
    """Space dimension."""

    R: float = 1.0
    """Radius of the ball."""

    m: float = 1.0
    """Diffusion exponent."""

    chi0: float = 10.0
    a: float = 0.0
    k: float = 0.5
    M0: float = 50.0
    """Total mass."""

    M1: float = 40.0
    """Mass placed inside B_r1."""

    L: float = 10.0
    """Amplitude of the decay envelope L r^-p."""

    sensitivity: str = "power"
    """Either "power" (chi0 (a + v)^-k) or "zero" (no chemotaxis)."""

    def to_params(self) -> ModelParams:
        return ModelParams(
            N=self.N,
            R=self.R,
            m=self.m,
            chi0=self.chi0,
            a=self.a,
            k=self.k,
            M0=self.M0,
            M1=self.M1,
            L=self.L,
        )

    def to_sensitivity(self) -> Sensitivity:
        if self.sensitivity == "power":
            return power_sensitivity(self.to_params())
        if self.sensitivity == "zero":
            return ZeroSensitivity()
        raise ValueError(
            f"`model.sensitivity` must be 'power' or 'zero', but is '{self.sensitivity}' instead."
        )


@dataclass
class InitialDataSection:
    r1: float = 0.1
    """Radius of the inner ball that receives M1."""

    eps0: Union[str, float] = AUTO
    """Excess decay exponent, "auto" for the default of the admissibility report."""

    taper_fraction: float = 0.1
    cap_max: Optional[float] = None


@dataclass
class GridSection:
    cells: int = 1024
    grading: float = 2.0
    """s_j = R^N (j / J)^grading; grading = N is uniform in r."""


@dataclass
class ControlSection:
    dt_init: float = 1e-7
    dt_min: float = 1e-8
    dt_max: float = 1e-3
    cfl_safety: float = 0.5
    c_growth: float = 0.01
    U_blow: float = 1.0e6
    max_steps: int = 200_000
    t_end: float = 0.05
    bounded_factor: float = 10.0
    max_rejections: int = 30
    tol_neg_rel: float = 1e-12
    log_steps: int = 1000

    def to_control(self) -> StepControl:
        return StepControl(**asdict(self))


@dataclass
class MomentSection:
    gamma: Union[str, float] = AUTO
    """Moment exponent, "auto" for the midpoint of the admissible interval."""

    s0_fraction: float = 0.5
    """s0 as a fraction of R^N."""


@dataclass
class SweepSection:
    m_min: float = 1.0
    m_max: float = 1.3
    m_count: int = 4
    k_min: float = 0.2
    k_max: float = 0.9
    k_count: int = 4
    cells: int = 256
    """Grid resolution of every sweep cell."""


@dataclass
class RefineSection:
    elliptic_levels: List[int] = field(default_factory=lambda: [64, 128, 256, 512])
    identity_levels: List[int] = field(default_factory=lambda: [1024, 2048, 4096])
    dt0: float = 1e-5
    """Coarsest fixed step of the temporal study."""

    temporal_levels: int = 4
    horizon: float = 1e-4
    """Length of the smooth window used by the temporal and identity studies."""


def _parse_gamma(value: Any, name: str) -> Union[str, float]:
    if isinstance(value, str):
        if value != AUTO:
            raise ValueError(f"`{name}` must be a number or '{AUTO}', but is '{value}' instead.")
        return value
    return float(value)


@dataclass
class RunConfig:
    model: ModelSection = field(default_factory=ModelSection)
    initial_data: InitialDataSection = field(default_factory=InitialDataSection)
    grid: GridSection = field(default_factory=GridSection)
    control: ControlSection = field(default_factory=ControlSection)
    moments: List[MomentSection] = field(default_factory=list)
    snapshots: List[float] = field(default_factory=list)
    """Times at which profiles are written, besides the initial and final ones."""

    sweep: SweepSection = field(default_factory=SweepSection)
    refine: RefineSection = field(default_factory=RefineSection)
    output: str = "runs/default"
    """Default output directory, overridden by ``--out``."""

    seed: int = 0
    """Seed of the randomized admissibility sample."""

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"config has unknown section(s) {unknown}; valid are {sorted(known)}.")

        moments = []
        for i, entry in enumerate(data.get("moments") or []):
            moment = _section_from_dict(MomentSection, entry, f"moments[{i}]")
            moment.gamma = _parse_gamma(moment.gamma, f"moments[{i}].gamma")
            moments.append(moment)

        initial = _section_from_dict(InitialDataSection, data.get("initial_data"), "initial_data")
        initial.eps0 = _parse_gamma(initial.eps0, "initial_data.eps0")

        refine = _section_from_dict(RefineSection, data.get("refine"), "refine")
        refine.elliptic_levels = [int(c) for c in refine.elliptic_levels]
        refine.identity_levels = [int(c) for c in refine.identity_levels]

        return cls(
            model=_section_from_dict(ModelSection, data.get("model"), "model"),
            initial_data=initial,
            grid=_section_from_dict(GridSection, data.get("grid"), "grid"),
            control=_section_from_dict(ControlSection, data.get("control"), "control"),
            moments=moments,
            snapshots=[float(t) for t in data.get("snapshots") or []],
            sweep=_section_from_dict(SweepSection, data.get("sweep"), "sweep"),
            refine=refine,
            output=str(data.get("output", cls.output)),
            seed=int(data.get("seed", cls.seed)),
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def load(cls, name_or_path: Union[str, Path]) -> "RunConfig":
        path = resolve_card(name_or_path)
        with path.open() as fp:
            data = yaml.safe_load(fp) or {}
        if not isinstance(data, dict):
            raise ValueError(f"`{path}` must hold a mapping of sections.")
        logger.info(f"Loaded config {path}.")
        return cls.from_dict(data)

    def dump(self, path: Path) -> None:
        with path.open("w") as fp:
            yaml.safe_dump(self.to_dict(), fp, sort_keys=False)

    def model_params(self) -> ModelParams:
        return self.model.to_params()

    def build_grid(self, cells: Optional[int] = None) -> RadialGrid:
        return RadialGrid.graded(
            self.model.N,
            self.model.R,
            self.grid.cells if cells is None else cells,
            self.grid.grading,
        )

    def step_control(self) -> StepControl:
        return self.control.to_control()

    def resolve_eps0(self) -> float:
        """eps0 of the config; "auto" is the admissible default, or 1 outside the region."""
        if isinstance(self.initial_data.eps0, float):
            return self.initial_data.eps0
        N, m, k = self.model.N, self.model.m, self.model.k
        return default_eps0(N, m, k) if is_admissible(N, m, k) else 1.0

    def envelope_p(self) -> float:
        return p_of_eps(self.model.N, self.model.m, self.resolve_eps0())

    def moment_configs(self, params: Optional[ModelParams] = None) -> List[MomentConfig]:
        params = self.model_params() if params is None else params
        eps0 = self.resolve_eps0()
        return [
            resolve_moment_config(
                params,
                gamma=None if moment.gamma == AUTO else float(moment.gamma),
                s0_fraction=moment.s0_fraction,
                eps0=eps0,
            )
            for moment in self.moments
        ]
