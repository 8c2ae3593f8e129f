# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np
import pandas as pd

from keller_segel_blowup.typing import FloatArray

BASE_COLUMNS = ("t", "dt", "u_max", "mass_u", "mass_v", "v_min")
ENVELOPE_COLUMNS = ("K_emp", "Cv_emp", "flux_max")
MOMENT_FIELDS = ("phi", "I1", "I2", "I3")


def moment_columns(index: int) -> List[str]:
    return [f"{name}_{index}" for name in MOMENT_FIELDS]


@dataclass
class TimeSeries:
    """Per-step records of a run; the first row is the initial state with dt = 0."""

    moment_count: int = 0
    records: List[Dict[str, float]] = field(default_factory=list)

    @property
    def columns(self) -> List[str]:
        names = list(BASE_COLUMNS)
        for i in range(self.moment_count):
            names += moment_columns(i)
        return names + list(ENVELOPE_COLUMNS)

    def append(self, record: Dict[str, float]) -> None:
        missing = set(self.columns) - set(record)
        if missing:
            raise ValueError(f"`record` must contain {sorted(missing)}.")
        if self.records and not record["t"] > self.records[-1]["t"]:
            raise ValueError(
                f"`t` must increase, but {record['t']} follows {self.records[-1]['t']}."
            )
        self.records.append({name: float(record[name]) for name in self.columns})

    def __len__(self) -> int:
        return len(self.records)

    def column(self, name: str) -> FloatArray:
        if name not in self.columns:
            raise KeyError(f"`name` must be one of {self.columns}, but is '{name}' instead.")
        return np.array([r[name] for r in self.records], dtype=np.float64)

    @property
    def t(self) -> FloatArray:
        return self.column("t")

    @property
    def dt(self) -> FloatArray:
        return self.column("dt")

    @property
    def u_max(self) -> FloatArray:
        return self.column("u_max")

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.records, columns=self.columns)

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "TimeSeries":
        count = 0
        while f"phi_{count}" in frame.columns:
            count += 1
        series = cls(moment_count=count)
        for record in frame.to_dict(orient="records"):
            series.append(record)
        return series
