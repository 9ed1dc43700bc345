# Copyright 2022 isodouble developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional, Tuple

import numpy as np


def to_jsonable(value: Any) -> Any:
    """
    Convert a report payload into plain JSON types.

    numpy scalars and arrays become Python numbers and lists, enums become
    their lower-case names, fractions become floats and anything exposing
    ``to_dict`` is expanded.
    """
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, Enum):
        return value.name.lower()
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating, Fraction)):
        return float(value)
    return value


def dumps(value: Any) -> str:
    """Deterministic JSON text: sorted keys, fixed indentation."""
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2) + "\n"


@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of one numerical check.

    Attributes
    ----------
    check_name : str
        Name of the check.
    passed : bool
        Whether every residual stayed within `tolerance`.
    worst_residual : float
        Largest residual observed.
    tolerance : float
        Acceptance threshold for the residuals.
    samples : int
        Number of evaluated samples (points, pairs, ...).
    seed : int or None
        Master seed of the sampling, ``None`` for deterministic checks.
    details : tuple[dict]
        Per-criterion records; failing records carry the offending point.
    """

    check_name: str
    passed: bool
    worst_residual: float
    tolerance: float
    samples: int
    seed: Optional[int] = None
    details: Tuple[dict, ...] = ()

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "pass": bool(self.passed),
            "worst_residual": float(self.worst_residual),
            "tolerance": float(self.tolerance),
            "samples": int(self.samples),
            "seed": self.seed,
            "details": list(self.details),
        }

    def dumps(self) -> str:
        return dumps(self.to_dict())
