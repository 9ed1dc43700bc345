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

import logging
from dataclasses import dataclass
from typing import Any, Tuple

import numpy as np

from isodouble.config import POSITIVITY_TOL
from isodouble.doubling.formulas import (
    H_mean,
    a_defect,
    admissible_r,
    f_of_r,
    scalar_curvature,
)
from isodouble.runtime import runtime
from isodouble.utils import split_intervals

__all__ = ("PositivityCertificate", "certify")

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PositivityCertificate:
    """
    Sampled lower bound for the scalar curvature of a bent neck.

    Attributes
    ----------
    family : IsoparametricFamily
    curve : BendingCurve
    min_R : float
        Smallest sampled scalar curvature (``nan`` if no sample lies in
        the window of regular leaves).
    argmin : dict
        ``s, r, theta, k`` of the minimizing sample.
    lower_bound_used : float
        Reported bound: 0 when ``(m+, m-) = (1, 1)``,
        otherwise the smallest sampled value of
        ``(n-g-1)(n-1) + a sin^2 theta + 2 k H sin theta``.
    passed : bool
    samples : int
    case : str
        ``"A"`` for ``(m+, m-) = (1, 1)``, ``"B"`` otherwise.
    unconstrained_bound : int
        ``(n-g-1)(n-1)``.
    outside_window : int
        Samples whose ``r`` is not covered by a regular leaf.
    zero_set : tuple
        Arclength intervals where ``|R|`` stays within the tolerance.
    tolerance : float
    """

    family: Any
    curve: Any
    min_R: float
    argmin: dict
    lower_bound_used: float
    passed: bool
    samples: int
    case: str
    unconstrained_bound: int
    outside_window: int
    zero_set: Tuple[Tuple[float, float], ...]
    tolerance: float

    def to_dict(self):
        return {
            "family": self.family.to_dict(),
            "curve": self.curve.to_dict(),
            "min_R": self.min_R,
            "argmin": self.argmin,
            "lower_bound_used": self.lower_bound_used,
            "pass": self.passed,
            "samples": self.samples,
            "case": self.case,
            "unconstrained_bound": self.unconstrained_bound,
            "outside_window": self.outside_window,
            "zero_set": [list(interval) for interval in self.zero_set],
            "tolerance": self.tolerance,
        }


def certify(curve, family, tol=None):
    """
    Sample the scalar curvature of the neck over `curve` for `family`.

    Parameters
    ----------
    curve : BendingCurve
    family : IsoparametricFamily
    tol : float, optional
        Allowed negativity in case A and required margin in case B,
        ``1e-9`` by default.

    Returns
    -------
    out : PositivityCertificate
        ``passed`` holds when every sample lies over a regular leaf and
        ``min_R >= -tol``; for ``(m+, m-) != (1, 1)`` the curvature must be
        strictly positive, ``min_R > tol``. The lower bound is reported
        alongside and does not enter the decision.
    """
    tol = runtime.tolerance(POSITIVITY_TOL) if tol is None else tol
    s, r, _, theta, k = curve.samples.T
    lo, hi = admissible_r(family)
    inside = (r > lo) & (r < hi)
    outside = int(np.count_nonzero(~inside))
    n, g = family.n, family.g
    unconstrained = (n - g - 1) * (n - 1)
    case = "A" if family.case_a else "B"

    if not inside.any():
        logger.debug("no sample of the curve lies over a regular leaf")
        return PositivityCertificate(
            family,
            curve,
            float("nan"),
            {},
            float("nan"),
            False,
            len(s),
            case,
            unconstrained,
            outside,
            (),
            tol,
        )

    s, r, theta, k = s[inside], r[inside], theta[inside], k[inside]
    f = f_of_r(family, r)
    R = np.atleast_1d(scalar_curvature(family, f, theta, k))
    idx = int(np.argmin(R))
    min_R = float(R[idx])
    if family.case_a:
        lower = 0.0
    else:
        sin = np.sin(theta)
        bound = (
            unconstrained
            + a_defect(family, f) * sin * sin
            + 2 * k * H_mean(family, f) * sin
        )
        lower = float(np.min(bound))
    if family.case_a:
        passed = outside == 0 and min_R >= -tol
    else:
        passed = outside == 0 and min_R > tol
    zero_set = tuple(
        tuple(interval) for interval in split_intervals(np.abs(R) <= tol, s)
    )
    logger.debug(
        "certified %d samples: min R = %.6g at s = %.6g", len(R), min_R, s[idx]
    )
    return PositivityCertificate(
        family,
        curve,
        min_R,
        {
            "s": float(s[idx]),
            "r": float(r[idx]),
            "theta": float(theta[idx]),
            "k": float(k[idx]),
        },
        lower,
        bool(passed),
        len(curve.samples),
        case,
        unconstrained,
        outside,
        zero_set,
        tol,
    )
