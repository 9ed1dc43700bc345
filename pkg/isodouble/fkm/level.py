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

import numpy as np

from isodouble.config import (
    LEVEL_TOL,
    NEWTON_MAX_ITER,
    NEWTON_MAX_RESTARTS,
    NEWTON_MAX_STEP,
)
from isodouble.errors import ConvergenceError, SingularLevelError
from isodouble.random import spawn, unit_vectors
from isodouble.runtime import runtime

__all__ = ("LevelPoint", "sample_level_point")

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LevelPoint:
    """A unit vector `z` with ``F(z) = f_value`` up to the tolerance."""

    z: np.ndarray
    f_value: float
    gradient_norm: float

    def to_dict(self):
        return {
            "z": self.z.tolist(),
            "f_value": self.f_value,
            "gradient_norm": self.gradient_norm,
        }


def _newton(poly, z, f_target, tol):
    for _ in range(NEWTON_MAX_ITER):
        F, grad, _ = poly.evaluate(z)
        f = F[0]
        tangent = grad[0] - 4 * f * z
        norm2 = tangent @ tangent
        if abs(f - f_target) <= tol:
            return LevelPoint(z, float(f), float(np.sqrt(norm2)))
        if norm2 < 1e-24:
            # stuck on a focal submanifold
            return None
        step = -(f - f_target) / norm2 * tangent
        length = np.linalg.norm(step)
        if length > NEWTON_MAX_STEP:
            step *= NEWTON_MAX_STEP / length
            length = NEWTON_MAX_STEP
        # follow the great circle through z in the direction of step
        z = np.cos(length) * z + np.sin(length) * step / length
        z /= np.linalg.norm(z)
    return None


def sample_level_point(poly, f_target, seed=None, tol=None):
    """
    Find a point of the level set ``F = f_target`` on the unit sphere.

    Starting from a random unit vector, Newton steps along the spherical
    gradient are taken (each capped at a fixed angle) until
    ``|F(z) - f_target|`` is within `tol`; up to ten independent restarts
    are made.

    Parameters
    ----------
    poly : FKMPolynomial
    f_target : float
        Level with ``-1 < f_target < 1``.
    seed : int, optional
        Master seed, the runtime default when omitted.
    tol : float, optional
        ``1e-10`` by default.

    Returns
    -------
    out : LevelPoint

    Raises
    ------
    SingularLevelError
        If ``|f_target| >= 1``.
    ConvergenceError
        If every restart fails.
    """
    f_target = float(f_target)
    if not -1 < f_target < 1:
        raise SingularLevelError(f_target)
    tol = runtime.tolerance(LEVEL_TOL) if tol is None else tol
    seed = runtime.resolve_seed(seed)
    for attempt, rng in enumerate(spawn(seed, NEWTON_MAX_RESTARTS)):
        z = unit_vectors(rng, 1, poly.dim)[0]
        point = _newton(poly, z, f_target, tol)
        if point is not None:
            return point
        logger.debug(
            "Newton projection to f=%g failed on attempt %d", f_target, attempt
        )
    raise ConvergenceError(
        f"no point with F = {f_target} found after {NEWTON_MAX_RESTARTS} "
        "restarts"
    )
