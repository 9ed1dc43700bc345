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

import traceback

import numpy as np

from .config import ISODOUBLE_PKG_NAME
from .errors import DomainError


def find_last_user_stacklevel():
    stacklevel = 1
    for (frame, _) in traceback.walk_stack(None):
        module = frame.f_globals.get("__name__", "")
        if not module.startswith(ISODOUBLE_PKG_NAME):
            break
        stacklevel += 1
    return stacklevel


def as_vector(z, dim, name="z"):
    z = np.asarray(z, dtype=np.float64)
    if z.shape != (dim,):
        raise DomainError(
            f"{name} must be a vector of length {dim}, got shape {z.shape}"
        )
    return z


def as_points(z, dim, name="z"):
    """Accept one point or a stack of points, returning a 2-D array."""
    z = np.asarray(z, dtype=np.float64)
    if z.ndim == 1:
        z = z[np.newaxis, :]
    if z.ndim != 2 or z.shape[1] != dim:
        raise DomainError(
            f"{name} must have trailing dimension {dim}, got shape {z.shape}"
        )
    return z


def split_intervals(mask, coords):
    """Collapse runs of True in `mask` into [start, end] coordinate pairs."""
    mask = np.asarray(mask, dtype=bool)
    if not mask.any():
        return []
    edges = np.diff(mask.astype(np.int8))
    starts = list(np.flatnonzero(edges == 1) + 1)
    ends = list(np.flatnonzero(edges == -1))
    if mask[0]:
        starts.insert(0, 0)
    if mask[-1]:
        ends.append(len(mask) - 1)
    return [[float(coords[s]), float(coords[e])] for s, e in zip(starts, ends)]
