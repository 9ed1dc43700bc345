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

import numpy as np

from isodouble.config import DEFAULT_SEED
from isodouble.runtime import runtime

__all__ = ("generator", "nonzero_points", "seed", "spawn", "unit_vectors")


def seed(init=None):
    """
    Set the master seed used by every sampling routine called with
    ``seed=None``.

    Parameters
    ----------
    init : int, optional
        A 64-bit unsigned integer. Defaults to 42.
    """
    if init is None:
        init = DEFAULT_SEED
    runtime.default_seed = runtime.resolve_seed(init)


def generator(seed=None):
    """
    Return a ``numpy.random.Generator`` for a master seed.

    Parameters
    ----------
    seed : int, optional
        Master seed; the runtime default is used when omitted.

    Returns
    -------
    out : numpy.random.Generator
    """
    return np.random.default_rng(
        np.random.SeedSequence(runtime.resolve_seed(seed))
    )


def spawn(seed, count):
    """
    Derive `count` independent child generators from a master seed.

    The children depend only on ``(seed, index)``, so a sampling loop
    split over several workers draws exactly the values a serial loop
    would.

    Parameters
    ----------
    seed : int or None
        Master seed.
    count : int
        Number of children.

    Returns
    -------
    out : list[numpy.random.Generator]
    """
    children = np.random.SeedSequence(runtime.resolve_seed(seed)).spawn(
        count
    )
    return [np.random.default_rng(child) for child in children]


def unit_vectors(rng, count, dim):
    z = rng.standard_normal((count, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def nonzero_points(rng, count, dim, low=0.5, high=2.0):
    """Random points of R^dim with norms drawn uniformly in [low, high)."""
    radii = rng.uniform(low, high, size=(count, 1))
    return radii * unit_vectors(rng, count, dim)
