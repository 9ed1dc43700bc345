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


def assert_equal(actual, expected):
    if isinstance(actual, tuple) and isinstance(expected, tuple):
        assert len(actual) == len(expected)
        for a, e in zip(actual, expected):
            assert np.array_equal(a, e)
    else:
        assert np.array_equal(actual, expected)


def assert_allclose(actual, expected, rtol=1e-05, atol=1e-08):
    if isinstance(actual, tuple) and isinstance(expected, tuple):
        assert len(actual) == len(expected)
        for a, e in zip(actual, expected):
            assert np.allclose(a, e, rtol=rtol, atol=atol)
    else:
        assert np.allclose(actual, expected, rtol=rtol, atol=atol)


def fd_gradient(func, z, h=1e-5):
    """Central differences of a scalar function of a vector."""
    z = np.asarray(z, dtype=np.float64)
    grad = np.empty_like(z)
    for i in range(z.size):
        e = np.zeros_like(z)
        e[i] = h
        grad[i] = (func(z + e) - func(z - e)) / (2 * h)
    return grad


def fd_laplacian(func, z, h=1e-4):
    z = np.asarray(z, dtype=np.float64)
    center = func(z)
    total = 0.0
    for i in range(z.size):
        e = np.zeros_like(z)
        e[i] = h
        total += func(z + e) - 2 * center + func(z - e)
    return total / (h * h)


def random_points(seed, count, dim):
    rng = np.random.default_rng(seed)
    return rng.standard_normal((count, dim))
