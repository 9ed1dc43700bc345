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
import pytest

from isodouble import random as idrandom
from isodouble.runtime import runtime


def test_generator_reproducible():
    first = idrandom.generator(5).standard_normal(8)
    second = idrandom.generator(5).standard_normal(8)
    assert np.array_equal(first, second)
    other = idrandom.generator(6).standard_normal(8)
    assert not np.array_equal(first, other)


def test_seed_sets_default():
    previous = runtime.default_seed
    try:
        idrandom.seed(1234)
        assert runtime.default_seed == 1234
        a = idrandom.generator().random(4)
        b = idrandom.generator(1234).random(4)
        assert np.array_equal(a, b)
        idrandom.seed()
        assert runtime.default_seed == 42
    finally:
        runtime.default_seed = previous
    with pytest.raises(ValueError):
        idrandom.seed(-1)


def test_spawn_prefix_stable():
    few = [rng.random(3) for rng in idrandom.spawn(9, 2)]
    many = [rng.random(3) for rng in idrandom.spawn(9, 5)]
    for a, b in zip(few, many):
        assert np.array_equal(a, b)
    assert not np.array_equal(many[0], many[1])


def test_point_samplers():
    rng = idrandom.generator(3)
    z = idrandom.unit_vectors(rng, 50, 7)
    assert z.shape == (50, 7)
    assert np.allclose(np.linalg.norm(z, axis=1), 1)
    z = idrandom.nonzero_points(rng, 50, 7)
    norms = np.linalg.norm(z, axis=1)
    assert np.all((norms >= 0.5 - 1e-12) & (norms < 2.0 + 1e-12))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main(sys.argv))
