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

from isodouble.clifford import build_system, p0_eigenvectors
from isodouble.doubling import H_mean, principal_curvatures
from isodouble.errors import SingularLevelError
from isodouble.fkm import (
    FKMPolynomial,
    LevelPoint,
    cluster_eigenvalues,
    sample_level_point,
    shape_spectrum,
)


def _poly(m, a, b):
    return FKMPolynomial(build_system(m, a, b))


def test_cluster_eigenvalues():
    clusters, conclusive = cluster_eigenvalues([1.0, 2.0, 1.0, 2.0, 1.0])
    assert clusters == [(2.0, 2), (1.0, 3)]
    assert conclusive

    clusters, conclusive = cluster_eigenvalues([5.0, 5.0, 5.0])
    assert clusters == [(5.0, 3)]
    assert conclusive

    # chained small gaps merge into one wide cluster
    clusters, conclusive = cluster_eigenvalues([0.0, 0.0009, 0.0018, 0.003])
    assert [size for _, size in clusters] == [1, 3]
    assert not conclusive


def test_spectrum_at_random_levels():
    poly = _poly(4, 2, 0)
    family = poly.family
    levels = np.random.default_rng(2022).uniform(-0.85, 0.85, size=5)
    for level in levels:
        means = []
        for seed in (1, 2, 3):
            point = sample_level_point(poly, level, seed=seed)
            report = shape_spectrum(poly, point)
            assert report.conclusive
            assert report.multiplicities == (4, 3, 4, 3)
            assert len(report.eigenvalues) == poly.n - 1
            H = H_mean(family, report.f_value)
            assert abs(report.mean_curvature - H) <= 1e-6 * max(1, abs(H))
            means.append([value for value, _ in report.clusters])
        means = np.array(means)
        assert np.max(np.abs(means - means[0])) <= 1e-6
        expected = np.unique(principal_curvatures(family, level))[::-1]
        assert np.allclose(means[0], expected, rtol=1e-6, atol=1e-6)


def test_minimal_level():
    poly = _poly(4, 2, 0)
    f0 = float(poly.family.f0)
    assert abs(f0 + 1 / 7) <= 1e-15
    for seed in (4, 5):
        report = shape_spectrum(poly, sample_level_point(poly, f0, seed=seed))
        assert abs(report.mean_curvature) <= 1e-6
        assert abs(sum(report.eigenvalues)) <= 1e-6


def test_swapped_multiplicities():
    poly = _poly(3, 2, 0)
    report = shape_spectrum(poly, sample_level_point(poly, 0.0, seed=9))
    assert report.multiplicities == (3, 4, 3, 4)
    assert report.conclusive


def test_focal_point_rejected():
    poly = _poly(4, 2, 0)
    z = p0_eigenvectors(poly.system, 1)[0]
    with pytest.raises(SingularLevelError):
        shape_spectrum(poly, LevelPoint(z, -1.0, 0.0))


def test_report_serialization():
    poly = _poly(4, 2, 0)
    report = shape_spectrum(poly, sample_level_point(poly, 0.2, seed=3))
    data = report.to_dict()
    assert [c["multiplicity"] for c in data["clusters"]] == [4, 3, 4, 3]
    assert data["conclusive"] is True


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main(sys.argv))
