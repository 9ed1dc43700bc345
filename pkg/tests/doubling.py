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

import math
from fractions import Fraction

import numpy as np
import pytest
import scipy.integrate
from hypothesis import given, settings
from hypothesis import strategies as st

from isodouble.doubling import (
    H_mean,
    IsoparametricFamily,
    a_defect,
    a_defect_expanded,
    admissible_r,
    b_profile,
    bent_principal_curvatures,
    f_of_r,
    general_scalar,
    lap_profile,
    mu_square_sum,
    principal_curvatures,
    r_of_f,
    scalar_curvature,
)
from isodouble.errors import DomainError, SingularLevelError

FAMILIES = [
    IsoparametricFamily(1, 3, 3),
    IsoparametricFamily(2, 1, 1),
    IsoparametricFamily(2, 2, 5),
    IsoparametricFamily(3, 1, 1),
    IsoparametricFamily(3, 8, 8),
    IsoparametricFamily(4, 1, 1),
    IsoparametricFamily(4, 4, 3),
    IsoparametricFamily(4, 3, 4),
    IsoparametricFamily(4, 6, 9),
    IsoparametricFamily(4, 8, 7),
    IsoparametricFamily(6, 1, 1),
    IsoparametricFamily(6, 2, 2),
]


def test_family_validation():
    for g, m_plus, m_minus in [
        (5, 1, 1),
        (2, 0, 1),
        (3, 1, 2),
        (3, 3, 3),
        (6, 4, 4),
        (6, 1, 2),
        (1, 2, 3),
    ]:
        with pytest.raises(DomainError):
            IsoparametricFamily(g, m_plus, m_minus)


def test_family_quantities():
    family = IsoparametricFamily(4, 4, 3)
    assert (family.n, family.c, family.S, family.nu) == (15, -8, 42, 7)
    assert family.f0 == Fraction(-1, 7)
    assert family.multiplicities == (4, 3, 4, 3)
    assert not family.case_a
    assert IsoparametricFamily(3, 1, 1).case_a
    assert IsoparametricFamily(3, 2, 2).multiplicities == (2, 2, 2)
    assert IsoparametricFamily(1, 5, 5).n == 6


def test_minimal_level_exact():
    family = IsoparametricFamily(4, 4, 3)
    f0 = family.f0
    assert mu_square_sum(family, f0) == 42
    assert isinstance(mu_square_sum(family, f0), Fraction)
    assert a_defect(family, f0) == 0
    assert H_mean(family, f0) == 0
    assert a_defect_expanded(family, f0) == 0
    assert a_defect(family, 0) == 4
    for other in FAMILIES:
        assert a_defect(other, other.f0) == 0
        assert mu_square_sum(other, other.f0) == other.S


def test_case_a_defect_vanishes():
    levels = np.random.default_rng(0).uniform(-0.9, 0.9, size=100)
    for g in (1, 2, 3, 4, 6):
        family = IsoparametricFamily(g, 1, 1)
        assert np.max(np.abs(a_defect(family, levels))) <= 1e-12
        for f in levels[:5]:
            assert abs(a_defect(family, float(f))) <= 1e-12


def test_expanded_defect_agrees():
    rng = np.random.default_rng(1)
    for _ in range(1000):
        family = FAMILIES[rng.integers(len(FAMILIES))]
        f = rng.uniform(-0.95, 0.95)
        scale = max(1.0, mu_square_sum(family, f))
        diff = a_defect(family, f) - a_defect_expanded(family, f)
        assert abs(diff) <= 1e-12 * scale
    levels = rng.uniform(-0.95, 0.95, size=50)
    for family in FAMILIES:
        assert np.allclose(
            a_defect(family, levels),
            a_defect_expanded(family, levels),
            rtol=1e-12,
            atol=1e-9,
        )


@settings(max_examples=60, deadline=None)
@given(
    index=st.integers(min_value=0, max_value=len(FAMILIES) - 1),
    numerator=st.integers(min_value=-999, max_value=999),
)
def test_expanded_defect_exact(index, numerator):
    family = FAMILIES[index]
    f = Fraction(numerator, 1000)
    assert a_defect(family, f) == a_defect_expanded(family, f)


def test_singular_levels():
    family = IsoparametricFamily(4, 4, 3)
    for func in (mu_square_sum, H_mean, a_defect, b_profile, r_of_f):
        for bad in (1, -1, 1.5, Fraction(7, 5)):
            with pytest.raises(SingularLevelError):
                func(family, bad)
    with pytest.raises(SingularLevelError):
        a_defect(family, np.array([0.0, 1.0]))


def test_profiles():
    family = IsoparametricFamily(4, 4, 3)
    assert b_profile(family, 0.5) == 16 * 0.75
    assert lap_profile(family, 0) == family.c
    assert lap_profile(family, Fraction(1, 2)) == -8 - 4 * 18 * Fraction(1, 2)


def test_distance_parametrization():
    for family in FAMILIES:
        lo, hi = admissible_r(family)
        assert lo < 0 < hi
        assert math.isclose(hi - lo, math.pi / family.g)
        assert math.isclose(f_of_r(family, 0.0), float(family.f0))
        r = np.linspace(lo, hi, 41)[1:-1]
        f = f_of_r(family, r)
        assert np.all(np.diff(f) > 0)
        assert np.allclose(r_of_f(family, f), r, atol=1e-9)
        for bad in (lo, hi, hi + 0.1):
            with pytest.raises(DomainError):
                f_of_r(family, bad)


def test_distance_solves_level_ode():
    for family in FAMILIES:
        g, f0 = family.g, float(family.f0)
        _, hi = admissible_r(family)
        r = np.linspace(0.0, 0.8 * hi, 9)
        solution = scipy.integrate.solve_ivp(
            lambda _, f: g * np.sqrt(1 - f * f),
            (0.0, r[-1]),
            [f0],
            method="DOP853",
            t_eval=r,
            rtol=1e-13,
            atol=1e-13,
        )
        assert solution.success
        assert np.max(np.abs(solution.y[0] - f_of_r(family, r))) <= 1e-10


def test_mean_curvature_positive_above_minimal_level():
    for family in FAMILIES:
        f0 = float(family.f0)
        f = f0 + 1e-3 * np.arange(1, int((1 - f0) / 1e-3) + 1)
        f = f[f < 1 - 1e-12]
        assert len(f) > 0
        assert np.all(H_mean(family, f) > 0)
        assert abs(H_mean(family, f0)) <= 1e-12
        assert H_mean(family, f0 - 1e-3) < 0


def test_principal_curvatures_match_closed_forms():
    for family in FAMILIES:
        for f in (-0.7, float(family.f0), 0.0, 0.4, 0.9):
            mu = principal_curvatures(family, f)
            assert mu.shape == (family.n - 1,)
            assert np.all(np.diff(mu) <= 0)
            H = H_mean(family, f)
            assert abs(mu.sum() - H) <= 1e-9 * max(1, abs(H))
            squares = mu_square_sum(family, f)
            assert abs((mu * mu).sum() - squares) <= 1e-9 * squares


def test_scalar_curvature():
    family = IsoparametricFamily(4, 4, 3)
    n = family.n
    assert scalar_curvature(family, 0.3, 0.0, 0.4) == n * (n - 1)
    theta = np.linspace(0, np.pi / 2, 7)
    k = np.full_like(theta, 0.5)
    R = scalar_curvature(family, 0.3, theta, k)
    sin = np.sin(theta)
    expected = (
        n * (n - 1) * np.cos(theta) ** 2
        + (n - 5) * (n - 1) * sin**2
        + a_defect(family, 0.3) * sin**2
        + 2 * 0.5 * H_mean(family, 0.3) * sin
    )
    assert np.allclose(R, expected)

    case_a = IsoparametricFamily(3, 1, 1)
    R = scalar_curvature(case_a, 0.2, theta, k)
    expected = 12 * np.cos(theta) ** 2 + 2 * 0.5 * H_mean(case_a, 0.2) * sin
    assert np.allclose(R, expected, atol=1e-12)

    with pytest.raises(DomainError):
        scalar_curvature(family, 0.3, 2.0, 0.1)
    with pytest.raises(DomainError):
        scalar_curvature(family, 0.3, 0.5, -0.1)
    with pytest.raises(SingularLevelError):
        scalar_curvature(family, 1.0, 0.5, 0.1)


def test_general_scalar_reduces_to_sphere_formula():
    rng = np.random.default_rng(3)
    for family in FAMILIES:
        n = family.n
        for _ in range(5):
            f = rng.uniform(-0.8, 0.8)
            theta = rng.uniform(0, np.pi / 2)
            k = rng.uniform(0, 0.5)
            mu = principal_curvatures(family, f)
            general = general_scalar(n * (n - 1), mu, n - 1, theta, k)
            expected = scalar_curvature(family, f, theta, k)
            assert abs(general - expected) <= 1e-9 * max(1, abs(expected))


def test_bent_principal_curvatures():
    family = IsoparametricFamily(2, 2, 5)
    mu = principal_curvatures(family, 0.1)
    assert np.allclose(bent_principal_curvatures(family, 0.1, 0.0), mu)
    assert np.allclose(
        bent_principal_curvatures(family, 0.1, np.pi / 3), 0.5 * mu
    )
    assert np.allclose(
        bent_principal_curvatures(family, 0.1, np.pi / 2), 0, atol=1e-12
    )


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main(sys.argv))
