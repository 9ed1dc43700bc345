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

"""
Closed-form geometry of isoparametric leaves and of their bent copies.

Every formula accepts a ``fractions.Fraction`` level and then stays exact
wherever no square root or trigonometric function is involved, so that
identities such as ``a_defect(family, family.f0) == 0`` hold exactly.
Floats and ``numpy`` arrays of levels are accepted as well.
"""

from __future__ import annotations

import math

import numpy as np

from isodouble.errors import DomainError, SingularLevelError

__all__ = (
    "H_mean",
    "a_defect",
    "a_defect_expanded",
    "admissible_r",
    "b_profile",
    "bent_principal_curvatures",
    "f_of_r",
    "general_scalar",
    "lap_profile",
    "mu_square_sum",
    "principal_curvatures",
    "r_of_f",
    "scalar_curvature",
)

_ANGLE_SLACK = 1e-12


def _level(f):
    if isinstance(f, (list, tuple)):
        f = np.asarray(f, dtype=np.float64)
    elif isinstance(f, np.ndarray) and f.dtype.kind != "f":
        f = f.astype(np.float64)
    if np.any(np.abs(np.asarray(f, dtype=np.float64)) >= 1):
        raise SingularLevelError(f)
    return f


def _sqrt(x):
    if isinstance(x, np.ndarray):
        return np.sqrt(x)
    return math.sqrt(x)


def _angles(theta, k):
    theta = np.asarray(theta, dtype=np.float64)
    k = np.asarray(k, dtype=np.float64)
    if np.any(theta < -_ANGLE_SLACK) or np.any(
        theta > np.pi / 2 + _ANGLE_SLACK
    ):
        raise DomainError("bending angle theta must lie in [0, pi/2]")
    if np.any(k < 0):
        raise DomainError("curve curvature k must be non-negative")
    return theta, k


def b_profile(family, f):
    """``|grad f|^2`` on the sphere as a function of the level."""
    f = _level(f)
    g = family.g
    return g * g * (1 - f * f)


def lap_profile(family, f):
    """The spherical Laplacian of ``f`` as a function of the level."""
    f = _level(f)
    g = family.g
    return family.c - g * (g + family.n - 1) * f


def admissible_r(family):
    """
    Open interval of signed distances ``r`` to the minimal leaf on which
    ``f(r) = sin(g r + arcsin f0)`` parametrizes the regular levels.

    Returns
    -------
    out : tuple[float, float]
    """
    shift = math.asin(float(family.f0))
    return (
        (-math.pi / 2 - shift) / family.g,
        (math.pi / 2 - shift) / family.g,
    )


def f_of_r(family, r):
    """
    Level of the leaf at signed distance `r` from the minimal leaf.

    Raises
    ------
    DomainError
        If `r` leaves the open interval of :func:`admissible_r`.
    """
    lo, hi = admissible_r(family)
    r_arr = np.asarray(r, dtype=np.float64)
    if np.any(r_arr <= lo) or np.any(r_arr >= hi):
        raise DomainError(
            f"r must lie in the open interval ({lo:.12g}, {hi:.12g})"
        )
    out = np.sin(family.g * r_arr + math.asin(float(family.f0)))
    return float(out) if out.ndim == 0 else out


def r_of_f(family, f):
    f = _level(f)
    out = (np.arcsin(np.asarray(f, dtype=np.float64)) - math.asin(
        float(family.f0)
    )) / family.g
    return float(out) if out.ndim == 0 else out


def mu_square_sum(family, f):
    """
    Sum of squared principal curvatures of the leaf ``f^{-1}(f)``.

    Parameters
    ----------
    family : IsoparametricFamily
    f : Fraction, float or array_like
        Level with ``|f| < 1``.

    Returns
    -------
    out : Fraction, float or ndarray
        Exact for ``Fraction`` input.
    """
    f = _level(f)
    n1 = family.n - 1
    return (n1 * (family.g - 1) - family.c * f + n1 * f * f) / (1 - f * f)


def H_mean(family, f):
    """
    Unnormalized mean curvature (sum of principal curvatures) of the leaf
    ``f^{-1}(f)`` with respect to the normal ``grad f / |grad f|``.
    """
    f = _level(f)
    g = family.g
    return (g * (family.n - 1) * f - family.c) / (g * _sqrt(1 - f * f))


def _H_squared(family, f):
    g = family.g
    return (g * (family.n - 1) * f - family.c) ** 2 / (g * g * (1 - f * f))


def a_defect(family, f):
    """``a(f) = H^2 - |A|^2 + S``; zero on the minimal leaf."""
    f = _level(f)
    return _H_squared(family, f) - mu_square_sum(family, f) + family.S


def a_defect_expanded(family, f):
    """
    The defect ``a(f)`` written as a single rational function of ``f``.

    Used to cross-check :func:`a_defect`.
    """
    f = _level(f)
    g = family.g
    n1 = family.n - 1
    c = family.c
    numerator = (
        g * g * n1 * n1 * f * f
        - 2 * c * g * n1 * f
        + c * c
        - g * g * n1 * f * f
        + g * g * c * f
        - g * g * (g - 1) * n1
    )
    return (g - 1) * n1 + numerator / (g * g * (1 - f * f))


def scalar_curvature(family, f, theta, k):
    """
    Scalar curvature of the warped neck over a bending curve.

    Parameters
    ----------
    family : IsoparametricFamily
    f : float or array_like
        Level of the leaf, ``|f| < 1``.
    theta : float or array_like
        Bending angle in ``[0, pi/2]``.
    k : float or array_like
        Non-negative curvature of the bending curve.

    Returns
    -------
    out : float or ndarray
        ``n(n-1) cos^2 theta + (n-g-1)(n-1) sin^2 theta + a sin^2 theta
        + 2 k H sin theta``.
    """
    f = _level(f)
    theta, k = _angles(theta, k)
    n = family.n
    sin = np.sin(theta)
    cos = np.cos(theta)
    a = np.asarray(a_defect(family, f), dtype=np.float64)
    H = np.asarray(H_mean(family, f), dtype=np.float64)
    out = (
        n * (n - 1) * cos * cos
        + (n - family.g - 1) * (n - 1) * sin * sin
        + a * sin * sin
        + 2 * k * H * sin
    )
    return float(out) if out.ndim == 0 else out


def general_scalar(R_X, mu, ric_xi, theta, k):
    """
    Scalar curvature of a bent hypersurface from raw ambient data.

    Parameters
    ----------
    R_X : float
        Scalar curvature of the ambient manifold.
    mu : array_like
        Principal curvatures of the unbent hypersurface (last axis).
    ric_xi : float
        Ambient Ricci curvature in the unit normal direction.
    theta, k : float or array_like
        Bending angle and curve curvature.
    """
    theta, k = _angles(theta, k)
    mu = np.asarray(mu, dtype=np.float64)
    H = mu.sum(axis=-1)
    A = 0.5 * (H * H - (mu * mu).sum(axis=-1)) - ric_xi
    sin = np.sin(theta)
    out = R_X + 2 * A * sin * sin + 2 * k * H * sin
    return float(out) if np.ndim(out) == 0 else out


def principal_curvatures(family, f):
    """
    The ``n - 1`` principal curvatures of the leaf ``f^{-1}(f)``, ordered
    from largest to smallest, each repeated by its multiplicity.
    """
    f = _level(f)
    if np.ndim(f) != 0:
        raise DomainError("principal_curvatures takes a single level")
    g = family.g
    t = math.acos(float(f)) / g
    values = [1.0 / math.tan(t + j * math.pi / g) for j in range(g)]
    return np.repeat(values, family.multiplicities)


def bent_principal_curvatures(family, f, theta):
    """Principal curvatures of the leaf after bending by angle `theta`."""
    _angles(theta, 0.0)
    return principal_curvatures(family, f) * math.cos(theta)
