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

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from isodouble.config import BEND_RAMP_FRACTION, BEND_TAIL_LENGTH
from isodouble.doubling.formulas import admissible_r
from isodouble.errors import DomainError, InfeasibleGeometry

__all__ = (
    "BendingCurve",
    "CurvatureProfile",
    "build_curve",
    "curve_residuals",
    "unit_bend_width",
)

_GAUSS_ORDER = 8
_COLUMNS = ("s", "r", "t", "theta", "k")


def _smoothstep(x):
    return x * x * (3 - 2 * x)


def _smoothstep_integral(x):
    return x**3 - 0.5 * x**4


@dataclass(frozen=True)
class CurvatureProfile:
    """
    Curvature of the bend as a function of arclength.

    The curvature rises from 0 to `k_peak` along a smoothstep ramp, stays
    at `k_peak` and falls back to 0 along a mirrored ramp; the total
    turning is exactly ``pi / 2``.
    """

    k_peak: float
    s_start: float = 0.0

    @property
    def ramp(self):
        return BEND_RAMP_FRACTION * math.pi / (2 * self.k_peak)

    @property
    def plateau(self):
        return (1 - BEND_RAMP_FRACTION) * math.pi / (2 * self.k_peak)

    @property
    def length(self):
        return 2 * self.ramp + self.plateau

    @property
    def breakpoints(self):
        s0 = self.s_start
        return (
            s0,
            s0 + self.ramp,
            s0 + self.ramp + self.plateau,
            s0 + self.length,
        )

    def _regions(self, s):
        s = np.asarray(s, dtype=np.float64)
        sigma = s - self.s_start
        L_r, L_p = self.ramp, self.plateau
        conds = [
            sigma < 0,
            sigma < L_r,
            sigma < L_r + L_p,
            sigma < 2 * L_r + L_p,
        ]
        x = np.clip(sigma / L_r, 0, 1)
        y = np.clip((sigma - L_r - L_p) / L_r, 0, 1)
        return sigma, conds, x, y

    def kappa(self, s):
        sigma, conds, x, y = self._regions(s)
        K = self.k_peak
        out = np.select(
            conds,
            [0.0, K * _smoothstep(x), K, K * (1 - _smoothstep(y))],
            default=0.0,
        )
        return out

    def theta(self, s):
        sigma, conds, x, y = self._regions(s)
        K, L_r, L_p = self.k_peak, self.ramp, self.plateau
        out = np.select(
            conds,
            [
                0.0,
                K * L_r * _smoothstep_integral(x),
                K * L_r / 2 + K * (sigma - L_r),
                K * L_r / 2
                + K * L_p
                + K * L_r * (y - _smoothstep_integral(y)),
            ],
            default=math.pi / 2,
        )
        return out


def _gauss_integrals(func, edges):
    """Integrate `func` over each interval between consecutive `edges`."""
    nodes, weights = np.polynomial.legendre.leggauss(_GAUSS_ORDER)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    values = func(mid[:, np.newaxis] + half[:, np.newaxis] * nodes)
    return half * (values @ weights)


@lru_cache(maxsize=None)
def unit_bend_width():
    """
    Radial extent ``int cos(theta) ds`` of the bend with peak curvature 1.

    A bend with peak curvature ``k`` is this one scaled by ``1 / k``.
    """
    profile = CurvatureProfile(1.0)
    edges = np.asarray(profile.breakpoints)
    return float(
        _gauss_integrals(lambda s: np.cos(profile.theta(s)), edges).sum()
    )


def _grid(breakpoints, step):
    pieces = [np.asarray(breakpoints[:1])]
    for a, b in zip(breakpoints[:-1], breakpoints[1:]):
        if b <= a:
            continue
        count = max(1, math.ceil((b - a) / step))
        pieces.append(np.linspace(a, b, count + 1)[1:])
    return np.concatenate(pieces)


@dataclass(frozen=True, eq=False)
class BendingCurve:
    """
    A planar curve ``gamma(s) = (r(s), t(s))`` bending the cylinder over
    a leaf into the leaf's normal direction.

    Attributes
    ----------
    samples : ndarray
        ``(N, 5)`` array with columns ``s, r, t, theta, k``.
    r_bar : float
        Distance of the straight segment's start from the minimal leaf.
    r_1 : float
        Where the bend begins.
    r_inf : float
        Asymptotic distance reached after turning by ``pi / 2``.
    k_max : float
        Curvature bound the curve respects.
    profile : CurvatureProfile or None
        ``None`` for the degenerate curve with ``r_inf == r_bar``.
    """

    samples: np.ndarray
    r_bar: float
    r_1: float
    r_inf: float
    k_max: float
    profile: Optional[CurvatureProfile] = None

    def __post_init__(self):
        self.samples.setflags(write=False)

    @property
    def s(self):
        return self.samples[:, 0]

    @property
    def r(self):
        return self.samples[:, 1]

    @property
    def t(self):
        return self.samples[:, 2]

    @property
    def theta(self):
        return self.samples[:, 3]

    @property
    def k(self):
        return self.samples[:, 4]

    @property
    def length(self):
        return float(self.samples[-1, 0])

    def to_dict(self, include_samples=False):
        out = {
            "r_bar": self.r_bar,
            "r_1": self.r_1,
            "r_inf": self.r_inf,
            "k_max": self.k_max,
            "k_peak": None if self.profile is None else self.profile.k_peak,
            "length": self.length,
            "num_samples": len(self.samples),
        }
        if include_samples:
            out["samples"] = self.samples.tolist()
        return out

    def to_csv(self, fname):
        """Write the samples as CSV with header ``s,r,t,theta,k``."""
        np.savetxt(
            fname,
            self.samples,
            fmt="%.17g",
            delimiter=",",
            header=",".join(_COLUMNS),
            comments="",
        )


def _check_window(family, r_inf, r_bar, min_r_bar, width):
    lo, hi = admissible_r(family)
    if r_inf <= lo or min_r_bar >= hi:
        raise InfeasibleGeometry(
            f"the bend needs radial room {width:.6g} above r_inf={r_inf} "
            f"but leaves of the family only reach r < {hi:.6g}",
            min_r_bar,
            unit_bend_width() / (hi - r_inf) if r_inf < hi else math.inf,
        )
    if r_bar >= hi:
        raise InfeasibleGeometry(
            f"r_bar={r_bar} lies beyond the focal distance {hi:.6g}",
            min_r_bar,
        )


def build_curve(
    family=None,
    r_bar=1.0,
    r_1=None,
    r_inf=0.05,
    k_max=0.5,
    step=1e-3,
    tail=BEND_TAIL_LENGTH,
):
    """
    Build a bending curve with curvature bounded by `k_max`.

    The curve runs straight (``theta = 0``) from ``r = r_bar`` down to
    ``r = r_1``, bends by ``pi / 2`` with a smooth curvature profile and
    then continues along ``r = r_inf`` for a length `tail`.

    Parameters
    ----------
    family : IsoparametricFamily, optional
        When given, the whole curve must stay inside the distances
        covered by regular leaves of the family.
    r_bar : float
        Start of the straight segment.
    r_1 : float, optional
        Start of the bend. Defaults to the tightest bend allowed by
        `k_max`.
    r_inf : float
        Final distance, ``0 < r_inf <= r_bar``.
    k_max : float
        Bound on the curvature.
    step : float
        Maximal arclength spacing of the samples.
    tail : float
        Length of the final segment along ``r = r_inf``.

    Returns
    -------
    out : BendingCurve

    Raises
    ------
    InfeasibleGeometry
        If no such curve exists; ``min_r_bar`` (and ``min_k_max`` when the
        family window is the obstruction) say what would be needed.
    """
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    if k_max <= 0:
        raise DomainError(f"k_max must be positive, got {k_max}")
    if r_inf <= 0:
        raise DomainError(f"r_inf must be positive, got {r_inf}")
    if r_bar < r_inf:
        raise DomainError(f"need r_inf <= r_bar, got {r_inf} > {r_bar}")

    if r_bar == r_inf:
        if family is not None:
            lo, hi = admissible_r(family)
            if not lo < r_bar < hi:
                raise InfeasibleGeometry(
                    f"r_bar={r_bar} lies outside ({lo:.6g}, {hi:.6g})", r_bar
                )
        samples = np.array([[0.0, float(r_bar), 0.0, 0.0, 0.0]])
        return BendingCurve(samples, r_bar, r_bar, r_inf, k_max)

    width = unit_bend_width() / k_max
    min_r_bar = r_inf + width
    if r_1 is None:
        r_1 = min(min_r_bar, r_bar)
    if not r_inf < r_1 <= r_bar:
        raise DomainError(f"need r_inf < r_1 <= r_bar, got r_1={r_1}")
    if r_1 - r_inf < width * (1 - 1e-12):
        raise InfeasibleGeometry(
            f"bending from r_1={r_1} to r_inf={r_inf} needs curvature above "
            f"k_max={k_max}; r_bar must be at least {min_r_bar:.6g}",
            min_r_bar,
        )
    if family is not None:
        _check_window(family, r_inf, r_bar, min_r_bar, width)

    profile = CurvatureProfile(
        unit_bend_width() / (r_1 - r_inf), s_start=r_bar - r_1
    )
    bend_end = profile.breakpoints[-1]
    s = _grid((0.0,) + profile.breakpoints + (bend_end + tail,), step)
    theta = profile.theta(s)
    k = profile.kappa(s)
    dr = _gauss_integrals(lambda x: np.cos(profile.theta(x)), s)
    dt = _gauss_integrals(lambda x: np.sin(profile.theta(x)), s)
    r = r_bar - np.concatenate([[0.0], np.cumsum(dr)])
    t = np.concatenate([[0.0], np.cumsum(dt)])
    r[s >= bend_end] = r_inf
    samples = np.column_stack([s, r, t, theta, k])
    return BendingCurve(samples, r_bar, r_1, r_inf, k_max, profile)


def curve_residuals(curve):
    """
    Check a sampled curve against its defining equations.

    Between consecutive samples the increments of ``theta``, ``r`` and
    ``t`` are compared with Simpson quadratures of ``k``, ``-cos theta``
    and ``sin theta``.

    Returns
    -------
    out : dict
        Maximal absolute residual per equation, divided by the largest
        sample spacing, and the boundary residuals.
    """
    s, r, t, theta, k = curve.samples.T
    out = {
        "theta": 0.0,
        "r": 0.0,
        "t": 0.0,
        "k_excess": float(max(np.max(k) - curve.k_max, 0.0)),
        "start": float(abs(theta[0]) + abs(k[0]) + abs(t[0])),
        "end": float(
            abs(theta[-1] - np.pi / 2) + abs(k[-1]) + abs(r[-1] - curve.r_inf)
        )
        if curve.profile is not None
        else 0.0,
    }
    if curve.profile is None:
        return out
    h = np.diff(s)
    mid = 0.5 * (s[1:] + s[:-1])
    theta_mid = curve.profile.theta(mid)
    k_mid = curve.profile.kappa(mid)

    def defect(values, integrand, mid_values):
        quad = h / 6 * (integrand[:-1] + 4 * mid_values + integrand[1:])
        return float(np.max(np.abs(np.diff(values) - quad)) / h.max())

    out["theta"] = defect(theta, k, k_mid)
    out["r"] = defect(r, -np.cos(theta), -np.cos(theta_mid))
    out["t"] = defect(t, np.sin(theta), np.sin(theta_mid))
    return out
