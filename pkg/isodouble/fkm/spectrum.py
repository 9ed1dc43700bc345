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

from dataclasses import dataclass
from typing import Tuple

import numpy as np
import scipy.linalg

from isodouble.config import CLUSTER_REL_GAP, CLUSTER_SEPARATION
from isodouble.errors import SingularLevelError

from .polynomial import hess_F

__all__ = ("SpectrumReport", "cluster_eigenvalues", "shape_spectrum")


@dataclass(frozen=True)
class SpectrumReport:
    """
    Principal curvatures of a level hypersurface at one point.

    Attributes
    ----------
    eigenvalues : tuple[float]
        Shape operator eigenvalues, largest first.
    clusters : tuple[tuple[float, int]]
        ``(value, multiplicity)`` per cluster, largest value first.
    mean_curvature : float
        Sum of the eigenvalues.
    conclusive : bool
        Whether the clusters are separated by at least ten times their
        own spread.
    f_value : float
    """

    eigenvalues: Tuple[float, ...]
    clusters: Tuple[Tuple[float, int], ...]
    mean_curvature: float
    conclusive: bool
    f_value: float

    @property
    def multiplicities(self):
        return tuple(size for _, size in self.clusters)

    def to_dict(self):
        return {
            "eigenvalues": list(self.eigenvalues),
            "clusters": [
                {"value": value, "multiplicity": size}
                for value, size in self.clusters
            ],
            "mean_curvature": self.mean_curvature,
            "conclusive": self.conclusive,
            "f_value": self.f_value,
        }


def cluster_eigenvalues(eigenvalues, rel_gap=CLUSTER_REL_GAP):
    """
    Group eigenvalues separated by less than a relative gap.

    Parameters
    ----------
    eigenvalues : array_like
    rel_gap : float
        Consecutive sorted values further apart than
        ``rel_gap * max(1, max |lambda|)`` start a new cluster.

    Returns
    -------
    clusters : list[tuple[float, int]]
        Mean value and size per cluster, largest value first.
    conclusive : bool
        ``False`` when the smallest gap between clusters is below ten
        times the largest spread inside a cluster.
    """
    values = np.sort(np.asarray(eigenvalues, dtype=np.float64))[::-1]
    scale = max(1.0, float(np.max(np.abs(values))))
    gaps = -np.diff(values)
    cuts = np.flatnonzero(gaps > rel_gap * scale) + 1
    groups = np.split(values, cuts)
    clusters = [(float(group.mean()), len(group)) for group in groups]
    spread = max(float(group[0] - group[-1]) for group in groups)
    if len(cuts) == 0:
        return clusters, True
    conclusive = float(gaps[cuts - 1].min()) >= CLUSTER_SEPARATION * spread
    return clusters, bool(conclusive)


def shape_spectrum(poly, point):
    """
    Eigenvalues of the shape operator of the level through `point`.

    The level ``f^{-1}(f(z))`` is oriented by ``xi = grad_S f / |grad_S f|``
    and ``S = -Hess_S f / |grad_S f|`` restricted to the tangent space
    ``{z, xi}^perp``.

    Parameters
    ----------
    poly : FKMPolynomial
    point : LevelPoint

    Returns
    -------
    out : SpectrumReport

    Raises
    ------
    SingularLevelError
        If the point lies on a focal submanifold.
    """
    z = np.asarray(point.z, dtype=np.float64)
    F, grad, _ = poly.evaluate(z)
    f = float(F[0])
    tangent = grad[0] - 4 * f * z
    norm = float(np.linalg.norm(tangent))
    if norm <= 1e-12:
        raise SingularLevelError(f)
    xi = tangent / norm
    basis = scipy.linalg.null_space(np.vstack([z, xi]))
    hessian = hess_F(poly, z) - 4 * f * np.eye(poly.dim)
    shape = -(basis.T @ hessian @ basis) / norm
    eigenvalues = np.linalg.eigvalsh(shape)[::-1]
    clusters, conclusive = cluster_eigenvalues(eigenvalues)
    return SpectrumReport(
        eigenvalues=tuple(float(v) for v in eigenvalues),
        clusters=tuple(clusters),
        mean_curvature=float(eigenvalues.sum()),
        conclusive=conclusive,
        f_value=f,
    )
