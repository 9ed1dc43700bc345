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
from functools import cached_property

import numpy as np

from isodouble.doubling.family import IsoparametricFamily
from isodouble.errors import DomainError
from isodouble.utils import as_points, as_vector

__all__ = (
    "FKMPolynomial",
    "eval_F",
    "grad_F",
    "hess_F",
    "laplacian_F",
    "spherical_gradient",
)


@dataclass(frozen=True, eq=False)
class FKMPolynomial:
    """
    The quartic ``F(z) = |z|^4 - 2 sum_i <P_i z, z>^2`` of a Clifford
    system.

    Restricted to the unit sphere ``S^{2l-1}`` it is an isoparametric
    function with ``g = 4`` and multiplicities ``(m, l - m - 1)``.

    Parameters
    ----------
    system : CliffordSystem
        Requires ``l - m - 1 > 0``.
    """

    system: object

    def __post_init__(self):
        if self.m_minus <= 0:
            raise DomainError(
                f"(m={self.system.m}, l={self.system.l}) has l - m - 1 = "
                f"{self.m_minus} <= 0 and defines no isoparametric family"
            )

    @property
    def m_plus(self):
        return self.system.m

    @property
    def m_minus(self):
        return self.system.l - self.system.m - 1

    @property
    def dim(self):
        return self.system.dim

    @property
    def n(self):
        """The polynomial restricts to ``S^n``, ``n = 2l - 1``."""
        return self.dim - 1

    @property
    def family(self):
        return IsoparametricFamily(4, self.m_plus, self.m_minus)

    @cached_property
    def matrices(self):
        return self.system.matrices.astype(np.float64)

    @cached_property
    def traces(self):
        return np.trace(self.matrices, axis1=1, axis2=2)

    def _contract(self, Z):
        PZ = np.einsum("kij,sj->ski", self.matrices, Z)
        w = np.einsum("ski,si->sk", PZ, Z)
        return PZ, w

    def evaluate(self, Z):
        """
        Values, Euclidean gradients and Laplacians at a stack of points.

        Parameters
        ----------
        Z : array_like
            Points of shape ``(S, 2l)``.

        Returns
        -------
        F, grad, lap : ndarray
            Shapes ``(S,)``, ``(S, 2l)`` and ``(S,)``.
        """
        Z = as_points(Z, self.dim)
        PZ, w = self._contract(Z)
        r2 = np.einsum("si,si->s", Z, Z)
        F = r2 * r2 - 2 * np.einsum("sk,sk->s", w, w)
        grad = 4 * r2[:, np.newaxis] * Z - 8 * np.einsum("sk,ski->si", w, PZ)
        lap = (
            4 * r2 * self.dim
            + 8 * r2
            - 16 * np.einsum("ski,ski->s", PZ, PZ)
            - 8 * w @ self.traces
        )
        return F, grad, lap


def eval_F(poly, z):
    z = as_vector(z, poly.dim)
    F, _, _ = poly.evaluate(z)
    return float(F[0])


def grad_F(poly, z):
    z = as_vector(z, poly.dim)
    _, grad, _ = poly.evaluate(z)
    return grad[0]


def hess_F(poly, z):
    """
    Euclidean Hessian of ``F`` at `z`.

    ``4|z|^2 I + 8 z z^T - 16 sum_i (P_i z)(P_i z)^T
    - 8 sum_i <P_i z, z> P_i``.
    """
    z = as_vector(z, poly.dim)
    PZ, w = poly._contract(z[np.newaxis, :])
    PZ, w = PZ[0], w[0]
    return (
        4 * (z @ z) * np.eye(poly.dim)
        + 8 * np.outer(z, z)
        - 16 * PZ.T @ PZ
        - 8 * np.tensordot(w, poly.matrices, axes=1)
    )


def laplacian_F(poly, z):
    """Euclidean Laplacian of ``F``; equals ``8 (m- - m+) |z|^2``."""
    z = as_vector(z, poly.dim)
    _, _, lap = poly.evaluate(z)
    return float(lap[0])


def spherical_gradient(poly, z):
    """
    Gradient of ``F`` restricted to the unit sphere at a unit vector `z`.

    ``F`` is homogeneous of degree 4, so the radial part of the Euclidean
    gradient is ``4 F(z) z``.
    """
    z = as_vector(z, poly.dim)
    F, grad, _ = poly.evaluate(z)
    return grad[0] - 4 * F[0] * z
