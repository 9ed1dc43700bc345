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

from isodouble.clifford import delta_dim
from isodouble.config import SIDE_NAMES, FamilyKind, Side
from isodouble.doubling.family import IsoparametricFamily
from isodouble.errors import DomainError

from .homogeneous import homogeneous_lookup

__all__ = (
    "DoubleDescriptor",
    "classify_family",
    "double_descriptor",
    "fkm_parameters",
)

# the only g = 4 multiplicities whose classification is still open
_OPEN_MULTIPLICITIES = frozenset({7, 8})


def fkm_parameters(m_plus, m_minus):
    """
    ``(m, l)`` of the FKM family with multiplicities ``(m_plus, m_minus)``
    in this order, or ``None``.
    """
    l = m_plus + m_minus + 1  # noqa E741
    if l % delta_dim(m_plus) == 0:
        return m_plus, l
    return None


def classify_family(g, m_plus, m_minus):
    """
    Which known construction realizes the family (up to congruence).

    Returns
    -------
    out : FamilyKind
        ``UNCLASSIFIED`` for ``g = 4`` with multiplicities ``{7, 8}``,
        ``NONE`` when the multiplicities occur in no known family.
    """
    IsoparametricFamily(g, m_plus, m_minus)
    orders = ((m_plus, m_minus), (m_minus, m_plus))
    homogeneous = any(homogeneous_lookup(g, *mm) for mm in orders)
    if g != 4:
        return FamilyKind.HOMOGENEOUS if homogeneous else FamilyKind.NONE
    if {m_plus, m_minus} == _OPEN_MULTIPLICITIES:
        return FamilyKind.UNCLASSIFIED
    fkm = any(fkm_parameters(*mm) for mm in orders)
    if homogeneous and fkm:
        return FamilyKind.HOMOGENEOUS_AND_FKM
    if homogeneous:
        return FamilyKind.HOMOGENEOUS
    if fkm:
        return FamilyKind.FKM
    return FamilyKind.NONE


@dataclass(frozen=True)
class DoubleDescriptor:
    """
    Diffeomorphism type of a double ``D(S^n_+-)`` where it is known.

    Every double is a stably parallelizable manifold: it is orientable and
    spin, its Stiefel-Whitney and Pontrjagin classes vanish, and it
    carries positive scalar curvature, hence ``alpha = 0``.
    """

    family: IsoparametricFamily
    side: Side
    diffeomorphism_type: str
    pi_manifold: bool = True
    orientable: bool = True
    spin: bool = True
    alpha: int = 0

    @property
    def dim(self):
        return self.family.n

    def to_dict(self):
        return {
            "family": self.family.to_dict(),
            "side": SIDE_NAMES[self.side],
            "dim": self.dim,
            "diffeomorphism_type": self.diffeomorphism_type,
            "pi_manifold": self.pi_manifold,
            "orientable": self.orientable,
            "spin": self.spin,
            "stiefel_whitney": "vanishing",
            "pontrjagin": "vanishing",
            "alpha": self.alpha,
        }


def double_descriptor(g, m_plus, m_minus, side=Side.PLUS, fkm=False):
    """
    Describe ``D(S^n_+)`` (or ``D(S^n_-)``) for the family.

    Parameters
    ----------
    g, m_plus, m_minus : int
    side : Side
    fkm : bool
        The family is the FKM family with ``(m, l) = (m_plus,
        m_plus + m_minus + 1)``; then ``M_+`` has trivial normal bundle.

    Returns
    -------
    out : DoubleDescriptor
    """
    family = IsoparametricFamily(g, m_plus, m_minus)
    side = Side(side)
    near, far = (m_plus, m_minus) if side == Side.PLUS else (m_minus, m_plus)
    focal = "M_plus" if side == Side.PLUS else "M_minus"
    if g == 1:
        kind = f"S^{family.n}"
    elif g == 2:
        kind = f"S^{far}×S^{near + 1}"
    elif fkm and side == Side.PLUS:
        if g != 4 or fkm_parameters(m_plus, m_minus) is None:
            raise DomainError(
                f"({g}, {m_plus}, {m_minus}) is not an FKM family"
            )
        kind = f"M_plus×S^{m_plus + 1}"
    else:
        kind = f"S(nu ⊕ 1) over {focal}"
    return DoubleDescriptor(family, side, kind)
