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
from fractions import Fraction

from isodouble.config import ALLOWED_G
from isodouble.errors import DomainError

__all__ = ("IsoparametricFamily",)

# Cartan: g = 3 only occurs with these multiplicities; Abresch: g = 6
# only with m = 1, 2
_G3_MULTIPLICITIES = (1, 2, 4, 8)
_G6_MULTIPLICITIES = (1, 2)


@dataclass(frozen=True)
class IsoparametricFamily:
    """
    An isoparametric family of hypersurfaces in the unit sphere S^n.

    The family is described by the number ``g`` of distinct principal
    curvatures and the multiplicities ``(m_plus, m_minus)``; the
    multiplicities of the ``g`` curvatures alternate ``m_plus, m_minus,
    ...``. ``f`` denotes the isoparametric function with image
    ``[-1, 1]``, ``M_plus = f^{-1}(1)``.

    Attributes
    ----------
    g : int
        One of 1, 2, 3, 4, 6.
    m_plus, m_minus : int
        Positive multiplicities; equal when ``g`` is odd.
    """

    g: int
    m_plus: int
    m_minus: int

    def __post_init__(self):
        if self.g not in ALLOWED_G:
            raise DomainError(f"g must be one of {ALLOWED_G}, got {self.g}")
        if min(self.m_plus, self.m_minus) < 1:
            raise DomainError(
                f"multiplicities must be positive, got "
                f"({self.m_plus}, {self.m_minus})"
            )
        if self.g % 2 == 1 and self.m_plus != self.m_minus:
            raise DomainError(
                f"g={self.g} forces equal multiplicities, got "
                f"({self.m_plus}, {self.m_minus})"
            )
        if self.g == 3 and self.m_plus not in _G3_MULTIPLICITIES:
            raise DomainError(
                f"g=3 needs m in {_G3_MULTIPLICITIES}, got {self.m_plus}"
            )
        if self.g == 6 and (
            self.m_plus != self.m_minus
            or self.m_plus not in _G6_MULTIPLICITIES
        ):
            raise DomainError(
                f"g=6 needs m_plus = m_minus in {_G6_MULTIPLICITIES}, got "
                f"({self.m_plus}, {self.m_minus})"
            )

    @property
    def n(self):
        """Dimension of the ambient sphere, ``n - 1 = g (m+ + m-) / 2``."""
        return self.g * (self.m_plus + self.m_minus) // 2 + 1

    @property
    def c(self):
        return self.g * self.g * (self.m_minus - self.m_plus) // 2

    @property
    def f0(self):
        """The minimal level ``c / (g (n - 1))`` as an exact fraction."""
        return Fraction(self.c, self.g * (self.n - 1))

    @property
    def S(self):
        """Squared norm of the second fundamental form of the minimal leaf."""
        return (self.g - 1) * (self.n - 1)

    @property
    def nu(self):
        return self.m_plus + self.m_minus

    @property
    def multiplicities(self):
        return tuple(
            self.m_plus if k % 2 == 0 else self.m_minus for k in range(self.g)
        )

    @property
    def case_a(self):
        """``(m+, m-) = (1, 1)``: the defect ``a`` vanishes identically."""
        return self.m_plus == 1 and self.m_minus == 1

    def to_dict(self):
        return {
            "g": self.g,
            "m_plus": self.m_plus,
            "m_minus": self.m_minus,
            "n": self.n,
            "c": self.c,
            "f0": float(self.f0),
            "S": self.S,
        }
