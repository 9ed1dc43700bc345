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
Cohomology ranks of focal submanifolds, isoparametric hypersurfaces and
their doubles, as determined by ``(g, m_plus, m_minus)`` alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from isodouble.config import RING_NAMES, SPACE_NAMES, Ring, Side, Space
from isodouble.doubling.family import IsoparametricFamily
from isodouble.errors import DomainError, UnsupportedError

__all__ = (
    "CohomologyProfile",
    "cell_structure",
    "coefficient_ring",
    "double_cohomology",
    "euler_characteristic",
    "munzner_cohomology",
    "poincare_dual",
)


@dataclass(frozen=True)
class CohomologyProfile:
    """
    Ranks of ``H^q(space; ring)`` for ``q = 0, ..., dim``.

    Attributes
    ----------
    space : Space
    ring : Ring
    ranks : tuple[int]
        One entry per degree, ``len(ranks) == dim + 1``.
    """

    space: Space
    ring: Ring
    ranks: Tuple[int, ...]

    @property
    def dim(self):
        return len(self.ranks) - 1

    @property
    def nonzero_degrees(self):
        return tuple(q for q, rank in enumerate(self.ranks) if rank)

    def to_dict(self):
        return {
            "space": SPACE_NAMES[self.space],
            "ring": RING_NAMES[self.ring],
            "dim": self.dim,
            "ranks": list(self.ranks),
        }


def coefficient_ring(m_plus, m_minus, override=None):
    """
    Coefficients for which the rank formulas hold.

    Integers when both focal submanifolds are simply connected, which is
    the case once both multiplicities exceed 1; ``Z_2`` otherwise. This is
    a safe default rather than a sharp orientability criterion.
    """
    if override is not None:
        return Ring(override)
    return Ring.INTEGERS if min(m_plus, m_minus) > 1 else Ring.MOD2


def _family(g, m_plus, m_minus):
    return IsoparametricFamily(int(g), int(m_plus), int(m_minus))


def _focal_ranks(family, dim, other):
    nu = family.nu
    return tuple(
        1 if q % nu == 0 or q % nu == other % nu else 0
        for q in range(dim + 1)
    )


def munzner_cohomology(g, m_plus, m_minus, ring=None):
    """
    Cohomology of the focal submanifolds and of a regular leaf.

    Parameters
    ----------
    g, m_plus, m_minus : int
        A valid isoparametric family.
    ring : Ring, optional
        Coefficient ring; chosen by :func:`coefficient_ring` when omitted.

    Returns
    -------
    M_plus, M_minus, Y : CohomologyProfile
        ``H^q(M_+-)`` has rank 1 exactly for ``q = 0`` or
        ``q = m_-+ (mod m_+ + m_-)``; ``Y`` has rank 1 in degrees 0 and
        ``n - 1`` and the sum of both focal ranks in between.
    """
    family = _family(g, m_plus, m_minus)
    ring = coefficient_ring(m_plus, m_minus, ring)
    n = family.n
    plus = _focal_ranks(family, n - 1 - family.m_plus, family.m_minus)
    minus = _focal_ranks(family, n - 1 - family.m_minus, family.m_plus)

    def rank(ranks, q):
        return ranks[q] if 0 <= q < len(ranks) else 0

    leaf = tuple(
        1 if q in (0, n - 1) else rank(plus, q) + rank(minus, q)
        for q in range(n)
    )
    return (
        CohomologyProfile(Space.M_PLUS, ring, plus),
        CohomologyProfile(Space.M_MINUS, ring, minus),
        CohomologyProfile(Space.Y, ring, leaf),
    )


def double_cohomology(g, m_plus, m_minus, side=Side.PLUS, ring=None):
    """
    Cohomology of the double ``D(S^n_+)`` (or ``D(S^n_-)``).

    ``D(S^n_+)`` is two copies of the region bounded by the minimal
    leaf towards ``M_+`` glued along that leaf. Its ranks are::

        H^0 = H^n = R
        H^1 = H^1(M_+)
        H^q = H^{q-1}(M_-) + H^q(M_+)       2 <= q <= n - 2
        H^{n-1} = H^{n-2}(M_-)

    and ``D(S^n_-)`` is obtained by exchanging the roles of ``M_+`` and
    ``M_-``.

    Parameters
    ----------
    g, m_plus, m_minus : int
    side : Side
    ring : Ring, optional

    Returns
    -------
    out : CohomologyProfile
    """
    side = Side(side)
    M_plus, M_minus, _ = munzner_cohomology(g, m_plus, m_minus, ring)
    n = len(M_plus.ranks) + m_plus
    if n < 3:
        raise DomainError(
            f"the rank formula for doubles needs n >= 3, got n={n}"
        )
    near, far = (M_plus, M_minus) if side == Side.PLUS else (M_minus, M_plus)

    def rank(profile, q):
        return profile.ranks[q] if 0 <= q <= profile.dim else 0

    ranks = [0] * (n + 1)
    ranks[0] = ranks[n] = 1
    ranks[1] = rank(near, 1)
    for q in range(2, n - 1):
        ranks[q] = rank(far, q - 1) + rank(near, q)
    ranks[n - 1] = rank(far, n - 2)
    space = Space.D_PLUS if side == Side.PLUS else Space.D_MINUS
    return CohomologyProfile(space, M_plus.ring, tuple(ranks))


def poincare_dual(profile):
    """Whether ``ranks[q] == ranks[dim - q]`` in every degree."""
    return profile.ranks == profile.ranks[::-1]


def euler_characteristic(profile):
    return sum((-1) ** q * rank for q, rank in enumerate(profile.ranks))


def cell_structure(g, m_plus, m_minus):
    """
    Cell dimensions of ``M_-`` for ``g = 4``:
    ``M_- = S^{m_+} u e^{m_+ + m_-} u e^{2 m_+ + m_-}``.

    Raises
    ------
    UnsupportedError
        If ``g != 4``.
    """
    if g != 4:
        raise UnsupportedError(f"cell structure only known for g=4, got {g}")
    _family(g, m_plus, m_minus)
    return [0, m_plus, m_plus + m_minus, 2 * m_plus + m_minus]
