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
from functools import reduce
from typing import FrozenSet, Optional

import numpy as np
import sympy

from isodouble.clifford import delta_dim
from isodouble.config import VERDICT_NAMES, Verdict
from isodouble.errors import DomainError, DomainWarning, InapplicableCriterion
from isodouble.runtime import runtime

__all__ = (
    "Distinction",
    "FKMTopologyRecord",
    "WuResidue",
    "distinguish",
    "fkm_record",
    "half_factorial_residue",
    "pontrjagin_top",
    "wilson_check",
    "wu_residue",
    "wu_residue_from_pontrjagin",
)

# products of two residues below this modulus fit in int64
_INT64_SAFE_MODULUS = 3_000_000_000
_VECTORIZED_TERMS = 10_000_000

NOT_PRIME_REASON = "p = m/2+1 not prime"


def _require_mod4(m):
    if m < 4 or m % 4 != 0:
        raise InapplicableCriterion(
            f"m must be a positive multiple of 4, got m={m}"
        )


def _beta(m):
    return 1 if m % 8 == 0 else 2


def _wu_prime(m):
    _require_mod4(m)
    p = m // 2 + 1
    if not sympy.isprime(p):
        raise InapplicableCriterion(NOT_PRIME_REASON)
    return p


def pontrjagin_top(m, q):
    """
    Top Pontrjagin number ``p_{m/4}(xi) = q beta(m) (m/2 - 1)!`` of the
    ``S^{l-1}`` bundle over ``S^m`` underlying ``M_-`` of an FKM family.

    The value is the coefficient of a generator of ``H^m(S^m; Z)``; the
    class of the normal bundle of ``M_-`` in the sphere is its negative.

    Parameters
    ----------
    m : int
        Multiple of 4.
    q : int
        Index of the Clifford system.

    Returns
    -------
    out : int
        Exact, arbitrarily large.
    """
    _require_mod4(m)
    return int(q) * _beta(m) * math.factorial(m // 2 - 1)


@dataclass(frozen=True)
class WuResidue:
    """
    Mod-``p`` residue of the first Wu class of the normal sphere bundle.

    The sign of the residue depends on the choice of a generator, so
    only the unordered `pair` ``{residue, -residue mod p}`` is an
    invariant.
    """

    p: int
    residue: int

    @property
    def pair(self) -> FrozenSet[int]:
        return frozenset({self.residue, -self.residue % self.p})

    def to_dict(self):
        return {"p": self.p, "residue": self.residue, "pair": self.pair}


def wu_residue(m, q):
    """
    Residue of the first Wu class modulo ``p = m/2 + 1``.

    Parameters
    ----------
    m : int
        Multiple of 4 with ``m/2 + 1`` prime.
    q : int

    Returns
    -------
    out : WuResidue

    Raises
    ------
    InapplicableCriterion
        If ``m`` is not a multiple of 4 or ``m/2 + 1`` is not prime.
    """
    p = _wu_prime(m)
    sign = (-1) ** (m // 4)
    if m % 8 == 0:
        residue = sign * q * ((p - 1) // 2)
    else:
        residue = -sign * q
    return WuResidue(p, residue % p)


def wu_residue_from_pontrjagin(m, q):
    """
    The Wu residue recomputed from :func:`pontrjagin_top`.

    Newton's identities reduce the first Wu class to
    ``(-1)^{r+1} r p_r`` modulo ``p`` with ``r = m/4``, all lower
    Pontrjagin classes vanishing.
    """
    p = _wu_prime(m)
    r = m // 4
    top = -pontrjagin_top(m, q)
    return WuResidue(p, ((-1) ** (r + 1) * r * top) % p)


def _factorial_mod(k, p):
    if p < _INT64_SAFE_MODULUS and k <= _VECTORIZED_TERMS:
        values = np.arange(1, k + 1, dtype=np.int64) % p
        if values.size == 0:
            return 1 % p
        # pairwise products keep every intermediate below p**2
        while values.size > 1:
            if values.size % 2:
                values = np.append(values, 1)
            values = (values[0::2] * values[1::2]) % p
        return int(values[0])
    return reduce(lambda acc, i: acc * i % p, range(1, k + 1), 1)


def wilson_check(p):
    """Wilson's criterion: ``(p - 1)! = -1 (mod p)``."""
    p = int(p)
    if p < 2:
        raise DomainError(f"Wilson's criterion needs p >= 2, got {p}")
    return (_factorial_mod(p - 1, p) + 1) % p == 0


def half_factorial_residue(p):
    """
    ``2^{-1} (p - 1)!`` modulo an odd prime `p`; equals ``(p - 1) / 2``.
    """
    p = int(p)
    if p < 3 or not sympy.isprime(p):
        raise DomainError(f"need an odd prime, got {p}")
    return pow(2, -1, p) * _factorial_mod(p - 1, p) % p


@dataclass(frozen=True)
class Distinction:
    """
    Verdict of the mod-``p`` criterion for two FKM doubles ``D(S^n_-)``.

    Attributes
    ----------
    verdict : Verdict
    p : int or None
    pairs : tuple
        The unordered residue pairs of both indices when applicable.
    reason : str or None
        Why the criterion does not apply.
    """

    verdict: Verdict
    p: Optional[int] = None
    pairs: tuple = ()
    reason: Optional[str] = None

    def to_dict(self):
        return {
            "verdict": VERDICT_NAMES[self.verdict],
            "p": self.p,
            "pairs": list(self.pairs),
            "reason": self.reason,
        }


def distinguish(m, l, q1, q2):  # noqa E741
    """
    Decide whether two FKM doubles ``D(S^n_-)(m, l, q)`` have different
    homotopy types.

    With ``p = m/2 + 1`` an odd prime, the doubles differ when
    ``q1 != +-q2 (mod p)``.

    Parameters
    ----------
    m : int
    l : int
        A multiple of ``delta(m)``.
    q1, q2 : int
        Indices; each must have the parity of ``l / delta(m)``,
        otherwise a ``DomainWarning`` is emitted.

    Returns
    -------
    out : Distinction
        ``DISTINCT``, ``INCONCLUSIVE`` when the residue pairs agree, or
        ``INAPPLICABLE`` with a reason.
    """
    if m % 4 != 0:
        return Distinction(
            Verdict.INAPPLICABLE, reason=f"m={m} is not a multiple of 4"
        )
    delta = delta_dim(m)
    if l < delta or l % delta != 0:
        raise DomainError(f"l={l} is not a positive multiple of {delta}")
    copies = l // delta
    for q in (q1, q2):
        if (q - copies) % 2 != 0:
            runtime.warn(
                f"index q={q} violates q = l/delta(m) = {copies} (mod 2)",
                category=DomainWarning,
            )
    try:
        first, second = wu_residue(m, q1), wu_residue(m, q2)
    except InapplicableCriterion as exc:
        return Distinction(Verdict.INAPPLICABLE, reason=exc.reason)
    pairs = (first.pair, second.pair)
    if first.pair == second.pair:
        return Distinction(Verdict.INCONCLUSIVE, first.p, pairs)
    return Distinction(Verdict.DISTINCT, first.p, pairs)


@dataclass(frozen=True)
class FKMTopologyRecord:
    """Characteristic data of the focal submanifold ``M_-(m, l, q)``."""

    m: int
    l: int  # noqa E741
    q: int
    beta: int
    pontrjagin_top: int
    wu_prime: Optional[int]
    wu_residue: Optional[WuResidue]

    def to_dict(self):
        return {
            "m": self.m,
            "l": self.l,
            "q": self.q,
            "beta": self.beta,
            # exact, may exceed the range of JSON numbers
            "pontrjagin_top": str(self.pontrjagin_top),
            "zeta_pontrjagin_top": str(-self.pontrjagin_top),
            "wu_prime": self.wu_prime,
            "wu_residue": self.wu_residue,
        }


def fkm_record(m, l, q):  # noqa E741
    _require_mod4(m)
    try:
        residue = wu_residue(m, q)
    except InapplicableCriterion:
        residue = None
    return FKMTopologyRecord(
        m,
        l,
        q,
        _beta(m),
        pontrjagin_top(m, q),
        None if residue is None else residue.p,
        residue,
    )
