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
from functools import lru_cache, reduce
from typing import Optional, Tuple

import numpy as np

from isodouble.errors import ConsistencyError, DomainError

__all__ = ("IrreducibleModule", "build_irreducible", "delta_dim")

# dim of the irreducible real module of C_{m-1} for m = 1, ..., 8
_DELTA_BASE = (1, 2, 4, 4, 8, 8, 8, 8)

_I = np.array([[1, 0], [0, 1]], dtype=np.int64)
_J = np.array([[0, -1], [1, 0]], dtype=np.int64)
_K = np.array([[1, 0], [0, -1]], dtype=np.int64)
_L = np.array([[0, 1], [1, 0]], dtype=np.int64)

# Pairwise anticommuting complex structures written as Kronecker words in
# J, K, L. J, K, L anticommute with each other, so two words anticommute
# iff they differ in an odd number of non-identity slots. An odd number of
# J's makes a word skew with square -I.
_WORDS = {
    1: (),
    2: ((_J,),),
    4: ((_J, _I), (_K, _J), (_L, _J)),
    8: (
        (_J, _J, _J),
        (_J, _K, _I),
        (_J, _L, _I),
        (_I, _J, _K),
        (_I, _J, _L),
        (_K, _I, _J),
        (_L, _I, _J),
    ),
}


def _kron(*factors):
    return reduce(np.kron, factors)


def _product(generators, dim):
    if len(generators) == 0:
        return np.eye(dim, dtype=np.int64)
    return reduce(np.matmul, generators)


def delta_dim(m):
    """
    Dimension of the irreducible real Clifford module of C_{m-1}.

    Parameters
    ----------
    m : int
        Number of generators plus one, ``m >= 1``.

    Returns
    -------
    out : int
        ``delta(m)`` from the table ``(1, 2, 4, 4, 8, 8, 8, 8)`` extended
        by ``delta(m + 8) = 16 delta(m)``.
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise DomainError(f"delta(m) needs an integer m >= 1, got {m!r}")
    periods, rem = divmod(int(m) - 1, 8)
    return _DELTA_BASE[rem] * 16**periods


@lru_cache(maxsize=None)
def _period_generators():
    """Eight anticommuting complex structures on R^16 (C_8 module)."""
    octonions = [_kron(*word) for word in _WORDS[8]]
    gens = [np.kron(g, _K) for g in octonions]
    gens.append(np.kron(np.eye(8, dtype=np.int64), _J))
    return tuple(gens)


@lru_cache(maxsize=None)
def _generators(m):
    if m <= 8:
        words = _WORDS[delta_dim(m)][: m - 1]
        gens = [_kron(*word) for word in words]
    else:
        base = _generators(m - 8)
        period = _period_generators()
        omega = reduce(np.matmul, period)
        dim = delta_dim(m - 8)
        gens = [np.kron(e, omega) for e in base]
        gens += [np.kron(np.eye(dim, dtype=np.int64), f) for f in period]
    for g in gens:
        g.setflags(write=False)
    return tuple(gens)


@dataclass(frozen=True, eq=False)
class IrreducibleModule:
    """
    An irreducible orthogonal representation of C_{m-1} on R^delta(m).

    The generators are skew-symmetric signed permutation matrices with
    ``E_i E_j + E_j E_i = -2 delta_ij I``. For ``m = 0 (mod 4)`` there are
    two inequivalent modules told apart by the sign of ``E_1 ... E_{m-1}``,
    recorded in `chirality`.
    """

    m: int
    dimension: int
    generators: Tuple[np.ndarray, ...]
    chirality: Optional[int]

    def product(self):
        return _product(self.generators, self.dimension)


def build_irreducible(m, chirality_sign=1):
    """
    Build an irreducible module of C_{m-1}.

    Generators for ``m <= 8`` are left multiplications by the imaginary
    units of C, H and the octonions (restricted to the first ``m - 1``);
    larger ``m`` use the period-8 step ``C_{k+8} = C_k (x) C_8``.

    Parameters
    ----------
    m : int
        ``m >= 1``.
    chirality_sign : {1, -1}
        Requested sign of ``E_1 ... E_{m-1}``; ignored unless
        ``m = 0 (mod 4)``.

    Returns
    -------
    out : IrreducibleModule
    """
    dim = delta_dim(m)
    m = int(m)
    gens = list(_generators(m))
    if m % 4 != 0:
        return IrreducibleModule(m, dim, tuple(gens), None)
    if chirality_sign not in (1, -1):
        raise DomainError(
            f"chirality_sign must be +1 or -1, got {chirality_sign!r}"
        )
    eye = np.eye(dim, dtype=np.int64)
    product = _product(gens, dim)
    if np.array_equal(product, -chirality_sign * eye):
        # negating one generator flips the sign of the volume element
        flipped = -gens[0]
        flipped.setflags(write=False)
        gens[0] = flipped
    elif not np.array_equal(product, chirality_sign * eye):
        raise ConsistencyError(
            f"volume element of the C_{m - 1} module is not +-I"
        )
    return IrreducibleModule(m, dim, tuple(gens), chirality_sign)
