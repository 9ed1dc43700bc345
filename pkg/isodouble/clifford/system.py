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

import json
from dataclasses import dataclass
from functools import reduce

import numpy as np
import scipy.linalg

from isodouble.config import CLIFFORD_TOL, INDEX_TRACE_TOL, MAX_AMBIENT_DIM
from isodouble.errors import (
    ConsistencyError,
    DomainError,
    DomainWarning,
    InapplicableCriterion,
)
from isodouble.report import VerificationReport, dumps
from isodouble.runtime import runtime

from .modules import build_irreducible, delta_dim

__all__ = (
    "CliffordSystem",
    "build_system",
    "index",
    "load_system",
    "p0_eigenvectors",
    "save_system",
    "verify_system",
)


@dataclass(frozen=True, eq=False)
class CliffordSystem:
    """
    A symmetric Clifford system ``P_0, ..., P_m`` on R^{2l}.

    ``E_+(P_0)`` carries ``a`` copies of the module with positive
    chirality and ``b`` copies of the negative one, so the index is
    ``q = a - b``. The constructor only checks shapes: a corrupted system
    can still be loaded and handed to :func:`verify_system`.

    Attributes
    ----------
    m, l, a, b : int
    matrices : numpy.ndarray
        Array of shape ``(m + 1, 2l, 2l)``.
    """

    m: int
    l: int  # noqa E741
    a: int
    b: int
    matrices: np.ndarray

    def __post_init__(self):
        if self.m < 1 or self.a < 0 or self.b < 0 or self.a + self.b < 1:
            raise DomainError(
                f"invalid Clifford system parameters m={self.m}, "
                f"a={self.a}, b={self.b}"
            )
        if self.l != (self.a + self.b) * delta_dim(self.m):
            raise DomainError(
                f"l={self.l} differs from (a+b)*delta(m)="
                f"{(self.a + self.b) * delta_dim(self.m)}"
            )
        shape = (self.m + 1, 2 * self.l, 2 * self.l)
        if self.matrices.shape != shape:
            raise DomainError(
                f"expected matrices of shape {shape}, "
                f"got {self.matrices.shape}"
            )
        self.matrices.setflags(write=False)

    @property
    def q(self):
        return self.a - self.b

    @property
    def dim(self):
        return 2 * self.l

    def to_dict(self):
        return {
            "m": self.m,
            "l": self.l,
            "a": self.a,
            "b": self.b,
            "q": self.q,
            "matrices": self.matrices.tolist(),
        }

    def to_json(self):
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        try:
            m, l, a, b = (int(data[k]) for k in ("m", "l", "a", "b"))
            raw = data["matrices"]
            matrices = np.asarray(raw)
            if matrices.dtype.kind not in "iuf":
                raise DomainError("matrix entries must be numbers")
            if matrices.dtype.kind != "f":
                matrices = matrices.astype(np.int64)
            elif not np.isfinite(matrices).all():
                raise DomainError("matrix entries must be finite")
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed Clifford system: {exc}") from exc
        if "q" in data and data["q"] != a - b:
            raise DomainError(
                f"stored index q={data['q']} differs from a-b={a - b}"
            )
        return cls(m, l, a, b, matrices)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"malformed Clifford system: {exc}") from exc
        if not isinstance(data, dict):
            raise DomainError("malformed Clifford system: not an object")
        return cls.from_dict(data)


def save_system(system, path):
    with open(path, "w") as f:
        f.write(system.to_json())


def load_system(path):
    with open(path, "r") as f:
        return CliffordSystem.from_json(f.read())


def build_system(m, a, b):
    """
    Assemble the Clifford system with ``E_+(P_0) = a Delta^+ + b Delta^-``.

    ``P_0 = diag(I, -I)``, ``P_1 = [[0, I], [I, 0]]`` and
    ``P_{i+1} = [[0, E_i], [-E_i, 0]]`` where ``E_i`` acts block-diagonally
    on the ``a + b`` module copies.

    Parameters
    ----------
    m : int
        ``m >= 1``.
    a, b : int
        Nonnegative copy counts with ``a + b >= 1``.

    Returns
    -------
    out : CliffordSystem

    Notes
    -----
    A system with ``l - m - 1 <= 0`` is still built, but it does not give
    an FKM family; a ``DomainWarning`` is emitted.
    """
    if a < 0 or b < 0 or a + b < 1:
        raise DomainError(f"need a, b >= 0 and a + b >= 1, got a={a}, b={b}")
    delta = delta_dim(m)
    m, a, b = int(m), int(a), int(b)
    l = (a + b) * delta  # noqa E741
    if 2 * l > MAX_AMBIENT_DIM:
        raise DomainError(
            f"ambient dimension 2l={2 * l} exceeds {MAX_AMBIENT_DIM}"
        )
    if l - m - 1 <= 0:
        runtime.warn(
            f"l - m - 1 = {l - m - 1} <= 0: (m={m}, l={l}) does not define "
            "an FKM isoparametric family",
            category=DomainWarning,
        )

    plus = build_irreducible(m, 1)
    minus = build_irreducible(m, -1)
    eye = np.eye(l, dtype=np.int64)
    zero = np.zeros((l, l), dtype=np.int64)
    matrices = [
        np.block([[eye, zero], [zero, -eye]]),
        np.block([[zero, eye], [eye, zero]]),
    ]
    for i in range(m - 1):
        blocks = [plus.generators[i]] * a + [minus.generators[i]] * b
        e = scipy.linalg.block_diag(*blocks).astype(np.int64)
        matrices.append(np.block([[zero, e], [-e, zero]]))
    return CliffordSystem(m, l, a, b, np.stack(matrices))


def verify_system(system, tol=None):
    """
    Check the Clifford relations of `system`.

    Measures, in Frobenius norm, ``P_i P_j + P_j P_i - 2 delta_ij I`` over
    all pairs, ``P_i - P_i^T`` and ``P_i P_i^T - I``.

    Parameters
    ----------
    system : CliffordSystem
    tol : float, optional
        Acceptance threshold, 1e-12 by default.

    Returns
    -------
    out : VerificationReport
    """
    tol = runtime.tolerance(CLIFFORD_TOL) if tol is None else tol
    mats = system.matrices.astype(np.float64)
    count, dim = mats.shape[0], mats.shape[1]
    eye = np.eye(dim)

    worst = {
        "anticommutator": (0.0, None),
        "symmetry": (0.0, None),
        "orthogonality": (0.0, None),
    }

    def record(kind, residual, where):
        residual = float(residual)
        if not np.isfinite(residual):
            residual = np.inf
        if residual > worst[kind][0] or worst[kind][1] is None:
            worst[kind] = (residual, where)

    for i in range(count):
        left = np.matmul(mats[i], mats[i:])
        right = np.matmul(mats[i:], mats[i])
        for offset in range(count - i):
            j = i + offset
            target = 2.0 * eye if i == j else 0.0
            residual = np.linalg.norm(left[offset] + right[offset] - target)
            record("anticommutator", residual, [i, j])
        record("symmetry", np.linalg.norm(mats[i] - mats[i].T), [i])
        record(
            "orthogonality", np.linalg.norm(mats[i] @ mats[i].T - eye), [i]
        )

    details = tuple(
        {
            "kind": kind,
            "residual": residual,
            "indices": where,
            "pass": residual <= tol,
        }
        for kind, (residual, where) in worst.items()
    )
    worst_residual = max(residual for residual, _ in worst.values())
    return VerificationReport(
        check_name="clifford_relations",
        passed=worst_residual <= tol,
        worst_residual=worst_residual,
        tolerance=tol,
        samples=count * (count + 1) // 2,
        seed=None,
        details=details,
    )


def index(system):
    """
    The index ``q = tr(P_0 P_1 ... P_m) / (2 delta(m))``.

    Parameters
    ----------
    system : CliffordSystem
        A system with ``m = 0 (mod 4)``.

    Returns
    -------
    out : int

    Raises
    ------
    InapplicableCriterion
        If ``m`` is not a multiple of 4.
    ConsistencyError
        If the trace is not an even multiple of ``delta(m)``, disagrees
        with the stored ``a - b`` or breaks ``q = a + b (mod 2)``.
    """
    if system.m % 4 != 0:
        raise InapplicableCriterion(
            f"the index is only defined for m = 0 (mod 4), got m={system.m}"
        )
    delta = delta_dim(system.m)
    mats = system.matrices
    if mats.dtype.kind == "f":
        trace = float(np.trace(reduce(np.matmul, mats)))
        if not np.isfinite(trace):
            raise ConsistencyError(f"trace {trace} is not finite")
    else:
        # signed permutation matrices, the product stays exact
        trace = int(np.trace(reduce(np.matmul, mats)))
    q = int(round(trace / (2 * delta)))
    if abs(trace - 2 * q * delta) > INDEX_TRACE_TOL:
        raise ConsistencyError(
            f"trace {trace} is not an even multiple of delta(m)={delta}"
        )
    if q != system.q:
        raise ConsistencyError(
            f"trace index {q} differs from stored index a-b={system.q}"
        )
    if (q - (system.a + system.b)) % 2 != 0:
        raise ConsistencyError(
            f"index {q} violates q = a+b (mod 2) with a+b="
            f"{system.a + system.b}"
        )
    return q


def p0_eigenvectors(system, sign=1):
    """
    Orthonormal eigenvectors of ``P_0`` for the eigenvalue `sign`.

    With ``P_0 = diag(I, -I)`` these are coordinate vectors; all of them
    lie on the focal submanifold ``M_-`` of the FKM family.
    """
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    eye = np.eye(system.dim)
    return eye[: system.l] if sign == 1 else eye[system.l :]
