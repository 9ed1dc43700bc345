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
The classification of homogeneous isoparametric hypersurfaces in spheres.

Each family is the principal orbit of the isotropy representation of a
rank-two symmetric space ``U / K``; ``K_0`` is the principal isotropy
group and ``K_+-`` are the isotropy groups of the focal orbits ``M_+-``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

__all__ = (
    "HomogeneousRow",
    "TABLE",
    "homogeneous_lookup",
    "table_csv",
)


@dataclass(frozen=True)
class HomogeneousRow:
    """
    One row of the classification.

    For the infinite families, rows in :data:`TABLE` keep the printed
    parameter form (e.g. ``"(p, q)"``) while :func:`homogeneous_lookup`
    returns the row instantiated at the requested multiplicities.
    """

    g: int
    multiplicities: str
    symmetric_pair: Tuple[str, str]
    K0: str
    K_plus: str
    K_minus: str
    condition: str = ""

    def to_dict(self):
        return {
            "g": self.g,
            "multiplicities": self.multiplicities,
            "symmetric_pair": list(self.symmetric_pair),
            "K0": self.K0,
            "K_plus": self.K_plus,
            "K_minus": self.K_minus,
            "condition": self.condition,
        }

    def to_csv_row(self):
        U, K = self.symmetric_pair
        return [
            self.g,
            self.multiplicities,
            f"({U}, {K})",
            self.K0,
            self.K_plus,
            self.K_minus,
        ]


@dataclass(frozen=True)
class _Entry:
    row: HomogeneousRow
    # maps (m_plus, m_minus) to the parameter of the infinite family
    match: Optional[Callable[[int, int], Optional[int]]] = None
    realize: Optional[Callable[[int, int, int], HomogeneousRow]] = None

    def lookup(self, m_plus, m_minus):
        if self.match is None:
            if self.row.multiplicities == f"({m_plus}, {m_minus})":
                return self.row
            return None
        param = self.match(m_plus, m_minus)
        if param is None:
            return None
        return self.realize(m_plus, m_minus, param)


def _fixed(g, mults, U, K, K0, K_plus, K_minus):
    return _Entry(HomogeneousRow(g, f"{mults}", (U, K), K0, K_plus, K_minus))


def _match_sphere(m_plus, m_minus):
    return m_plus + 1 if m_plus == m_minus else None


def _realize_sphere(m_plus, m_minus, n):
    return HomogeneousRow(
        1,
        f"({m_plus}, {m_minus})",
        (f"S^1×SO({n + 1})", f"SO({n})"),
        f"SO({n - 1})",
        f"SO({n})",
        f"SO({n})",
    )


def _realize_product(p, q, _):
    return HomogeneousRow(
        2,
        f"({p}, {q})",
        (f"SO({p + 2})×SO({q + 2})", f"SO({p + 1})×SO({q + 1})"),
        f"SO({p})×SO({q})",
        f"SO({p + 1})×SO({q})",
        f"SO({p})×SO({q + 1})",
    )


def _match_real_grassmannian(m_plus, m_minus):
    return m_minus + 2 if m_plus == 1 else None


def _realize_real_grassmannian(m_plus, m_minus, m):
    return HomogeneousRow(
        4,
        f"({m_plus}, {m_minus})",
        (f"SO({m + 2})", f"SO({m})×SO(2)"),
        f"SO({m - 2})×Z2",
        f"SO({m - 2})×SO(2)",
        f"O({m - 1})",
    )


def _match_complex_grassmannian(m_plus, m_minus):
    if m_plus != 2 or m_minus < 3 or m_minus % 2 == 0:
        return None
    return (m_minus + 3) // 2


def _realize_complex_grassmannian(m_plus, m_minus, m):
    return HomogeneousRow(
        4,
        f"({m_plus}, {m_minus})",
        (f"SU({m + 2})", f"S(U({m})×U(2))"),
        f"S(U({m - 2})×T^2)",
        f"S(U({m - 2})×U(2))",
        f"S(U({m - 1})×T^2)",
    )


def _match_quaternionic_grassmannian(m_plus, m_minus):
    if m_plus != 4 or m_minus < 3 or (m_minus + 5) % 4 != 0:
        return None
    return (m_minus + 5) // 4


def _realize_quaternionic_grassmannian(m_plus, m_minus, m):
    return HomogeneousRow(
        4,
        f"({m_plus}, {m_minus})",
        (f"Sp({m + 2})", f"Sp({m})×Sp(2)"),
        f"Sp({m - 2})×Sp(1)^2",
        f"Sp({m - 2})×Sp(2)",
        f"Sp({m - 1})×Sp(1)^2",
    )


_ENTRIES = (
    _Entry(
        HomogeneousRow(
            1,
            "n-1",
            ("S^1×SO(n+1)", "SO(n)"),
            "SO(n-1)",
            "SO(n)",
            "SO(n)",
            "n >= 2",
        ),
        _match_sphere,
        _realize_sphere,
    ),
    _Entry(
        HomogeneousRow(
            2,
            "(p, q)",
            ("SO(p+2)×SO(q+2)", "SO(p+1)×SO(q+1)"),
            "SO(p)×SO(q)",
            "SO(p+1)×SO(q)",
            "SO(p)×SO(q+1)",
            "p, q >= 1",
        ),
        lambda p, q: 0 if min(p, q) >= 1 else None,
        _realize_product,
    ),
    _fixed(
        3, (1, 1), "SU(3)", "SO(3)", "Z2+Z2", "S(O(2)×O(1))", "S(O(1)×O(2))"
    ),
    _fixed(
        3,
        (2, 2),
        "SU(3)×SU(3)",
        "SU(3)",
        "T^2",
        "S(U(2)×U(1))",
        "S(U(1)×U(2))",
    ),
    _fixed(
        3, (4, 4), "SU(6)", "Sp(3)", "Sp(1)^3", "Sp(2)×Sp(1)", "Sp(2)×Sp(1)"
    ),
    _fixed(3, (8, 8), "E_6", "F_4", "Spin(8)", "Spin(9)", "Spin(9)"),
    _fixed(
        4, (2, 2), "SO(5)×SO(5)", "SO(5)", "T^2", "SO(2)×SO(3)", "U(2)"
    ),
    _fixed(
        4,
        (4, 5),
        "SO(10)",
        "U(5)",
        "SU(2)^2×U(1)",
        "Sp(2)×U(1)",
        "SU(2)×U(3)",
    ),
    _fixed(
        4,
        (6, 9),
        "E_6",
        "T·Spin(10)",
        "U(1)·Spin(6)",
        "U(1)·Spin(7)",
        "S^1·SU(5)",
    ),
    _Entry(
        HomogeneousRow(
            4,
            "(1, m-2)",
            ("SO(m+2)", "SO(m)×SO(2)"),
            "SO(m-2)×Z2",
            "SO(m-2)×SO(2)",
            "O(m-1)",
            "m >= 3",
        ),
        _match_real_grassmannian,
        _realize_real_grassmannian,
    ),
    _Entry(
        HomogeneousRow(
            4,
            "(2, 2m-3)",
            ("SU(m+2)", "S(U(m)×U(2))"),
            "S(U(m-2)×T^2)",
            "S(U(m-2)×U(2))",
            "S(U(m-1)×T^2)",
            "m >= 3",
        ),
        _match_complex_grassmannian,
        _realize_complex_grassmannian,
    ),
    _Entry(
        HomogeneousRow(
            4,
            "(4, 4m-5)",
            ("Sp(m+2)", "Sp(m)×Sp(2)"),
            "Sp(m-2)×Sp(1)^2",
            "Sp(m-2)×Sp(2)",
            "Sp(m-1)×Sp(1)^2",
            "m >= 2",
        ),
        _match_quaternionic_grassmannian,
        _realize_quaternionic_grassmannian,
    ),
    _fixed(6, (1, 1), "G_2", "SO(4)", "Z2+Z2", "O(2)", "O(2)"),
    _fixed(6, (2, 2), "G_2×G_2", "G_2", "T^2", "U(2)", "U(2)"),
)

TABLE = tuple(entry.row for entry in _ENTRIES)


def homogeneous_lookup(g, m_plus, m_minus):
    """
    Find the homogeneous family with ``g`` and ordered multiplicities
    ``(m_plus, m_minus)``.

    Returns
    -------
    out : HomogeneousRow or None
        The row instantiated at the given multiplicities, ``None`` when
        no homogeneous family has them.
    """
    for entry in _ENTRIES:
        if entry.row.g != g:
            continue
        row = entry.lookup(m_plus, m_minus)
        if row is not None:
            return row
    return None


def table_csv(rows=TABLE):
    """
    Render rows as CSV with the columns
    ``g, (m+, m-), (U, K), K0, K+, K-``.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["g", "(m+, m-)", "(U, K)", "K0", "K+", "K-"])
    for row in rows:
        writer.writerow(row.to_csv_row())
    return buf.getvalue()
