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

import csv
import io

import pytest

from isodouble.clifford import delta_dim
from isodouble.config import FamilyKind, Ring, Side, Space
from isodouble.errors import DomainError, UnsupportedError
from isodouble.topology import (
    TABLE,
    cell_structure,
    classify_family,
    coefficient_ring,
    double_cohomology,
    double_descriptor,
    euler_characteristic,
    fkm_parameters,
    homogeneous_lookup,
    munzner_cohomology,
    poincare_dual,
    table_csv,
)


def _families():
    """Multiplicities of every homogeneous family up to n = 40 and
    of FKM families with l <= 32."""
    out = [(1, m, m) for m in range(2, 8)]
    out += [(2, p, q) for p in range(1, 6) for q in range(1, 6)]
    out += [(3, m, m) for m in (1, 2, 4, 8)]
    out += [(6, 1, 1), (6, 2, 2), (4, 2, 2), (4, 4, 5), (4, 6, 9)]
    out += [(4, 1, k) for k in range(1, 8)]
    out += [(4, 2, k) for k in range(3, 12, 2)]
    out += [(4, 4, k) for k in range(3, 20, 4)]
    for m in range(1, 16):
        delta = delta_dim(m)
        for l in range(delta, 33, delta):  # noqa E741
            if l - m - 1 > 0:
                out.append((4, m, l - m - 1))
    return sorted(set(out))


def test_focal_cohomology():
    M_plus, M_minus, Y = munzner_cohomology(4, 4, 3)
    assert M_plus.space == Space.M_PLUS and M_minus.space == Space.M_MINUS
    assert M_plus.ring == Ring.INTEGERS
    assert M_plus.dim == 10 and M_minus.dim == 11 and Y.dim == 14
    assert M_plus.nonzero_degrees == (0, 3, 7, 10)
    assert M_minus.nonzero_degrees == (0, 4, 7, 11)
    assert Y.nonzero_degrees == (0, 3, 4, 7, 10, 11, 14)
    assert Y.ranks[7] == 2
    assert sum(Y.ranks) == 2 * 4


def test_double_cohomology():
    D = double_cohomology(4, 4, 3, Side.PLUS)
    assert D.space == Space.D_PLUS
    assert D.dim == 15
    assert D.nonzero_degrees == (0, 3, 5, 7, 8, 10, 12, 15)
    assert set(D.ranks) == {0, 1}
    D = double_cohomology(4, 4, 3, Side.MINUS)
    assert D.space == Space.D_MINUS
    assert D.nonzero_degrees == (0, 4, 7, 8, 11, 15)
    assert D.ranks[4] == D.ranks[11] == 2
    data = D.to_dict()
    assert data["space"] == "D_minus" and data["ring"] == "Z"
    assert len(data["ranks"]) == 16


def test_product_of_spheres():
    # D(S^n_+) of a g = 2 family is S^{m-} x S^{m+ + 1}
    for p, q in [(1, 1), (2, 3), (3, 2), (4, 4)]:
        D = double_cohomology(2, p, q, Side.PLUS)
        expected = {0, q, p + 1, p + q + 1}
        assert set(D.nonzero_degrees) == expected
        assert sum(D.ranks) == 4


def test_sphere_doubles():
    for m in range(2, 8):
        D = double_cohomology(1, m, m)
        assert D.nonzero_degrees == (0, m + 1)


def test_double_too_small():
    with pytest.raises(DomainError):
        double_cohomology(1, 1, 1)


def test_poincare_duality():
    for g, m_plus, m_minus in _families():
        for side in (Side.PLUS, Side.MINUS):
            D = double_cohomology(g, m_plus, m_minus, side)
            assert poincare_dual(D), (g, m_plus, m_minus, side)
            if D.dim % 2 == 1:
                assert euler_characteristic(D) == 0
        for profile in munzner_cohomology(g, m_plus, m_minus)[:2]:
            assert poincare_dual(profile), (g, m_plus, m_minus)


def test_coefficient_ring():
    assert coefficient_ring(1, 3) == Ring.MOD2
    assert coefficient_ring(2, 3) == Ring.INTEGERS
    assert coefficient_ring(2, 3, Ring.MOD2) == Ring.MOD2
    assert munzner_cohomology(6, 1, 1)[0].ring == Ring.MOD2
    M_plus, _, _ = munzner_cohomology(4, 4, 3, ring=Ring.MOD2)
    assert M_plus.ring == Ring.MOD2


def test_cell_structure():
    for m_plus, m_minus in [(4, 3), (1, 2), (2, 5), (6, 9)]:
        cells = cell_structure(4, m_plus, m_minus)
        assert cells == [0, m_plus, m_plus + m_minus, 2 * m_plus + m_minus]
        _, M_minus, _ = munzner_cohomology(4, m_plus, m_minus)
        assert tuple(cells) == M_minus.nonzero_degrees
    with pytest.raises(UnsupportedError):
        cell_structure(3, 2, 2)


def test_homogeneous_lookup():
    row = homogeneous_lookup(4, 2, 2)
    assert row.symmetric_pair == ("SO(5)×SO(5)", "SO(5)")
    row = homogeneous_lookup(4, 1, 3)
    assert row.symmetric_pair == ("SO(7)", "SO(5)×SO(2)")
    assert row.K_minus == "O(4)"
    row = homogeneous_lookup(4, 2, 3)
    assert row.symmetric_pair == ("SU(5)", "S(U(3)×U(2))")
    row = homogeneous_lookup(4, 4, 3)
    assert row.symmetric_pair == ("Sp(4)", "Sp(2)×Sp(2)")
    assert row.multiplicities == "(4, 3)"
    row = homogeneous_lookup(1, 3, 3)
    assert row.symmetric_pair == ("S^1×SO(5)", "SO(4)")
    row = homogeneous_lookup(2, 2, 5)
    assert row.symmetric_pair == ("SO(4)×SO(7)", "SO(3)×SO(6)")
    assert homogeneous_lookup(3, 8, 8).symmetric_pair == ("E_6", "F_4")
    assert homogeneous_lookup(6, 1, 1).symmetric_pair == ("G_2", "SO(4)")
    # multiplicities are ordered
    assert homogeneous_lookup(4, 3, 4) is None
    assert homogeneous_lookup(4, 2, 4) is None
    assert homogeneous_lookup(4, 7, 8) is None
    assert homogeneous_lookup(3, 3, 3) is None


def test_table():
    assert len(TABLE) == 14
    assert len([row for row in TABLE if row.g == 3]) == 4
    assert [row.g for row in TABLE] == sorted(row.g for row in TABLE)
    text = table_csv()
    lines = text.splitlines()
    assert lines[0] == 'g,"(m+, m-)","(U, K)",K0,K+,K-'
    assert len(lines) == 15
    records = list(csv.reader(io.StringIO(text)))
    assert records[1] == [
        "1",
        "n-1",
        "(S^1×SO(n+1), SO(n))",
        "SO(n-1)",
        "SO(n)",
        "SO(n)",
    ]
    g3 = table_csv([row for row in TABLE if row.g == 3]).splitlines()
    assert len(g3) == 5
    assert all(line.startswith("3,") for line in g3[1:])


def test_fkm_parameters():
    assert fkm_parameters(4, 3) == (4, 8)
    assert fkm_parameters(3, 4) == (3, 8)
    assert fkm_parameters(3, 3) is None
    assert fkm_parameters(1, 1) == (1, 3)


def test_classify_family():
    assert classify_family(4, 4, 3) == FamilyKind.HOMOGENEOUS_AND_FKM
    assert classify_family(4, 3, 4) == FamilyKind.HOMOGENEOUS_AND_FKM
    assert classify_family(4, 7, 8) == FamilyKind.UNCLASSIFIED
    assert classify_family(4, 8, 7) == FamilyKind.UNCLASSIFIED
    assert classify_family(4, 5, 10) == FamilyKind.FKM
    assert classify_family(4, 3, 3) == FamilyKind.NONE
    assert classify_family(4, 2, 2) == FamilyKind.HOMOGENEOUS
    assert classify_family(3, 2, 2) == FamilyKind.HOMOGENEOUS
    assert classify_family(4, 1, 1) == FamilyKind.HOMOGENEOUS_AND_FKM
    with pytest.raises(DomainError):
        classify_family(3, 3, 3)


def test_double_descriptor():
    plus = double_descriptor(2, 2, 3, Side.PLUS)
    minus = double_descriptor(2, 2, 3, Side.MINUS)
    assert plus.diffeomorphism_type == "S^3×S^3"
    assert minus.diffeomorphism_type == "S^2×S^4"
    assert plus.dim == minus.dim == 6
    assert double_descriptor(1, 3, 3).diffeomorphism_type == "S^4"
    fkm = double_descriptor(4, 4, 3, Side.PLUS, fkm=True)
    assert fkm.diffeomorphism_type == "M_plus×S^5"
    other = double_descriptor(4, 4, 3, Side.MINUS, fkm=True)
    assert other.diffeomorphism_type == "S(nu ⊕ 1) over M_minus"
    with pytest.raises(DomainError):
        double_descriptor(4, 3, 3, Side.PLUS, fkm=True)
    data = fkm.to_dict()
    assert data["side"] == "plus"
    assert data["spin"] and data["orientable"] and data["pi_manifold"]
    assert data["alpha"] == 0
    assert data["pontrjagin"] == "vanishing"


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main(sys.argv))
