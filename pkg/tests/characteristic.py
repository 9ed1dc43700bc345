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

import itertools

import pytest
import sympy

from isodouble.clifford import delta_dim
from isodouble.config import Verdict
from isodouble.errors import DomainError, DomainWarning, InapplicableCriterion
from isodouble.topology import (
    distinguish,
    fkm_record,
    half_factorial_residue,
    pontrjagin_top,
    wilson_check,
    wu_residue,
    wu_residue_from_pontrjagin,
)


def test_pontrjagin_top():
    assert pontrjagin_top(4, 1) == 2
    assert pontrjagin_top(8, 1) == 6
    assert pontrjagin_top(12, 3) == 3 * 2 * 120
    for m in (4, 8, 12, 16):
        assert pontrjagin_top(m, 0) == 0
        assert pontrjagin_top(m, -3) == -pontrjagin_top(m, 3)
    # exact beyond 64 bits
    assert pontrjagin_top(88, 1) > 2**64
    with pytest.raises(InapplicableCriterion):
        pontrjagin_top(6, 1)


def test_wu_residue():
    res = wu_residue(4, 2)
    assert res.p == 3
    assert res.pair == frozenset({1, 2})
    res = wu_residue(8, 1)
    assert (res.p, res.residue) == (5, 2)
    assert res.pair == frozenset({2, 3})
    assert wu_residue(8, 0).pair == frozenset({0})
    assert wu_residue(8, 5).pair == frozenset({0})


def test_wu_routes_agree():
    for m in (4, 8, 12, 20, 24):
        for q in range(-6, 7):
            direct = wu_residue(m, q)
            other = wu_residue_from_pontrjagin(m, q)
            assert direct.p == other.p == m // 2 + 1
            assert direct.pair == other.pair, (m, q)


def test_wu_inapplicable():
    with pytest.raises(InapplicableCriterion):
        wu_residue(6, 1)
    with pytest.raises(InapplicableCriterion) as info:
        wu_residue(16, 1)
    assert info.value.reason == "p = m/2+1 not prime"


def test_wilson():
    for p in range(2, 10_000):
        assert wilson_check(p) == sympy.isprime(p), p
    assert wilson_check(1_000_003)
    with pytest.raises(DomainError):
        wilson_check(1)


def test_half_factorial():
    for p in sympy.primerange(3, 2000):
        assert half_factorial_residue(p) == (p - 1) // 2
    for bad in (2, 9):
        with pytest.raises(DomainError):
            half_factorial_residue(bad)


def test_distinguish():
    result = distinguish(4, 4, 1, 3)
    assert result.verdict == Verdict.DISTINCT
    assert result.p == 3
    result = distinguish(4, 4, 1, -1)
    assert result.verdict == Verdict.INCONCLUSIVE
    assert distinguish(8, 8, 1, 3).verdict == Verdict.DISTINCT
    assert distinguish(8, 8, 1, 9).verdict == Verdict.INCONCLUSIVE
    data = distinguish(8, 8, 1, 3).to_dict()
    assert data["verdict"] == "distinct" and data["p"] == 5
    assert data["reason"] is None
    result = distinguish(4, 8, 0, 2)
    assert result.verdict == Verdict.DISTINCT
    assert result.p == 3


def test_distinguish_inapplicable():
    result = distinguish(6, delta_dim(6), 1, 3)
    assert result.verdict == Verdict.INAPPLICABLE
    assert "not a multiple of 4" in result.reason
    result = distinguish(16, delta_dim(16), 1, 3)
    assert result.verdict == Verdict.INAPPLICABLE
    assert result.reason == "p = m/2+1 not prime"
    assert result.p is None


def test_distinguish_symmetries():
    qs = (-4, -2, 0, 2, 4)
    for m in (4, 8, 12, 24):
        l = 4 * delta_dim(m)  # noqa E741
        for q1, q2 in itertools.product(qs, repeat=2):
            verdict = distinguish(m, l, q1, q2).verdict
            assert verdict == distinguish(m, l, q2, q1).verdict
            assert verdict == distinguish(m, l, -q1, q2).verdict
            if abs(q1) == abs(q2):
                assert verdict == Verdict.INCONCLUSIVE


def test_distinguish_errors():
    with pytest.raises(DomainError):
        distinguish(8, 12, 1, 3)
    with pytest.warns(DomainWarning):
        distinguish(4, 4, 2, 1)


def test_fkm_record():
    record = fkm_record(8, 8, 1)
    assert record.beta == 1
    assert record.pontrjagin_top == 6
    assert record.wu_prime == 5
    assert record.wu_residue.residue == 2
    data = record.to_dict()
    assert data["pontrjagin_top"] == "6"
    assert data["zeta_pontrjagin_top"] == "-6"
    record = fkm_record(16, delta_dim(16), 1)
    assert record.pontrjagin_top == 5040
    assert record.wu_prime is None and record.wu_residue is None
    assert fkm_record(4, 4, 1).beta == 2


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main(sys.argv))
