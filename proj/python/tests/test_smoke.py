# Copyright 2026 The indist Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

import indist


def test_uniform_shift_distance():
    a = indist.uniform_int(1, 5)
    b = indist.convolve(a, indist.uniform_int(1, 2))
    assert indist.tvd(a, b) == Fraction(3, 10)
    assert indist.tvd(a, a) == 0


def test_n2_chain():
    d = indist.build_n2(Fraction(1, 4))
    assert len(d) == 4
    assert d.max_value() == 5
    eps, first, second = indist.all_nm1_max_tvd(d)
    assert eps == Fraction(1, 4)
    assert sorted([first, second]) == [[1], [2]]


def test_jsonl_round_trip():
    d = indist.exact_joint(3, 1)
    assert len(d) == 1024
    again = indist.ExactDist.from_jsonl(d.to_jsonl())
    assert again == d


def test_rejects_bad_mass():
    with pytest.raises(indist.Error):
        indist.ExactDist("scalar", 1, [(1, Fraction(1, 3)), (2, Fraction(1, 3))])


def test_audit_paths():
    assert indist.audit_injected("1/10", 3, 100)["verdict"] == "violation"
    report = indist.audit_distribution(indist.build_n2("1/4"))
    assert report["verdict"] == "consistent"
    assert report["bound"]["value"] == "4/1"


def test_tower_bound_and_cases():
    assert indist.tower_bound(4, Fraction(1, 360))["top_exponent"] == "10"
    assert indist.compare_with_tower(2**1024, 2, 10) == 0
    assert indist.classify_gap_case(0, 1, 3, 9) == "increasing"
    assert indist.classify_gap_case(0, 6, 8, 9) == "decreasing"
    assert indist.check_gap_monotonicity([0, 3, 6, 9, 12])["status"] == "hypothesis-failed"


def test_solver_and_bet():
    report = indist.solve_game(2, 2, 3)
    assert abs(Fraction(report["value"]) - Fraction(1, 2)) <= Fraction(1, 1000)
    a = indist.uniform_int(1, 4)
    b = indist.uniform_int(2, 5)
    mean, se = indist.play_betting_game(a, b, 20000, seed=7)
    assert abs(mean - 0.25) <= 4 * se + 1e-12


def test_certificate_and_sample():
    cert = indist.certificate(3, 1)
    assert cert["bound"]["value"] == str(2**10 - 14)
    x = indist.sample_tuple(3, 1, 1, 0)
    assert len(x) == 3
    assert int(x[0]) < int(x[1]) < int(x[2])
