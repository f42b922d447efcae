# Copyright 2026 The matchsym Authors.
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

import pytest

import matchsym as ms


def test_parse_and_print():
    m = ms.Matching("{(1,2),(3,5),(4)}")
    assert str(m) == "{(1,2),(3,5),(4)}"
    assert m.n == 5
    assert m.chords == [(1, 2), (3, 5)]
    assert m.singletons == [4]
    assert m.short_set() == [1]
    with pytest.raises(ValueError):
        ms.Matching("{(1,2),(2,3)}")


def test_enumeration_and_core():
    assert [str(m) for m in ms.enumerate_matchings(4, 0)] == [
        "{(1,2),(3,4)}", "{(1,3),(2,4)}", "{(1,4),(2,3)}"]
    m2 = ms.Matching("{(1,7),(2,10),(3,6),(4,5),(8,9)}")
    assert str(ms.core(m2)) == "{(1,3),(2,4)}"
    assert ms.stable_vertices(m2) == [1, 2, 7, 10]
    core, row = ms.forward(m2)
    assert row == [5, 6, 9]
    assert ms.inverse(core, 10, row) == m2


def test_expansions():
    assert ms.schur_expand_matchings(6, 0) == {(6,): 5, (5, 1): 1, (3, 3): 1}
    assert ms.schur_expand_matchings(4, 0) == {(4,): 1, (2, 2): 1}
    assert ms.sparse_coefficients(6, 0) == (True, [5, 1, 0, 1])
    assert ms.schur_coeffs_via_bessel(6, 0) == [5, 1, 0, 1]


def test_bessel():
    assert ms.bessel_theta(3) == [15, 15, 6, 1]
    assert ms.short_chord_distribution(3) == [5, 6, 3, 1]
    assert ms.bessel_theta(30)[0] > 2**63


def test_classes_patterns_schreier():
    sizes = sorted(len(c) for c in ms.equivalence_classes(4, 0))
    assert sizes == [1, 2]
    assert len(ms.avoiders(4, 0, ["{(1,3),(2,4)}"])) == 2
    assert ms.crossing_number(ms.Matching("{(1,3),(2,6),(4,5)}")) == 2
    cells = ms.refine(4, 0, "crossing")
    assert [(k, n) for k, n, _ in cells] == [("1", 2), ("2", 1)]
    assert sum(ms.schreier_layers(8)) == 105
    equal, asc, des = ms.asc_des_equidistributed(6)
    assert equal and asc == des


def test_run_json():
    code, out = ms.run_json("expand", 4, 0)
    assert code == 0
    assert out["expansion"] == {"(4)": 1, "(2,2)": 1}
    with pytest.raises(ValueError):
        ms.run_json("enumerate", 5, 0)
