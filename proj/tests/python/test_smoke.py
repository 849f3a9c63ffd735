# Copyright 2026 The graphent Authors
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

import numpy as np
import pytest

import graphent


def test_graph_basics():
    g = graphent.make_graph(3, [(2, 1), (1, 3), (1, 3)])
    assert g.edges == [(1, 2), (1, 3)]
    assert g.n == 3
    assert g.neighbors(1) == [2, 3]
    tri = graphent.Graph(3, [(1, 2), (1, 3), (2, 3)])
    assert graphent.local_complement(tri, 1).edges == [(1, 2), (1, 3)]
    with pytest.raises(ValueError):
        graphent.make_graph(3, [(1, 1)])


def test_isomorphism_and_orbits():
    star = graphent.catalog_get(3)["graph"]
    path = graphent.catalog_get(4)["graph"]
    assert not graphent.is_isomorphic(star, path)
    assert graphent.find_isomorphism(star, star) is not None
    k4 = graphent.Graph(4, [(a, b) for a in range(1, 5) for b in range(a + 1, 5)])
    assert graphent.are_lc_equivalent(star, k4)
    assert not graphent.are_lc_equivalent(star, path)
    assert len(graphent.lc_orbit(graphent.catalog_get(1)["graph"])) == 1
    with pytest.raises(graphent.BudgetExceeded):
        graphent.lc_orbit(graphent.catalog_get(45)["graph"], budget=2)


def test_state_and_measures():
    s = graphent.graph_state(graphent.catalog_get(1)["graph"])
    np.testing.assert_allclose(s, [0.5, 0.5, 0.5, -0.5], atol=1e-15)
    g2 = graphent.catalog_get(2)
    state = graphent.graph_state(g2["graph"])
    assert graphent.gcm(state) == pytest.approx(1.22474, abs=5e-6)
    result = graphent.gem(state, restarts=64, seed=1)
    assert result["value"] == pytest.approx(0.5, abs=1e-9)
    assert len(result["closest_product"]) == 3
    assert graphent.gem_bipartite_oracle(graphent.graph_state(graphent.catalog_get(1)["graph"]), [1]) == pytest.approx(0.5)
    for a in range(1, 4):
        assert graphent.stabilizer_expectation(state, g2["graph"], a) == pytest.approx(1, abs=1e-12)
    with pytest.raises(ValueError):
        graphent.gcm(np.ones(3))


def test_catalog_and_parsing(tmp_path):
    e = graphent.catalog_get(43)
    assert e["printed_edges"] is not None
    assert e["expected_gcm"] == pytest.approx(1.75)
    assert [len(graphent.catalog_ids_with_n(n)) for n in range(2, 8)] == [1, 1, 2, 4, 11, 26]
    g = graphent.parse_edge_list("# comment\nn 5\n1 2\n")
    assert g.n == 5
    assert graphent.parse_edge_list(graphent.serialize_edge_list(g)) == g
    with pytest.raises(graphent.ParseError):
        graphent.parse_edge_list("1 1\n")
    graphent.export_catalog(str(tmp_path))
    assert (tmp_path / "index.json").exists()
    assert (tmp_path / "g45.edges").exists()


def test_classify():
    report = graphent.classify("gcm")
    assert report["measure"] == "gcm"
    assert len(report["classes"]) == 27
    assert report["cumulative"]["eta_measure"] == 27
    members = [c["members"] for c in report["classes"]]
    assert [40, 42, 43, 45] in members
