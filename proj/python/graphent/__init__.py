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

"""Graph states, entanglement measures and local-complementation orbits."""

import json as _json

from graphent import _core
from graphent._core import (
    CATALOG_SIZE,
    BudgetExceeded,
    Graph,
    ParseError,
    are_lc_equivalent,
    brute_force_gem,
    canonical_form,
    catalog_get,
    catalog_ids_with_n,
    export_catalog,
    find_isomorphism,
    gcm,
    gem,
    gem_bipartite_oracle,
    graph_state,
    is_isomorphic,
    lc_orbit,
    lc_unitary_apply,
    local_complement,
    make_graph,
    parse_edge_list,
    random_state,
    serialize_edge_list,
    stabilizer_expectation,
    state_to_json,
)


def classify(measure="gcm", restarts=64, seed=1, threads=1, tol=1e-4):
    """Classification report over the catalog as a dict."""
    return _json.loads(_core.classify_json(measure, restarts, seed, threads, tol))


def rp_table(restarts=64, seed=1, threads=1, tol=1e-4):
    """Resolution-power table for both measures as a dict."""
    return _json.loads(_core.rp_table_json(restarts, seed, threads, tol))

