// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphent/graph.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

using namespace graphent;

namespace {

void check_vertex_count(int n) {
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument(
            "Vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices) + ".");
    }
}

void check_vertex(const Graph &g, int a) {
    if (a < 1 || a > g.num_vertices()) {
        throw std::out_of_range(
            "Vertex " + std::to_string(a) + " outside 1.." + std::to_string(g.num_vertices()) + ".");
    }
}

/// Isomorphism-invariant vertex label: degree, then sorted neighbor degrees.
std::vector<std::vector<int>> vertex_invariants(const Graph &g) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> result(n);
    for (int v = 1; v <= n; v++) {
        auto &inv = result[v - 1];
        inv.push_back(g.degree(v));
        for (int b : neighbors(g, v)) {
            inv.push_back(g.degree(b));
        }
        std::sort(inv.begin() + 1, inv.end());
    }
    return result;
}

struct CanonicalSearch {
    const Graph &g;
    int n;
    // allowed[p] masks the original vertices (0-indexed) that may take position p.
    std::vector<uint16_t> allowed;
    std::vector<int> order;
    std::vector<uint16_t> rows;
    std::vector<int> best_order;
    std::vector<uint16_t> best_rows;
    bool have_best = false;

    // -1, 0, +1 as rows[0..p) compares to best_rows[0..p).
    int compare_prefix(int p) const {
        for (int q = 0; q < p; q++) {
            if (rows[q] != best_rows[q]) {
                return rows[q] < best_rows[q] ? -1 : 1;
            }
        }
        return 0;
    }

    void search(int p, uint16_t used) {
        if (have_best && compare_prefix(p) > 0) {
            return;
        }
        if (p == n) {
            if (!have_best || compare_prefix(n) < 0) {
                best_order = order;
                best_rows = rows;
                have_best = true;
            }
            return;
        }
        uint16_t candidates = allowed[p] & ~used;
        while (candidates) {
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            uint16_t row = 0;
            uint16_t adj = g.adjacency()[v];
            for (int q = 0; q < p; q++) {
                row = (uint16_t)(row << 1);
                if (adj & (1u << order[q])) {
                    row |= 1;
                }
            }
            order[p] = v;
            rows[p] = row;
            search(p + 1, (uint16_t)(used | (1u << v)));
        }
    }
};

}  // namespace

Graph::Graph() : n_(1), adj_(1, 0) {
}

Graph::Graph(int n, const std::vector<Edge> &edges) : n_(n) {
    check_vertex_count(n);
    adj_.assign(n, 0);
    for (auto [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n) {
            throw std::invalid_argument(
                "Edge {" + std::to_string(a) + "," + std::to_string(b) + "} has a vertex outside 1.." +
                std::to_string(n) + ".");
        }
        if (a == b) {
            throw std::invalid_argument("Self-loop at vertex " + std::to_string(a) + ".");
        }
        adj_[a - 1] |= (uint16_t)(1u << (b - 1));
        adj_[b - 1] |= (uint16_t)(1u << (a - 1));
    }
}

Graph Graph::from_adjacency(int n, const std::vector<uint16_t> &rows) {
    check_vertex_count(n);
    if ((int)rows.size() != n) {
        throw std::invalid_argument("Adjacency row count does not match vertex count.");
    }
    std::vector<Edge> edges;
    for (int a = 0; a < n; a++) {
        if (rows[a] >> n) {
            throw std::invalid_argument("Adjacency row references a vertex beyond n.");
        }
        for (int b = 0; b < n; b++) {
            bool ab = (rows[a] >> b) & 1;
            bool ba = (rows[b] >> a) & 1;
            if (ab != ba) {
                throw std::invalid_argument("Adjacency rows are not symmetric.");
            }
            if (ab && a < b) {
                edges.emplace_back(a + 1, b + 1);
            }
        }
    }
    return Graph(n, edges);
}

size_t Graph::num_edges() const {
    size_t total = 0;
    for (auto row : adj_) {
        total += std::popcount(row);
    }
    return total / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> result;
    for (int a = 0; a < n_; a++) {
        for (int b = a + 1; b < n_; b++) {
            if ((adj_[a] >> b) & 1) {
                result.emplace_back(a + 1, b + 1);
            }
        }
    }
    return result;
}

bool Graph::has_edge(int a, int b) const {
    check_vertex(*this, a);
    check_vertex(*this, b);
    return (adj_[a - 1] >> (b - 1)) & 1;
}

int Graph::degree(int a) const {
    check_vertex(*this, a);
    return std::popcount(adj_[a - 1]);
}

uint16_t Graph::adjacency_mask(int a) const {
    check_vertex(*this, a);
    return adj_[a - 1];
}

bool Graph::is_connected() const {
    uint16_t reached = 1;
    uint16_t frontier = 1;
    while (frontier) {
        uint16_t next = 0;
        for (uint16_t f = frontier; f; f &= f - 1) {
            next |= adj_[std::countr_zero(f)];
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return std::popcount(reached) == n_;
}

bool Graph::operator<(const Graph &other) const {
    if (n_ != other.n_) {
        return n_ < other.n_;
    }
    return adj_ < other.adj_;
}

std::string Graph::str() const {
    std::stringstream ss;
    ss << "n=" << n_;
    for (auto [a, b] : edges()) {
        ss << " {" << a << "," << b << "}";
    }
    return ss.str();
}

Graph graphent::make_graph(int n, const std::vector<Edge> &edges) {
    return Graph(n, edges);
}

std::vector<int> graphent::neighbors(const Graph &g, int a) {
    std::vector<int> result;
    for (uint16_t m = g.adjacency_mask(a); m; m &= m - 1) {
        result.push_back(std::countr_zero(m) + 1);
    }
    return result;
}

Graph graphent::local_complement(const Graph &g, int a) {
    uint16_t hood = g.adjacency_mask(a);
    std::vector<uint16_t> rows = g.adjacency();
    for (int b = 0; b < g.num_vertices(); b++) {
        if ((hood >> b) & 1) {
            rows[b] ^= (uint16_t)(hood & ~(1u << b));
        }
    }
    return Graph::from_adjacency(g.num_vertices(), rows);
}

VertexPermutation::VertexPermutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    int n = (int)mapping_.size();
    std::vector<bool> seen(n, false);
    for (int t : mapping_) {
        if (t < 1 || t > n || seen[t - 1]) {
            throw std::invalid_argument("Vertex mapping is not a bijection on 1.." + std::to_string(n) + ".");
        }
        seen[t - 1] = true;
    }
}

VertexPermutation VertexPermutation::identity(int n) {
    std::vector<int> m(n);
    for (int k = 0; k < n; k++) {
        m[k] = k + 1;
    }
    return VertexPermutation(std::move(m));
}

int VertexPermutation::image(int v) const {
    if (v < 1 || v > size()) {
        throw std::out_of_range("Vertex " + std::to_string(v) + " outside permutation domain.");
    }
    return mapping_[v - 1];
}

VertexPermutation VertexPermutation::inverse() const {
    std::vector<int> inv(mapping_.size());
    for (size_t k = 0; k < mapping_.size(); k++) {
        inv[mapping_[k] - 1] = (int)k + 1;
    }
    return VertexPermutation(std::move(inv));
}

Graph graphent::relabel(const Graph &g, const VertexPermutation &p) {
    if (p.size() != g.num_vertices()) {
        throw std::invalid_argument("Permutation size does not match vertex count.");
    }
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        edges.emplace_back(p.image(a), p.image(b));
    }
    return Graph(g.num_vertices(), edges);
}

std::optional<VertexPermutation> graphent::find_isomorphism(const Graph &g1, const Graph &g2) {
    int n = g1.num_vertices();
    if (n != g2.num_vertices() || g1.num_edges() != g2.num_edges()) {
        return std::nullopt;
    }
    auto inv1 = vertex_invariants(g1);
    auto inv2 = vertex_invariants(g2);
    {
        auto s1 = inv1;
        auto s2 = inv2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) {
            return std::nullopt;
        }
    }

    // Map high-degree vertices first; they constrain the search the most.
    std::vector<int> order(n);
    for (int k = 0; k < n; k++) {
        order[k] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inv1[a][0] > inv1[b][0];
    });

    const auto &adj1 = g1.adjacency();
    const auto &adj2 = g2.adjacency();
    std::vector<int> image(n, -1);
    uint16_t used = 0;

    auto extend = [&](auto &self, int depth) -> bool {
        if (depth == n) {
            return true;
        }
        int v = order[depth];
        for (int w = 0; w < n; w++) {
            if ((used >> w) & 1 || inv1[v] != inv2[w]) {
                continue;
            }
            bool consistent = true;
            for (int d = 0; d < depth && consistent; d++) {
                int u = order[d];
                bool e1 = (adj1[v] >> u) & 1;
                bool e2 = (adj2[w] >> image[u]) & 1;
                consistent = e1 == e2;
            }
            if (!consistent) {
                continue;
            }
            image[v] = w;
            used |= (uint16_t)(1u << w);
            if (self(self, depth + 1)) {
                return true;
            }
            used &= (uint16_t)~(1u << w);
            image[v] = -1;
        }
        return false;
    };
    if (!extend(extend, 0)) {
        return std::nullopt;
    }
    std::vector<int> mapping(n);
    for (int v = 0; v < n; v++) {
        mapping[v] = image[v] + 1;
    }
    return VertexPermutation(std::move(mapping));
}

Graph graphent::canonical_form(const Graph &g) {
    int n = g.num_vertices();
    auto inv = vertex_invariants(g);
    std::vector<int> sorted(n);
    for (int k = 0; k < n; k++) {
        sorted[k] = k;
    }
    std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        return inv[a] < inv[b];
    });

    CanonicalSearch search{g, n, std::vector<uint16_t>(n, 0), std::vector<int>(n, -1), std::vector<uint16_t>(n, 0), {}, {}};
    for (int p = 0; p < n;) {
        int q = p;
        uint16_t cell = 0;
        while (q < n && inv[sorted[q]] == inv[sorted[p]]) {
            cell |= (uint16_t)(1u << sorted[q]);
            q++;
        }
        for (int k = p; k < q; k++) {
            search.allowed[k] = cell;
        }
        p = q;
    }
    search.search(0, 0);

    std::vector<int> mapping(n);
    for (int p = 0; p < n; p++) {
        mapping[search.best_order[p]] = p + 1;
    }
    return relabel(g, VertexPermutation(std::move(mapping)));
}

BudgetExceeded::BudgetExceeded(size_t budget, size_t reached)
    : std::runtime_error(
          "LC orbit enumeration exceeded its budget of " + std::to_string(budget) + " classes (reached " +
          std::to_string(reached) + ")."),
      budget_(budget),
      reached_(reached) {
}

bool LcOrbit::contains(const Graph &g) const {
    return representatives.contains(canonical_form(g));
}

LcOrbit graphent::lc_orbit(const Graph &g, size_t max_size, bool record_moves) {
    LcOrbit orbit;
    Graph start = canonical_form(g);
    orbit.representatives.insert(start);
    if (orbit.size() > max_size) {
        throw BudgetExceeded(max_size, orbit.size());
    }
    std::deque<Graph> frontier{start};
    while (!frontier.empty()) {
        Graph cur = std::move(frontier.front());
        frontier.pop_front();
        for (int a = 1; a <= cur.num_vertices(); a++) {
            Graph next = canonical_form(local_complement(cur, a));
            bool fresh = orbit.representatives.insert(next).second;
            if (record_moves) {
                orbit.moves.push_back({cur, a, next});
            }
            if (fresh) {
                if (orbit.size() > max_size) {
                    throw BudgetExceeded(max_size, orbit.size());
                }
                frontier.push_back(std::move(next));
            }
        }
    }
    return orbit;
}

bool graphent::are_lc_equivalent(const Graph &g1, const Graph &g2, size_t max_size) {
    if (g1.num_vertices() != g2.num_vertices() || g1.is_connected() != g2.is_connected()) {
        return false;
    }
    return lc_orbit(g1, max_size).contains(g2);
}
