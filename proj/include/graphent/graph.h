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

#ifndef GRAPHENT_GRAPH_H
#define GRAPHENT_GRAPH_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphent {

constexpr int kMaxVertices = 16;

/// An undirected edge between two 1-indexed vertices, stored with first < second.
using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 1..n.
///
/// Internally each vertex carries a 16-bit adjacency mask (bit v-1 set when
/// the vertex is adjacent to v). Every public accessor speaks 1-indexed
/// vertices. Instances are immutable after construction.
class Graph {
   public:
    /// The edgeless graph on a single vertex.
    Graph();

    /// Builds a graph from 1-indexed edge pairs. Pair order and duplicates are
    /// normalized away. Throws std::invalid_argument on self-loops, vertex
    /// indices outside 1..n, or n outside 1..16.
    Graph(int n, const std::vector<Edge> &edges);

    /// Builds a graph from 0-indexed adjacency masks. Masks must be symmetric
    /// and loop-free.
    static Graph from_adjacency(int n, const std::vector<uint16_t> &rows);

    int num_vertices() const {
        return n_;
    }
    size_t num_edges() const;

    /// Canonically ordered edge list (each pair sorted, pairs sorted).
    std::vector<Edge> edges() const;

    bool has_edge(int a, int b) const;
    int degree(int a) const;

    /// Adjacency mask of vertex a (1-indexed) with bit b-1 set for each neighbor b.
    uint16_t adjacency_mask(int a) const;
    const std::vector<uint16_t> &adjacency() const {
        return adj_;
    }

    bool is_connected() const;

    bool operator==(const Graph &other) const = default;
    /// Total order used by orbit sets: vertex count first, then adjacency rows.
    bool operator<(const Graph &other) const;

    /// "n=3 {1,2} {1,3}"
    std::string str() const;

   private:
    int n_;
    std::vector<uint16_t> adj_;
};

/// Same as the Graph constructor.
Graph make_graph(int n, const std::vector<Edge> &edges);

/// Neighborhood of a (1-indexed), in ascending order.
std::vector<int> neighbors(const Graph &g, int a);

/// Complements the subgraph induced on the neighborhood of a. Edges incident
/// to a and edges with an endpoint outside the neighborhood are untouched.
Graph local_complement(const Graph &g, int a);

/// A bijection on 1..n. `image(v)` is where vertex v is sent.
class VertexPermutation {
   public:
    /// `mapping[v-1]` is the image of vertex v; must be a permutation of 1..n.
    explicit VertexPermutation(std::vector<int> mapping);
    static VertexPermutation identity(int n);

    int size() const {
        return (int)mapping_.size();
    }
    int image(int v) const;
    const std::vector<int> &mapping() const {
        return mapping_;
    }
    VertexPermutation inverse() const;

    bool operator==(const VertexPermutation &other) const = default;

   private:
    std::vector<int> mapping_;
};

/// Relabels every vertex v of g to p.image(v).
Graph relabel(const Graph &g, const VertexPermutation &p);

/// Backtracking search for a bijection f with {a,b} in E1 iff {f(a),f(b)} in
/// E2. Returns the witness when one exists. Graphs with different vertex
/// counts are never isomorphic.
std::optional<VertexPermutation> find_isomorphism(const Graph &g1, const Graph &g2);

inline bool is_isomorphic(const Graph &g1, const Graph &g2) {
    return find_isomorphism(g1, g2).has_value();
}

/// Representative of the isomorphism class of g: the relabeling whose
/// lower-triangular adjacency bit sequence (row 2 against row 1, row 3 against
/// rows 1-2, ...) is lexicographically least. The search only visits
/// relabelings that order vertices by a degree-based invariant, so its cost is
/// the product of factorials of the invariant cell sizes.
Graph canonical_form(const Graph &g);

/// Raised when orbit enumeration would exceed its state budget.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(size_t budget, size_t reached);
    size_t budget() const {
        return budget_;
    }
    size_t reached() const {
        return reached_;
    }

   private:
    size_t budget_;
    size_t reached_;
};

constexpr size_t kDefaultOrbitBudget = 1000000;

struct LcMove {
    Graph from;
    int vertex;
    Graph to;
};

/// Local-complementation orbit of a graph, modulo isomorphism.
struct LcOrbit {
    /// Canonical forms of every graph reachable by local complementations.
    std::set<Graph> representatives;
    /// Canonical graph -> canonical graph transitions, in discovery order.
    /// Only filled when requested.
    std::vector<LcMove> moves;

    size_t size() const {
        return representatives.size();
    }
    bool contains(const Graph &g) const;
};

/// Breadth-first closure of {canonical_form(local_complement(h, a))} starting
/// at canonical_form(g). Throws BudgetExceeded if more than `max_size`
/// distinct classes are discovered.
LcOrbit lc_orbit(const Graph &g, size_t max_size = kDefaultOrbitBudget, bool record_moves = false);

/// True iff g2 is isomorphic to a graph in the LC orbit of g1.
bool are_lc_equivalent(const Graph &g1, const Graph &g2, size_t max_size = kDefaultOrbitBudget);

}  // namespace graphent

#endif
