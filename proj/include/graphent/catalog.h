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

#ifndef GRAPHENT_CATALOG_H
#define GRAPHENT_CATALOG_H

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphent/graph.h"

namespace graphent {

constexpr int kCatalogSize = 45;

/// One of the 45 connected graphs on 2..7 vertices that are pairwise
/// inequivalent under local complementation and relabeling.
///
/// expected_gcm / expected_gem are the published 5-decimal reference values,
/// attached as test fixtures. They are not computed here.
struct CatalogEntry {
    int id;
    Graph graph;
    int n;
    std::optional<double> expected_gcm;
    std::optional<double> expected_gem;
    /// Set when the published edge list differs from `graph`. The published
    /// list for entry 43 omits edge {1,7}, which makes it LC-equivalent to
    /// entry 38.
    std::optional<std::vector<Edge>> printed_edges;
};

/// Throws std::out_of_range unless 1 <= id <= 45.
const CatalogEntry &catalog_get(int id);

/// All 45 entries in id order.
const std::vector<CatalogEntry> &catalog_all();

/// Ids of the entries with n vertices.
std::vector<int> catalog_ids_with_n(int n);

/// Edge-list parse failure, carrying the 1-based line number (0 when the
/// problem is not tied to one line).
class ParseError : public std::invalid_argument {
   public:
    ParseError(int line, const std::string &message);
    int line() const {
        return line_;
    }

   private:
    int line_;
};

/// Parses the edge-list text format:
///   - one edge per line, two whitespace-separated 1-indexed vertices;
///   - blank lines and lines starting with '#' are ignored;
///   - an optional "n <count>" line fixes the vertex count, otherwise n is
///     the largest vertex index seen. Input with neither is rejected.
Graph parse_edge_list(const std::string &text);

/// Inverse of parse_edge_list; always writes the "n" header.
std::string serialize_edge_list(const Graph &g);

/// Writes gNN.edges for every entry plus index.json into `dir`.
void export_catalog(const std::filesystem::path &dir);

}  // namespace graphent

#endif
