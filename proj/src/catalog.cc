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

#include "graphent/catalog.h"

#include <algorithm>
#include <fmt/format.h>
#include <fstream>
#include <sstream>

#include "json.hpp"

using namespace graphent;

namespace {

struct RawEntry {
    int id;
    int n;
    std::vector<Edge> edges;
    double gcm;
    double gem;
};

// Edge sets as published, in published pair order. Reference values are the
// 5-decimal classification values for each graph.
const std::vector<RawEntry> &raw_entries() {
    static const std::vector<RawEntry> data = {
        {1, 2, {{1, 2}}, 1.0, 0.5},
        {2, 3, {{1, 2}, {1, 3}}, 1.22474, 0.5},
        {3, 4, {{1, 2}, {1, 3}, {1, 4}}, 1.32288, 0.5},
        {4, 4, {{1, 2}, {2, 3}, {3, 4}}, 1.41421, 0.75},
        {5, 5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}, 1.36931, 0.5},
        {6, 5, {{1, 2}, {2, 3}, {3, 4}, {2, 5}}, 1.5, 0.75},
        {7, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, 1.54110, 0.75},
        {8, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}, 1.58114, 0.86855},
        {9, 6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}, 1.39194, 0.5},
        {10, 6, {{1, 6}, {2, 6}, {3, 6}, {4, 5}, {5, 6}}, 1.54110, 0.75},
        {11, 6, {{1, 6}, {2, 6}, {3, 5}, {4, 5}, {5, 6}}, 1.58114, 0.75},
        {12, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}}, 1.60078, 0.75},
        {13, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}, 1.62019, 0.875},
        {14, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}, 1.63936, 0.875},
        {15, 6, {{1, 6}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {3, 6}}, 1.62019, 0.75},
        {16, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 4}, {3, 6}}, 1.63936, 0.875},
        {17, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}}, 1.65831, 0.875},
        {18, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}}, 1.67705, 0.875},
        {19, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 3}, {4, 6}, {2, 5}}, 1.69558, 0.91667},
        {20, 7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}}, 1.40312, 0.5},
        {21, 7, {{1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 6}, {6, 7}}, 1.56125, 0.75},
        {22, 7, {{1, 7}, {2, 7}, {3, 7}, {4, 6}, {5, 6}, {6, 7}}, 1.62019, 0.75},
        {23, 7, {{1, 7}, {2, 7}, {3, 7}, {4, 5}, {5, 6}, {6, 7}}, 1.62980, 0.75},
        {24, 7, {{1, 7}, {2, 7}, {3, 5}, {4, 5}, {5, 6}, {6, 7}}, 1.64886, 0.75},
        {25, 7, {{1, 2}, {1, 7}, {3, 7}, {4, 7}, {5, 6}, {6, 7}}, 1.65831, 0.875},
        {26, 7, {{1, 7}, {2, 7}, {3, 6}, {4, 5}, {5, 6}, {6, 7}}, 1.67705, 0.875},
        {27, 7, {{1, 2}, {2, 7}, {2, 3}, {4, 3}, {5, 4}, {6, 5}}, 1.68634, 0.875},
        {28, 7, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}}, 1.69558, 0.875},
        {29, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}}, 1.70477, 0.875},
        {30, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}, 1.71391, 0.875},
        {31, 7, {{2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {1, 3}, {6, 3}}, 1.65831, 0.75},
        {32, 7, {{1, 7}, {2, 7}, {3, 6}, {4, 5}, {5, 6}, {6, 7}, {5, 7}}, 1.68634, 0.875},
        {33, 7, {{2, 3}, {3, 4}, {4, 5}, {6, 5}, {7, 6}, {3, 7}, {1, 3}}, 1.69558, 0.875},
        {34, 7, {{2, 3}, {3, 4}, {4, 5}, {6, 5}, {7, 6}, {3, 6}, {1, 4}}, 1.70477, 0.875},
        {35, 7, {{2, 3}, {3, 4}, {4, 5}, {6, 5}, {7, 6}, {3, 7}, {1, 6}}, 1.71391, 0.875},
        {36, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}, {3, 5}}, 1.71391, 0.875},
        {37, 7, {{1, 7}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}}, 1.72301, 0.875},
        {38, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 6}}, 1.73205, 0.875},
        {39, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 5}}, 1.73205, 0.93428},
        {40, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 7}}, 1.75, 0.9375},
        {41, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 5}, {1, 6}}, 1.74105, 0.93428},
        {42, 7, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 7}, {2, 6}}, 1.75, 0.9375},
        {43, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {1, 4}, {3, 6}, {1, 7}}, 1.75, 0.875},
        {44, 7, {{1, 4}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 7}, {2, 7}, {3, 5}}, 1.75891, 0.9375},
        {45, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}, {2, 7}, {2, 5}, {4, 6}}, 1.75, 0.93428},
    };
    return data;
}

const std::vector<Edge> kPrintedEdges43 = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {1, 4}, {3, 6}};

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    for (const auto &raw : raw_entries()) {
        CatalogEntry e{raw.id, Graph(raw.n, raw.edges), raw.n, raw.gcm, raw.gem, std::nullopt};
        if (raw.id == 43) {
            e.printed_edges = kPrintedEdges43;
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Parses a whole token as a (possibly negative) integer.
bool parse_int(const std::string &token, long &out) {
    try {
        size_t used = 0;
        out = std::stol(token, &used);
        return used == token.size();
    } catch (const std::exception &) {
        return false;
    }
}

}  // namespace

const std::vector<CatalogEntry> &graphent::catalog_all() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry &graphent::catalog_get(int id) {
    if (id < 1 || id > kCatalogSize) {
        throw std::out_of_range("Catalog id " + std::to_string(id) + " outside 1.." + std::to_string(kCatalogSize) + ".");
    }
    return catalog_all()[id - 1];
}

std::vector<int> graphent::catalog_ids_with_n(int n) {
    std::vector<int> ids;
    for (const auto &e : catalog_all()) {
        if (e.n == n) {
            ids.push_back(e.id);
        }
    }
    return ids;
}

ParseError::ParseError(int line, const std::string &message)
    : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {
}

Graph graphent::parse_edge_list(const std::string &text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::optional<long> header_n;
    int header_line = 0;
    long max_vertex = 0;
    std::vector<std::pair<Edge, int>> edges;
    while (std::getline(in, raw)) {
        line_no++;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream tokens(line);
        std::vector<std::string> parts;
        for (std::string t; tokens >> t;) {
            parts.push_back(t);
        }
        if (parts.size() != 2) {
            throw ParseError(line_no, "expected two fields, got " + std::to_string(parts.size()) + ": '" + line + "'");
        }
        long a, b;
        if (parts[0] == "n") {
            if (header_n) {
                throw ParseError(line_no, "duplicate 'n' header");
            }
            if (!parse_int(parts[1], a) || a < 1 || a > kMaxVertices) {
                throw ParseError(line_no, "vertex count must be an integer in 1.." + std::to_string(kMaxVertices));
            }
            header_n = a;
            header_line = line_no;
            continue;
        }
        if (!parse_int(parts[0], a) || !parse_int(parts[1], b)) {
            throw ParseError(line_no, "malformed edge '" + line + "'");
        }
        if (a <= 0 || b <= 0) {
            throw ParseError(line_no, "vertex indices must be positive");
        }
        if (a == b) {
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        }
        if (a > kMaxVertices || b > kMaxVertices) {
            throw ParseError(line_no, "vertex index exceeds " + std::to_string(kMaxVertices));
        }
        max_vertex = std::max({max_vertex, a, b});
        edges.push_back({{(int)a, (int)b}, line_no});
    }
    if (!header_n && edges.empty()) {
        throw ParseError(0, "no edges and no 'n' header");
    }
    long n = header_n.value_or(max_vertex);
    std::vector<Edge> plain;
    for (const auto &[e, ln] : edges) {
        if (e.first > n || e.second > n) {
            throw ParseError(ln, fmt::format("vertex exceeds header count n={} (declared on line {})", n, header_line));
        }
        plain.push_back(e);
    }
    return Graph((int)n, plain);
}

std::string graphent::serialize_edge_list(const Graph &g) {
    std::string out = fmt::format("n {}\n", g.num_vertices());
    for (auto [a, b] : g.edges()) {
        out += fmt::format("{} {}\n", a, b);
    }
    return out;
}

void graphent::export_catalog(const std::filesystem::path &dir) {
    std::filesystem::create_directories(dir);
    nlohmann::json index = nlohmann::json::array();
    for (const auto &e : catalog_all()) {
        std::string name = fmt::format("g{:02d}.edges", e.id);
        std::ofstream out(dir / name);
        if (!out) {
            throw std::runtime_error("Could not write " + (dir / name).string());
        }
        out << fmt::format("# catalog graph {}\n", e.id) << serialize_edge_list(e.graph);
        nlohmann::json item = {
            {"id", e.id},
            {"n", e.n},
            {"edge_count", e.graph.num_edges()},
            {"file", name},
            {"expected_gcm", e.expected_gcm ? nlohmann::json(*e.expected_gcm) : nlohmann::json(nullptr)},
            {"expected_gem", e.expected_gem ? nlohmann::json(*e.expected_gem) : nlohmann::json(nullptr)},
        };
        if (e.printed_edges) {
            auto arr = nlohmann::json::array();
            for (auto [a, b] : *e.printed_edges) {
                arr.push_back({a, b});
            }
            item["printed_edges"] = arr;
        }
        index.push_back(item);
    }
    std::ofstream out(dir / "index.json");
    if (!out) {
        throw std::runtime_error("Could not write " + (dir / "index.json").string());
    }
    out << index.dump(2) << "\n";
}
