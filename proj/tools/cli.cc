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

#include "cli.h"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "graphent/catalog.h"
#include "graphent/classify.h"
#include "graphent/graph.h"
#include "graphent/measures.h"
#include "graphent/state_vector.h"
#include "json.hpp"

using namespace graphent;

namespace {

enum class Format { Table, Json, Csv };

struct GraphInput {
    int catalog_id = 0;
    std::string edges;
    std::string file;

    // Exactly-one is enforced in resolve() so the message names all three flags.
    void attach(CLI::App *cmd, const std::string &suffix) {
        auto *g = cmd->add_option("--graph" + suffix, catalog_id, "Catalog graph id (1-45)");
        auto *e = cmd->add_option("--edges" + suffix, edges, "Inline edges, e.g. \"1 2,1 3\"");
        auto *f = cmd->add_option("--file" + suffix, file, "Edge-list file");
        g->excludes(e)->excludes(f);
        e->excludes(f);
    }

    Graph resolve(const std::string &suffix) const {
        int given = (catalog_id != 0) + !edges.empty() + !file.empty();
        if (given != 1) {
            throw std::invalid_argument(
                "Give exactly one of --graph" + suffix + ", --edges" + suffix + ", --file" + suffix + ".");
        }
        if (catalog_id != 0) {
            return catalog_get(catalog_id).graph;
        }
        if (!edges.empty()) {
            std::string text = edges;
            std::replace(text.begin(), text.end(), ',', '\n');
            std::replace(text.begin(), text.end(), ';', '\n');
            return parse_edge_list(text);
        }
        std::ifstream in(file);
        if (!in) {
            throw std::runtime_error("Could not open '" + file + "'.");
        }
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_edge_list(ss.str());
    }
};

struct GemFlags {
    int restarts = GemConfig{}.restarts;
    int max_iterations = GemConfig{}.max_iterations;
    double tolerance = GemConfig{}.tolerance;
    uint64_t seed = GemConfig{}.seed;
    unsigned threads = 1;

    void attach(CLI::App *cmd) {
        cmd->add_option("--restarts", restarts, "Random restarts for GEM")->capture_default_str();
        cmd->add_option("--seed", seed, "Seed for GEM restarts")->capture_default_str();
        cmd->add_option("--max-iterations", max_iterations, "See-saw sweeps per restart")->capture_default_str();
        cmd->add_option("--fidelity-tol", tolerance, "Per-sweep fidelity change that stops a restart")
            ->capture_default_str();
        cmd->add_option("--threads", threads, "Worker threads (results do not depend on this)")
            ->capture_default_str();
    }

    GemConfig config() const {
        GemConfig cfg;
        cfg.restarts = restarts;
        cfg.max_iterations = max_iterations;
        cfg.tolerance = tolerance;
        cfg.seed = seed;
        cfg.threads = threads;
        cfg.validate();
        return cfg;
    }
};

struct OutputFlags {
    Format format = Format::Table;
    std::string path;

    void attach(CLI::App *cmd) {
        std::map<std::string, Format> names{
            {"table", Format::Table}, {"text", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
        cmd->add_option("--format", format, "Output format: table, json or csv")
            ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
        cmd->add_option("--out", path, "Write output to this file instead of stdout");
    }

    void emit(const std::string &text, std::ostream &out) const {
        if (path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(path);
        if (!f) {
            throw std::runtime_error("Could not write '" + path + "'.");
        }
        f << text;
    }
};

std::string inline_edges(const Graph &g) {
    std::vector<std::string> parts;
    for (auto [a, b] : g.edges()) {
        parts.push_back(fmt::format("{} {}", a, b));
    }
    return fmt::format("{}", fmt::join(parts, ","));
}

nlohmann::json graph_json(const Graph &g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    return {{"n", g.num_vertices()}, {"edges", edges}};
}

std::string bits_of(size_t index, int n) {
    std::string s;
    for (int q = 1; q <= n; q++) {
        s += ((index >> (n - q)) & 1) ? '1' : '0';
    }
    return s;
}

std::string render_state(const StateVector &s, Format format) {
    if (format == Format::Json) {
        return state_to_json(s) + "\n";
    }
    int n = s.num_qubits();
    std::string out;
    if (format == Format::Csv) {
        out = "index,bits,re,im\n";
        for (size_t k = 0; k < s.dim(); k++) {
            out += fmt::format("{},{},{:.17g},{:.17g}\n", k, bits_of(k, n), s[k].real() + 0.0, s[k].imag() + 0.0);
        }
        return out;
    }
    out = fmt::format("# {} qubits; qubit 1 is the most significant bit of the index\n", n);
    for (size_t k = 0; k < s.dim(); k++) {
        out += fmt::format("{:>5}  |{}>  {:+.10f} {:+.10f}i\n", k, bits_of(k, n), s[k].real() + 0.0, s[k].imag() + 0.0);
    }
    return out;
}

std::string render_measure(const MeasureResult &r, Format format) {
    if (format == Format::Json) {
        nlohmann::json j{{"measure", measure_name(r.kind)}, {"value", r.value}};
        if (r.diagnostics) {
            const auto &d = *r.diagnostics;
            j["diagnostics"] = {
                {"restarts_used", d.restarts_used},
                {"best_restart_index", d.best_restart_index},
                {"iterations", d.iterations},
                {"converged", d.converged},
                {"best_fidelity", d.best_fidelity},
                {"restarts_at_best", d.restarts_at_best},
                {"degenerate_redraws", d.degenerate_redraws},
            };
        }
        return j.dump(2) + "\n";
    }
    if (format == Format::Csv) {
        std::string out = "measure,value\n";
        return out + fmt::format("{},{:.17g}\n", measure_name(r.kind), r.value);
    }
    std::string out = fmt::format("{:.5f}\n", r.value);
    if (r.diagnostics) {
        const auto &d = *r.diagnostics;
        out += fmt::format(
            "# restarts={} best_restart={} iterations={} converged={} best_fidelity={:.12f} restarts_at_best={} "
            "degenerate_redraws={}\n",
            d.restarts_used, d.best_restart_index, d.iterations, d.converged ? "true" : "false", d.best_fidelity,
            d.restarts_at_best, d.degenerate_redraws);
    }
    return out;
}

struct VerifyRow {
    std::string status;
    std::string name;
    std::string detail;
};

int verify_catalog(size_t budget, bool lc_pairwise, std::string &text) {
    std::vector<VerifyRow> rows;
    bool ok = true;
    auto add = [&](bool pass, const std::string &name, const std::string &detail) {
        rows.push_back({pass ? "PASS" : "FAIL", name, detail});
        ok = ok && pass;
    };
    const auto &entries = catalog_all();

    int connected = 0;
    for (const auto &e : entries) {
        connected += e.graph.is_connected();
    }
    add(connected == kCatalogSize, "connected", fmt::format("{}/{} connected", connected, kCatalogSize));

    std::vector<int> buckets;
    for (int n = 2; n <= 7; n++) {
        buckets.push_back((int)catalog_ids_with_n(n).size());
    }
    add(buckets == std::vector<int>{1, 1, 2, 4, 11, 26}, "n-buckets", fmt::format("{}", fmt::join(buckets, ",")));

    int iso_pairs = 0;
    int pairs = 0;
    for (size_t i = 0; i < entries.size(); i++) {
        for (size_t j = i + 1; j < entries.size(); j++) {
            pairs++;
            iso_pairs += is_isomorphic(entries[i].graph, entries[j].graph);
        }
    }
    add(iso_pairs == 0, "non-isomorphic", fmt::format("{} of {} pairs isomorphic", iso_pairs, pairs));

    double worst = 0;
    for (const auto &e : entries) {
        auto s = build_graph_state(e.graph);
        for (int a = 1; a <= e.n; a++) {
            worst = std::max(worst, std::abs(stabilizer_expectation(s, e.graph, a) - 1.0));
        }
    }
    add(worst <= 1e-12, "stabilizers", fmt::format("max |<G|K_a|G> - 1| = {:.3g}", worst));

    if (lc_pairwise) {
        std::vector<std::optional<LcOrbit>> orbits(entries.size());
        for (size_t k = 0; k < entries.size(); k++) {
            try {
                orbits[k] = lc_orbit(entries[k].graph, budget);
            } catch (const BudgetExceeded &ex) {
                rows.push_back({"BUDGET EXCEEDED", fmt::format("orbit {}", entries[k].id), ex.what()});
                ok = false;
            }
        }
        int overlapping = 0;
        int checked = 0;
        for (size_t i = 0; i < entries.size(); i++) {
            for (size_t j = i + 1; j < entries.size(); j++) {
                if (!orbits[i] || !orbits[j]) {
                    continue;
                }
                checked++;
                const auto &a = orbits[i]->representatives;
                const auto &b = orbits[j]->representatives;
                bool meet = std::any_of(a.begin(), a.end(), [&](const Graph &g) {
                    return b.contains(g);
                });
                if (meet) {
                    overlapping++;
                    rows.push_back({"FAIL", "lc-pair", fmt::format("graphs {} and {} share an LC orbit",
                                                                   entries[i].id, entries[j].id)});
                }
            }
        }
        add(overlapping == 0 && checked == pairs, "lc-inequivalent",
            fmt::format("{} of {} pairs checked, {} overlapping", checked, pairs, overlapping));
    }

    for (const auto &r : rows) {
        text += fmt::format("{:<16} {:<16} {}\n", r.status, r.name, r.detail);
    }
    text += ok ? "catalog verified\n" : "catalog verification FAILED\n";
    return ok ? 0 : 1;
}

}  // namespace

int graphent::run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Graph-state entanglement: GCM, GEM, local complementation and classification.", "graphent"};
    app.require_subcommand(1);

    GraphInput input;
    GraphInput input2;
    GemFlags gem_flags;
    OutputFlags output;
    int vertex = 0;
    size_t budget = kDefaultOrbitBudget;
    double tol = kDefaultGroupingTolerance;
    std::string measure = "gcm";
    bool lc_pairwise = false;
    std::string export_dir;

    auto *state_cmd = app.add_subcommand("state", "Print the graph-state amplitudes");
    input.attach(state_cmd, "");
    output.attach(state_cmd);

    auto *gcm_cmd = app.add_subcommand("gcm", "Generalized concurrence of a graph state");
    input.attach(gcm_cmd, "");
    output.attach(gcm_cmd);

    auto *gem_cmd = app.add_subcommand("gem", "Geometric entanglement of a graph state");
    input.attach(gem_cmd, "");
    gem_flags.attach(gem_cmd);
    output.attach(gem_cmd);

    auto *lc_cmd = app.add_subcommand("lc", "Local complementation at a vertex");
    input.attach(lc_cmd, "");
    lc_cmd->add_option("--vertex", vertex, "Vertex (1-indexed)")->required();
    output.attach(lc_cmd);

    auto *orbit_cmd = app.add_subcommand("orbit", "LC orbit modulo isomorphism");
    input.attach(orbit_cmd, "");
    orbit_cmd->add_option("--budget", budget, "Maximum orbit size")->capture_default_str();
    output.attach(orbit_cmd);

    auto *equiv_cmd = app.add_subcommand("equiv", "Decide LC equivalence of two graphs");
    input.attach(equiv_cmd, "");
    input2.attach(equiv_cmd, "2");
    equiv_cmd->add_option("--budget", budget, "Maximum orbit size")->capture_default_str();
    output.attach(equiv_cmd);

    auto *classify_cmd = app.add_subcommand("classify", "Classify the 45 catalog graphs by a measure");
    classify_cmd->add_option("--measure", measure, "gcm or gem")->capture_default_str();
    classify_cmd->add_option("--tol", tol, "Grouping tolerance")->capture_default_str();
    gem_flags.attach(classify_cmd);
    output.attach(classify_cmd);

    auto *rp_cmd = app.add_subcommand("rp-table", "Resolution-power table for both measures");
    rp_cmd->add_option("--tol", tol, "Grouping tolerance")->capture_default_str();
    gem_flags.attach(rp_cmd);
    output.attach(rp_cmd);

    auto *verify_cmd = app.add_subcommand("verify-catalog", "Check catalog integrity");
    verify_cmd->add_option("--budget", budget, "Maximum orbit size")->capture_default_str();
    verify_cmd->add_flag("--lc-pairwise", lc_pairwise, "Also check that all LC orbits are disjoint");
    output.attach(verify_cmd);

    auto *export_cmd = app.add_subcommand("export-catalog", "Write gNN.edges files and index.json");
    export_cmd->add_option("--out", export_dir, "Target directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        if (state_cmd->parsed()) {
            output.emit(render_state(build_graph_state(input.resolve("")), output.format), out);
        } else if (gcm_cmd->parsed()) {
            output.emit(render_measure(gcm(build_graph_state(input.resolve(""))), output.format), out);
        } else if (gem_cmd->parsed()) {
            auto cfg = gem_flags.config();
            output.emit(render_measure(gem(build_graph_state(input.resolve("")), cfg), output.format), out);
        } else if (lc_cmd->parsed()) {
            Graph g = local_complement(input.resolve(""), vertex);
            if (output.format == Format::Json) {
                output.emit(graph_json(g).dump(2) + "\n", out);
            } else {
                output.emit(inline_edges(g) + "\n", out);
            }
        } else if (orbit_cmd->parsed()) {
            LcOrbit orbit = lc_orbit(input.resolve(""), budget);
            if (output.format == Format::Json) {
                nlohmann::json reps = nlohmann::json::array();
                for (const auto &g : orbit.representatives) {
                    reps.push_back(graph_json(g));
                }
                output.emit(nlohmann::json{{"size", orbit.size()}, {"representatives", reps}}.dump(2) + "\n", out);
            } else {
                std::string text = fmt::format("orbit size {}\n", orbit.size());
                for (const auto &g : orbit.representatives) {
                    text += inline_edges(g) + "\n";
                }
                output.emit(text, out);
            }
        } else if (equiv_cmd->parsed()) {
            Graph a = input.resolve("");
            Graph b = input2.resolve("2");
            bool eq = are_lc_equivalent(a, b, budget);
            if (output.format == Format::Json) {
                output.emit(nlohmann::json{{"lc_equivalent", eq}, {"isomorphic", is_isomorphic(a, b)}}.dump(2) + "\n",
                            out);
            } else {
                output.emit(eq ? "equivalent\n" : "inequivalent\n", out);
            }
        } else if (classify_cmd->parsed()) {
            auto report = build_report(parse_measure_kind(measure), gem_flags.config(), tol);
            switch (output.format) {
                case Format::Json:
                    output.emit(report_to_json(report), out);
                    break;
                case Format::Csv:
                    output.emit(report_to_csv(report), out);
                    break;
                case Format::Table:
                    output.emit(report_to_text(report), out);
                    break;
            }
        } else if (rp_cmd->parsed()) {
            auto table = build_rp_table(gem_flags.config(), tol);
            switch (output.format) {
                case Format::Json:
                    output.emit(rp_table_to_json(table), out);
                    break;
                case Format::Csv:
                    output.emit(rp_table_to_csv(table), out);
                    break;
                case Format::Table:
                    output.emit(rp_table_to_text(table), out);
                    break;
            }
        } else if (verify_cmd->parsed()) {
            std::string text;
            int status = verify_catalog(budget, lc_pairwise, text);
            output.emit(text, out);
            return status;
        } else if (export_cmd->parsed()) {
            export_catalog(export_dir);
            out << "wrote " << kCatalogSize << " edge lists and index.json to " << export_dir << "\n";
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
