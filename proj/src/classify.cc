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

#include "graphent/classify.h"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <map>

#include "graphent/catalog.h"
#include "graphent/parallel.h"
#include "json.hpp"

using namespace graphent;

namespace {

std::string header_name(MeasureKind kind) {
    return kind == MeasureKind::GCM ? "GCM" : "GEM";
}

ResolutionRow make_row(int n, int eta_measure, int eta_kappa) {
    return {n, eta_measure, eta_kappa, resolution_power(eta_measure, eta_kappa)};
}

nlohmann::json row_json(const ResolutionRow &row) {
    nlohmann::json j;
    if (row.n > 0) {
        j["n"] = row.n;
    }
    j["eta_measure"] = row.eta_measure;
    j["eta_kappa"] = row.eta_kappa;
    j["rp"] = row.rp;
    j["rp_fraction"] = row.fraction();
    return j;
}

nlohmann::json report_json(const ClassificationReport &r) {
    nlohmann::json j;
    j["measure"] = measure_name(r.kind);
    j["tolerance"] = r.tolerance;
    if (r.kind == MeasureKind::GEM) {
        j["gem_config"] = {
            {"restarts", r.gem_config.restarts},
            {"max_iterations", r.gem_config.max_iterations},
            {"tolerance", r.gem_config.tolerance},
            {"seed", r.gem_config.seed},
        };
    }
    auto &values = j["values"] = nlohmann::json::array();
    for (auto [id, v] : r.values) {
        values.push_back({{"id", id}, {"n", catalog_get(id).n}, {"value", v}});
    }
    auto &classes = j["classes"] = nlohmann::json::array();
    for (const auto &c : r.classes) {
        classes.push_back({{"index", c.index}, {"value", c.value}, {"members", c.members}});
    }
    auto &per_n = j["per_n"] = nlohmann::json::array();
    for (const auto &row : r.per_n) {
        per_n.push_back(row_json(row));
    }
    j["cumulative"] = row_json(r.cumulative);
    return j;
}

std::string members_str(const std::vector<int> &members) {
    return fmt::format("{}", fmt::join(members, ", "));
}

std::string rp_cell(const ResolutionRow &row) {
    return fmt::format("{:.2f}% ({})", row.rp, row.fraction());
}

}  // namespace

double MeasureClass::rounded() const {
    return std::round(value * 1e5) / 1e5;
}

std::vector<MeasureClass> graphent::group_by_value(std::vector<std::pair<int, double>> values, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("Grouping tolerance must be positive.");
    }
    std::sort(values.begin(), values.end(), [](const auto &a, const auto &b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    std::vector<MeasureClass> classes;
    std::vector<double> sums;
    for (size_t k = 0; k < values.size(); k++) {
        if (k == 0 || values[k].second - values[k - 1].second >= tol) {
            classes.push_back({(int)classes.size() + 1, 0, {}});
            sums.push_back(0);
        }
        classes.back().members.push_back(values[k].first);
        sums.back() += values[k].second;
    }
    for (size_t c = 0; c < classes.size(); c++) {
        classes[c].value = sums[c] / (double)classes[c].members.size();
        std::sort(classes[c].members.begin(), classes[c].members.end());
    }
    return classes;
}

double graphent::resolution_power(int eta_measure, int eta_kappa) {
    if (eta_kappa < 1) {
        throw std::invalid_argument("Resolution power needs at least one canonical class.");
    }
    return 100.0 * eta_measure / eta_kappa;
}

std::string ResolutionRow::fraction() const {
    return fmt::format("{}/{}", eta_measure, eta_kappa);
}

MeasureResult graphent::evaluate(MeasureKind kind, const StateVector &s, const GemConfig &gem_config) {
    return kind == MeasureKind::GCM ? gcm(s) : gem(s, gem_config);
}

ClassificationReport graphent::build_report(MeasureKind kind, const GemConfig &gem_config, double tol) {
    gem_config.validate();
    const auto &entries = catalog_all();
    std::vector<double> values(entries.size());
    GemConfig inner = gem_config;
    inner.threads = 1;
    parallel_for(entries.size(), gem_config.threads, [&](size_t k) {
        values[k] = evaluate(kind, build_graph_state(entries[k].graph), inner).value;
    });

    ClassificationReport report{kind, tol, gem_config, {}, {}, {}, {}};
    std::map<int, std::vector<std::pair<int, double>>> by_n;
    for (size_t k = 0; k < entries.size(); k++) {
        report.values.emplace_back(entries[k].id, values[k]);
        by_n[entries[k].n].emplace_back(entries[k].id, values[k]);
    }
    report.classes = group_by_value(report.values, tol);
    for (const auto &[n, vals] : by_n) {
        int eta = (int)group_by_value(vals, tol).size();
        report.per_n.push_back(make_row(n, eta, (int)vals.size()));
    }
    report.cumulative = make_row(0, (int)report.classes.size(), (int)entries.size());
    return report;
}

std::string graphent::report_to_json(const ClassificationReport &report) {
    return report_json(report).dump(2) + "\n";
}

std::string graphent::report_to_csv(const ClassificationReport &report) {
    std::string out = fmt::format("class,{},graph_ids\n", measure_name(report.kind));
    for (const auto &c : report.classes) {
        out += fmt::format("{},{:.5f},\"{}\"\n", c.index, c.value, members_str(c.members));
    }
    return out;
}

std::string graphent::report_to_text(const ClassificationReport &report) {
    std::string name = header_name(report.kind);
    std::string out = fmt::format("{:<6} {:>9}   {}\n", "Class", name, "Graph No.");
    for (const auto &c : report.classes) {
        out += fmt::format("{:<6} {:>9.5f}   {}\n", c.index, c.value, members_str(c.members));
    }
    out += fmt::format("\n{} classes over {} graphs (tolerance {:g})\n", report.classes.size(), report.values.size(),
                       report.tolerance);
    return out;
}

RpTable graphent::build_rp_table(const GemConfig &gem_config, double tol) {
    return {build_report(MeasureKind::GCM, gem_config, tol), build_report(MeasureKind::GEM, gem_config, tol)};
}

std::string graphent::rp_table_to_json(const RpTable &table) {
    nlohmann::json j;
    auto &rows = j["rows"] = nlohmann::json::array();
    auto row = [](const ResolutionRow &g, const ResolutionRow &e) {
        nlohmann::json r;
        r["n"] = g.n > 0 ? nlohmann::json(g.n) : nlohmann::json("up to 7");
        r["eta_gcm"] = g.eta_measure;
        r["eta_gem"] = e.eta_measure;
        r["eta_kappa"] = g.eta_kappa;
        r["rp_gcm"] = g.rp;
        r["rp_gem"] = e.rp;
        r["rp_gcm_fraction"] = g.fraction();
        r["rp_gem_fraction"] = e.fraction();
        return r;
    };
    for (size_t k = 0; k < table.gcm.per_n.size(); k++) {
        rows.push_back(row(table.gcm.per_n[k], table.gem.per_n[k]));
    }
    rows.push_back(row(table.gcm.cumulative, table.gem.cumulative));
    j["tolerance"] = table.gcm.tolerance;
    j["gem_seed"] = table.gem.gem_config.seed;
    j["gem_restarts"] = table.gem.gem_config.restarts;
    return j.dump(2) + "\n";
}

std::string graphent::rp_table_to_csv(const RpTable &table) {
    std::string out = "n,eta_gcm,eta_gem,eta_kappa,rp_gcm,rp_gem\n";
    auto line = [&](const std::string &label, const ResolutionRow &g, const ResolutionRow &e) {
        out += fmt::format("{},{},{},{},{:.4f},{:.4f}\n", label, g.eta_measure, e.eta_measure, g.eta_kappa, g.rp, e.rp);
    };
    for (size_t k = 0; k < table.gcm.per_n.size(); k++) {
        line(std::to_string(table.gcm.per_n[k].n), table.gcm.per_n[k], table.gem.per_n[k]);
    }
    line("up to 7", table.gcm.cumulative, table.gem.cumulative);
    return out;
}

std::string graphent::rp_table_to_text(const RpTable &table) {
    std::string out = fmt::format(
        "{:<8} {:>8} {:>8} {:>8}   {:<18} {:<18}\n", "n", "eta[GCM]", "eta[GEM]", "eta[k]", "RP[GCM]", "RP[GEM]");
    auto line = [&](const std::string &label, const ResolutionRow &g, const ResolutionRow &e) {
        out += fmt::format("{:<8} {:>8} {:>8} {:>8}   {:<18} {:<18}\n", label, g.eta_measure, e.eta_measure,
                           g.eta_kappa, rp_cell(g), rp_cell(e));
    };
    for (size_t k = 0; k < table.gcm.per_n.size(); k++) {
        line(std::to_string(table.gcm.per_n[k].n), table.gcm.per_n[k], table.gem.per_n[k]);
    }
    line("Up to 7", table.gcm.cumulative, table.gem.cumulative);
    return out;
}
