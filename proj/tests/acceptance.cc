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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "cli.h"
#include "graphent/catalog.h"
#include "graphent/classify.h"
#include "graphent/measures.h"
#include "reference_tables.h"

using namespace graphent;
using namespace graphent::testing;

namespace {

GemConfig table_config() {
    GemConfig cfg;
    cfg.restarts = 256;
    cfg.seed = 7;
    return cfg;
}

bool same_classes(const std::vector<MeasureClass> &got, const std::vector<ReferenceClass> &ref, double tol, std::string &why) {
    if (got.size() != ref.size()) {
        why = fmt::format("{} classes, expected {}", got.size(), ref.size());
        return false;
    }
    for (size_t i = 0; i < got.size(); i++) {
        if (std::abs(got[i].value - ref[i].value) > tol || got[i].members != ref[i].members) {
            why = fmt::format("class {} value {:.6f} members differ or off by > {}", i + 1, got[i].value, tol);
            return false;
        }
    }
    return true;
}

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string &)> check;
};

}  // namespace

int main() {
    const GemConfig cfg = table_config();
    std::map<int, double> gem_values;
    ClassificationReport gcm_report;
    ClassificationReport gem_report;

    std::vector<Criterion> criteria{
        {1, "GCM values within 5e-6 of reference for all 45 graphs",
         [&](std::string &why) {
             gcm_report = build_report(MeasureKind::GCM);
             double worst = 0;
             int worst_id = 0;
             for (const auto &[id, v] : gcm_report.values) {
                 double d = std::abs(v - *catalog_get(id).expected_gcm);
                 if (d > worst) {
                     worst = d;
                     worst_id = id;
                 }
             }
             why = fmt::format("max deviation {:.2e} (graph {})", worst, worst_id);
             return worst <= 5e-6;
         }},
        {2, "GCM grouping gives the 27 reference classes",
         [&](std::string &why) {
             why = "27 classes, memberships identical";
             return same_classes(gcm_report.classes, gcm_reference_classes(), 5e-6, why);
         }},
        {3, "GEM (256 restarts) within 1e-3 of reference, 7 classes",
         [&](std::string &why) {
             gem_report = build_report(MeasureKind::GEM, cfg);
             double worst = 0;
             for (const auto &[id, v] : gem_report.values) {
                 gem_values[id] = v;
                 worst = std::max(worst, std::abs(v - *catalog_get(id).expected_gem));
             }
             if (worst > 1e-3) {
                 why = fmt::format("max deviation {:.2e}", worst);
                 return false;
             }
             why = fmt::format("max deviation {:.2e}, 7 classes, memberships identical", worst);
             return same_classes(gem_report.classes, gem_reference_classes(), 1e-3, why);
         }},
        {4, "RP table counts and percentages",
         [&](std::string &why) {
             const auto &ref = reference_rp_rows();
             for (size_t i = 0; i < ref.size(); i++) {
                 const ResolutionRow &g = i < 6 ? gcm_report.per_n[i] : gcm_report.cumulative;
                 const ResolutionRow &e = i < 6 ? gem_report.per_n[i] : gem_report.cumulative;
                 if (g.n != ref[i].n || g.eta_measure != ref[i].eta_gcm || e.eta_measure != ref[i].eta_gem ||
                     g.eta_kappa != ref[i].eta_kappa || e.eta_kappa != ref[i].eta_kappa) {
                     why = fmt::format("row n={} counts ({},{},{})", ref[i].n, g.eta_measure, e.eta_measure, g.eta_kappa);
                     return false;
                 }
                 if (std::abs(g.rp - ref[i].rp_gcm) > 0.5 || std::abs(e.rp - ref[i].rp_gem) > 0.5) {
                     why = fmt::format("row n={} rp {:.2f}/{:.2f}", ref[i].n, g.rp, e.rp);
                     return false;
                 }
             }
             if (gem_report.cumulative.fraction() != "7/45" || gcm_report.cumulative.fraction() != "27/45") {
                 why = "cumulative fractions";
                 return false;
             }
             why = fmt::format(
                 "cumulative {} = {:.2f}%, {} = {:.2f}%",
                 gcm_report.cumulative.fraction(),
                 gcm_report.cumulative.rp,
                 gem_report.cumulative.fraction(),
                 gem_report.cumulative.rp);
             return true;
         }},
        {5, "stabilizer expectations equal 1 within 1e-12",
         [&](std::string &why) {
             double worst = 0;
             for (const auto &e : catalog_all()) {
                 StateVector s = build_graph_state(e.graph);
                 for (int a = 1; a <= e.n; a++) {
                     worst = std::max(worst, std::abs(stabilizer_expectation(s, e.graph, a) - cplx(1)));
                 }
             }
             why = fmt::format("max |<K_a> - 1| = {:.2e}", worst);
             return worst <= 1e-12;
         }},
        {6, "LC unitary maps |G> to |LC(G,a)> up to phase within 1e-10",
         [&](std::string &why) {
             double worst = 0;
             for (const auto &e : catalog_all()) {
                 StateVector s = build_graph_state(e.graph);
                 for (int a = 1; a <= e.n; a++) {
                     double m = overlap_magnitude(
                         build_graph_state(local_complement(e.graph, a)), lc_unitary_apply(s, e.graph, a));
                     worst = std::max(worst, std::abs(m - 1));
                 }
             }
             why = fmt::format("max ||<.|.>| - 1| = {:.2e}", worst);
             return worst <= 1e-10;
         }},
        {7, "200 local-unitary trials: GCM within 1e-9, GEM within 1e-6",
         [&](std::string &why) {
             std::mt19937_64 rng(2026);
             double worst_gcm = 0;
             double worst_gem = 0;
             for (int trial = 0; trial < 200; trial++) {
                 const CatalogEntry &e = catalog_all()[rng() % kCatalogSize];
                 StateVector s = build_graph_state(e.graph);
                 for (int q = 1; q <= e.n; q++) {
                     s = apply_local_unitary(s, LocalUnitary(q, random_unitary(rng())));
                 }
                 GemConfig trial_cfg = cfg;
                 trial_cfg.seed = rng();
                 worst_gcm = std::max(worst_gcm, std::abs(gcm(s).value - gcm_report.values[e.id - 1].second));
                 worst_gem = std::max(worst_gem, std::abs(gem(s, trial_cfg).value - gem_values[e.id]));
             }
             why = fmt::format("max GCM drift {:.2e}, max GEM drift {:.2e}", worst_gcm, worst_gem);
             return worst_gcm <= 1e-9 && worst_gem <= 1e-6;
         }},
        {8, "oracles: n=2 exact, bipartite bound, brute force",
         [&](std::string &why) {
             StateVector g1 = build_graph_state(catalog_get(1).graph);
             double a = std::abs(gem(g1, cfg).value - gem_bipartite_oracle(g1, QubitSubset(2, 1u)));
             for (uint64_t seed = 0; seed < 20; seed++) {
                 StateVector r = random_state(2, seed);
                 a = std::max(a, std::abs(gem(r, cfg).value - gem_bipartite_oracle(r, QubitSubset(2, 1u))));
             }
             double b = -1;
             for (const auto &e : catalog_all()) {
                 StateVector s = build_graph_state(e.graph);
                 for (const auto &cut : proper_subsets(e.n)) {
                     b = std::max(b, gem_bipartite_oracle(s, cut) - gem_values[e.id]);
                 }
             }
             double c = 0;
             for (const auto &e : catalog_all()) {
                 if (e.n <= 3) {
                     c = std::max(c, std::abs(brute_force_gem(build_graph_state(e.graph), 72) - gem_values[e.id]));
                 }
             }
             why = fmt::format("(a) {:.2e} (b) max excess {:.2e} (c) {:.2e}", a, b, c);
             return a <= 1e-10 && b <= 1e-9 && c <= 5e-3;
         }},
        {9, "catalog connected, non-isomorphic, LC orbits pairwise disjoint",
         [&](std::string &why) {
             const auto &all = catalog_all();
             std::vector<LcOrbit> orbits;
             for (const auto &e : all) {
                 if (!e.graph.is_connected()) {
                     why = fmt::format("graph {} disconnected", e.id);
                     return false;
                 }
                 orbits.push_back(lc_orbit(e.graph));
             }
             int pairs = 0;
             for (size_t i = 0; i < all.size(); i++) {
                 for (size_t j = i + 1; j < all.size(); j++) {
                     pairs++;
                     if (is_isomorphic(all[i].graph, all[j].graph) ||
                         orbits[i].contains(canonical_form(all[j].graph))) {
                         why = fmt::format("graphs {} and {} coincide", all[i].id, all[j].id);
                         return false;
                     }
                 }
             }
             why = fmt::format("{} pairs checked", pairs);
             return pairs == 990;
         }},
        {10, "classify --measure gem --seed 7 JSON identical across thread counts",
         [&](std::string &why) {
             auto run = [](const std::string &threads) {
                 std::stringstream out, err;
                 int status = run_cli(
                     {"classify", "--measure", "gem", "--seed", "7", "--format", "json", "--threads", threads},
                     out,
                     err);
                 return status == 0 ? out.str() : "error: " + err.str();
             };
             std::string one = run("1");
             std::string four = run("4");
             why = fmt::format("{} bytes", one.size());
             return one == four && one.rfind("error", 0) != 0;
         }},
    };

    int failures = 0;
    for (auto &c : criteria) {
        std::string why;
        auto start = std::chrono::steady_clock::now();
        bool ok;
        try {
            ok = c.check(why);
        } catch (const std::exception &e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << fmt::format(
                         "{} criterion {}: {} [{}] ({:.2f}s)", ok ? "PASS" : "FAIL", c.number, c.name, why, secs)
                  << std::endl;
        failures += !ok;
    }
    return failures == 0 ? 0 : 1;
}
