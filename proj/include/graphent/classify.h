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

#ifndef GRAPHENT_CLASSIFY_H
#define GRAPHENT_CLASSIFY_H

#include <string>
#include <utility>
#include <vector>

#include "graphent/measures.h"

namespace graphent {

constexpr double kDefaultGroupingTolerance = 1e-4;

struct MeasureClass {
    /// 1-based, ascending by value.
    int index;
    /// Mean of the member values, full precision.
    double value;
    /// Graph ids, ascending.
    std::vector<int> members;

    /// value rounded to 5 decimals.
    double rounded() const;
};

/// Single-linkage grouping of the sorted values: neighbours closer than `tol`
/// share a class. The result does not depend on input order.
std::vector<MeasureClass> group_by_value(std::vector<std::pair<int, double>> values, double tol);

/// 100 * eta_measure / eta_kappa. Throws std::invalid_argument when eta_kappa < 1.
double resolution_power(int eta_measure, int eta_kappa);

struct ResolutionRow {
    /// 0 for the cumulative row.
    int n;
    int eta_measure;
    int eta_kappa;
    double rp;

    /// "7/45"
    std::string fraction() const;
};

struct ClassificationReport {
    MeasureKind kind;
    double tolerance;
    /// GEM settings used (ignored for GCM).
    GemConfig gem_config;
    /// (id, value) for every catalog graph, id order.
    std::vector<std::pair<int, double>> values;
    /// Classes over all 45 graphs jointly.
    std::vector<MeasureClass> classes;
    /// One row per vertex count 2..7, each grouped among that n's graphs only.
    std::vector<ResolutionRow> per_n;
    ResolutionRow cumulative;
};

/// Evaluates the measure on every catalog graph state (in parallel over
/// graphs with gem_config.threads workers) and classifies the values.
ClassificationReport build_report(
    MeasureKind kind, const GemConfig &gem_config = {}, double tol = kDefaultGroupingTolerance);

/// Measure value for one state, dispatching on kind.
MeasureResult evaluate(MeasureKind kind, const StateVector &s, const GemConfig &gem_config);

std::string report_to_json(const ClassificationReport &report);
std::string report_to_csv(const ClassificationReport &report);
/// Aligned columns: Class / value / Graph No.
std::string report_to_text(const ClassificationReport &report);

/// The side-by-side resolution table for both measures.
struct RpTable {
    ClassificationReport gcm;
    ClassificationReport gem;
};

RpTable build_rp_table(const GemConfig &gem_config = {}, double tol = kDefaultGroupingTolerance);

std::string rp_table_to_json(const RpTable &table);
std::string rp_table_to_csv(const RpTable &table);
std::string rp_table_to_text(const RpTable &table);

}  // namespace graphent

#endif
