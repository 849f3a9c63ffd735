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

#ifndef GRAPHENT_MEASURES_H
#define GRAPHENT_MEASURES_H

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphent/reductions.h"
#include "graphent/state_vector.h"

namespace graphent {

enum class MeasureKind { GCM, GEM };

std::string measure_name(MeasureKind kind);
/// Accepts "gcm" / "gem" (case-insensitive).
MeasureKind parse_measure_kind(const std::string &text);

/// A fully separable state |a>|b>|c>... with one unit-norm factor per qubit.
class ProductState {
   public:
    using Factor = std::array<cplx, 2>;

    explicit ProductState(std::vector<Factor> factors);

    int num_qubits() const {
        return (int)factors_.size();
    }
    const std::vector<Factor> &factors() const {
        return factors_;
    }
    const Factor &factor(int q) const;

    /// Expands the tensor product into a dense state (same bit order as StateVector).
    StateVector to_state() const;

   private:
    std::vector<Factor> factors_;
};

/// <phi|psi>.
cplx product_overlap(const ProductState &phi, const StateVector &psi);

/// |<phi|psi>|^2.
double product_fidelity(const ProductState &phi, const StateVector &psi);

struct GemConfig {
    int restarts = 64;
    int max_iterations = 500;
    /// Stop a restart once a full sweep raises the fidelity by less than this.
    double tolerance = 1e-12;
    uint64_t seed = 1;
    /// Worker threads for independent restarts. Results do not depend on it.
    unsigned threads = 1;

    /// Throws std::invalid_argument when restarts < 1, max_iterations < 1, or tolerance <= 0.
    void validate() const;
};

struct GemDiagnostics {
    int restarts_used = 0;
    int best_restart_index = -1;
    /// Sweeps performed by the winning restart.
    int iterations = 0;
    /// Whether the winning restart met the tolerance before max_iterations.
    bool converged = false;
    double best_fidelity = 0;
    /// Restarts whose final fidelity is within 1e-9 of the best.
    int restarts_at_best = 0;
    /// Starting points redrawn because a contraction vanished.
    int degenerate_redraws = 0;
};

struct MeasureResult {
    MeasureKind kind;
    double value;
    /// Populated for GEM only.
    std::optional<GemDiagnostics> diagnostics;
    /// The best product state found (GEM only).
    std::optional<ProductState> closest_product;
};

/// Generalized concurrence:
///   2^(1 - n/2) * sqrt(2^n - 2 - sum over nonempty proper subsets of Tr rho^2).
/// Requires n >= 2.
MeasureResult gcm(const StateVector &s);

/// Raised by see_saw_step when the contraction for the updated factor vanishes.
class DegenerateContraction : public std::runtime_error {
   public:
    explicit DegenerateContraction(int qubit);
};

/// Replaces factor k (1-indexed) with the normalized contraction of s against
/// every other factor. That choice maximizes |<phi|s>|^2 over factor k, so the
/// fidelity never decreases.
ProductState see_saw_step(const StateVector &s, const ProductState &phi, int k);

/// Geometric measure 1 - max |<phi|s>|^2 over product states, estimated by
/// cyclic see-saw sweeps from `cfg.restarts` Haar-random starting points.
/// Restart r draws from a stream derived from (cfg.seed, r), so the result is
/// independent of cfg.threads. The value is an upper bound on the true measure.
MeasureResult gem(const StateVector &s, const GemConfig &cfg = {});

/// 1 - (largest eigenvalue of reduce(s, cut)): the geometric measure for
/// products across a single bipartition. Exact for n = 2, a lower bound on
/// gem otherwise.
double gem_bipartite_oracle(const StateVector &s, const QubitSubset &cut);

/// Grid search for the geometric measure on n <= 3 qubits. Every factor but
/// the last ranges over a Bloch-sphere grid (polar angle in [0, pi] with both
/// poles, azimuth in [0, 2pi)), `grid_density` points per angle; the last
/// factor is set to its exact optimum given the others. Returns
/// 1 - best fidelity.
double brute_force_gem(const StateVector &s, int grid_density);

}  // namespace graphent

#endif
