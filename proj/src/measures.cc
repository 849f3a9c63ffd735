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

#include "graphent/measures.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>

#include "graphent/parallel.h"
#include "graphent/rng.h"

using namespace graphent;

namespace {

constexpr double kDegenerateNorm = 1e-12;
constexpr int kMaxRedraws = 64;

ProductState::Factor random_factor(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    cplx a(normal(rng), normal(rng));
    cplx b(normal(rng), normal(rng));
    double r = std::sqrt(std::norm(a) + std::norm(b));
    return {a / r, b / r};
}

/// Contraction of s with conj(factor q) on every qubit q != k (0-indexed k).
std::array<cplx, 2> contract_except(
    const StateVector &s, const std::vector<ProductState::Factor> &factors, int k) {
    int n = s.num_qubits();
    std::array<cplx, 2> c{0, 0};
    for (size_t idx = 0; idx < s.dim(); idx++) {
        cplx w = s[idx];
        for (int q = 0; q < n; q++) {
            if (q == k) {
                continue;
            }
            w *= std::conj(factors[q][(idx >> (n - 1 - q)) & 1]);
        }
        c[(idx >> (n - 1 - k)) & 1] += w;
    }
    return c;
}

/// In-place see-saw update of factor k (0-indexed). Returns the fidelity after
/// the update, or nullopt when the contraction vanishes.
std::optional<double> update_factor(const StateVector &s, std::vector<ProductState::Factor> &factors, int k) {
    auto c = contract_except(s, factors, k);
    double fid = std::norm(c[0]) + std::norm(c[1]);
    double nrm = std::sqrt(fid);
    if (nrm < kDegenerateNorm) {
        return std::nullopt;
    }
    factors[k] = {c[0] / nrm, c[1] / nrm};
    return fid;
}

struct RestartOutcome {
    double fidelity = 0;
    int iterations = 0;
    bool converged = false;
    int redraws = 0;
    std::vector<ProductState::Factor> factors;
};

RestartOutcome run_restart(const StateVector &s, const GemConfig &cfg, int restart) {
    int n = s.num_qubits();
    auto rng = stream_rng(cfg.seed, (uint64_t)restart);
    RestartOutcome out;
    while (true) {
        std::vector<ProductState::Factor> factors(n);
        for (auto &f : factors) {
            f = random_factor(rng);
        }
        double prev = -1;
        bool degenerate = false;
        int sweep = 0;
        bool converged = false;
        double fid = 0;
        while (sweep < cfg.max_iterations) {
            for (int k = 0; k < n && !degenerate; k++) {
                auto f = update_factor(s, factors, k);
                if (!f) {
                    degenerate = true;
                } else {
                    fid = *f;
                }
            }
            if (degenerate) {
                break;
            }
            sweep++;
            if (fid - prev < cfg.tolerance) {
                converged = true;
                break;
            }
            prev = fid;
        }
        if (degenerate) {
            out.redraws++;
            if (out.redraws > kMaxRedraws) {
                out.fidelity = 0;
                return out;
            }
            continue;
        }
        out.fidelity = fid;
        out.iterations = sweep;
        out.converged = converged;
        out.factors = std::move(factors);
        return out;
    }
}

}  // namespace

std::string graphent::measure_name(MeasureKind kind) {
    return kind == MeasureKind::GCM ? "gcm" : "gem";
}

MeasureKind graphent::parse_measure_kind(const std::string &text) {
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) {
        return (char)std::tolower(c);
    });
    if (t == "gcm") {
        return MeasureKind::GCM;
    }
    if (t == "gem") {
        return MeasureKind::GEM;
    }
    throw std::invalid_argument("Unknown measure '" + text + "' (expected gcm or gem).");
}

ProductState::ProductState(std::vector<Factor> factors) : factors_(std::move(factors)) {
    if (factors_.empty() || (int)factors_.size() > kMaxQubits) {
        throw std::invalid_argument("Product state needs 1.." + std::to_string(kMaxQubits) + " factors.");
    }
    for (const auto &f : factors_) {
        double nrm = std::sqrt(std::norm(f[0]) + std::norm(f[1]));
        if (std::abs(nrm - 1) > 1e-12) {
            throw std::invalid_argument("Product state factor is not unit-norm.");
        }
    }
}

const ProductState::Factor &ProductState::factor(int q) const {
    if (q < 1 || q > num_qubits()) {
        throw std::out_of_range("Factor index out of range.");
    }
    return factors_[q - 1];
}

StateVector ProductState::to_state() const {
    int n = num_qubits();
    std::vector<cplx> amps(size_t{1} << n);
    for (size_t idx = 0; idx < amps.size(); idx++) {
        cplx w = 1;
        for (int q = 0; q < n; q++) {
            w *= factors_[q][(idx >> (n - 1 - q)) & 1];
        }
        amps[idx] = w;
    }
    return StateVector(n, std::move(amps));
}

cplx graphent::product_overlap(const ProductState &phi, const StateVector &psi) {
    if (phi.num_qubits() != psi.num_qubits()) {
        throw std::invalid_argument("Product state and state have different qubit counts.");
    }
    auto c = contract_except(psi, phi.factors(), 0);
    return std::conj(phi.factors()[0][0]) * c[0] + std::conj(phi.factors()[0][1]) * c[1];
}

double graphent::product_fidelity(const ProductState &phi, const StateVector &psi) {
    return std::norm(product_overlap(phi, psi));
}

void GemConfig::validate() const {
    if (restarts < 1) {
        throw std::invalid_argument("GEM needs at least one restart.");
    }
    if (max_iterations < 1) {
        throw std::invalid_argument("GEM needs at least one iteration.");
    }
    if (!(tolerance > 0)) {
        throw std::invalid_argument("GEM tolerance must be positive.");
    }
}

MeasureResult graphent::gcm(const StateVector &s) {
    int n = s.num_qubits();
    if (n < 2) {
        throw std::invalid_argument("GCM needs at least two qubits.");
    }
    double total = purity_sum(s);
    double radicand = std::ldexp(1.0, n) - 2 - total;
    if (radicand < -1e-10) {
        throw std::runtime_error("GCM radicand is negative (" + std::to_string(radicand) + ").");
    }
    radicand = std::max(radicand, 0.0);
    double value = std::pow(2.0, 1.0 - n / 2.0) * std::sqrt(radicand);
    return MeasureResult{MeasureKind::GCM, value, std::nullopt, std::nullopt};
}

DegenerateContraction::DegenerateContraction(int qubit)
    : std::runtime_error("See-saw contraction vanished at qubit " + std::to_string(qubit) + ".") {
}

ProductState graphent::see_saw_step(const StateVector &s, const ProductState &phi, int k) {
    if (phi.num_qubits() != s.num_qubits()) {
        throw std::invalid_argument("Product state and state have different qubit counts.");
    }
    if (k < 1 || k > s.num_qubits()) {
        throw std::out_of_range("Qubit " + std::to_string(k) + " outside 1.." + std::to_string(s.num_qubits()) + ".");
    }
    auto factors = phi.factors();
    if (!update_factor(s, factors, k - 1)) {
        throw DegenerateContraction(k);
    }
    return ProductState(std::move(factors));
}

MeasureResult graphent::gem(const StateVector &s, const GemConfig &cfg) {
    cfg.validate();
    std::vector<RestartOutcome> outcomes(cfg.restarts);
    parallel_for(outcomes.size(), cfg.threads, [&](size_t r) {
        outcomes[r] = run_restart(s, cfg, (int)r);
    });

    // Serial fold in index order: ties go to the lowest restart index.
    GemDiagnostics diag;
    diag.restarts_used = cfg.restarts;
    int best = -1;
    for (int r = 0; r < cfg.restarts; r++) {
        diag.degenerate_redraws += outcomes[r].redraws;
        if (outcomes[r].factors.empty()) {
            continue;
        }
        if (best < 0 || outcomes[r].fidelity > outcomes[best].fidelity + 1e-15) {
            best = r;
        }
    }
    if (best < 0) {
        throw std::runtime_error("Every GEM restart degenerated.");
    }
    const auto &win = outcomes[best];
    diag.best_restart_index = best;
    diag.iterations = win.iterations;
    diag.converged = win.converged;
    diag.best_fidelity = win.fidelity;
    for (const auto &o : outcomes) {
        if (!o.factors.empty() && o.fidelity >= win.fidelity - 1e-9) {
            diag.restarts_at_best++;
        }
    }
    return MeasureResult{MeasureKind::GEM, 1 - win.fidelity, diag, ProductState(win.factors)};
}

double graphent::gem_bipartite_oracle(const StateVector &s, const QubitSubset &cut) {
    if (!cut.is_proper()) {
        throw std::invalid_argument("Bipartite oracle needs a proper nonempty cut.");
    }
    // Spectra of the two reduced states agree; diagonalize the smaller one.
    QubitSubset side = 2 * cut.size() <= s.num_qubits() ? cut : cut.complement();
    DensityMatrix rho = reduce(s, side);
    Eigen::MatrixXcd m((Eigen::Index)rho.dim(), (Eigen::Index)rho.dim());
    for (size_t r = 0; r < rho.dim(); r++) {
        for (size_t c = 0; c < rho.dim(); c++) {
            m((Eigen::Index)r, (Eigen::Index)c) = rho.at(r, c);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return 1 - solver.eigenvalues().maxCoeff();
}

double graphent::brute_force_gem(const StateVector &s, int grid_density) {
    int n = s.num_qubits();
    if (n > 3) {
        throw std::invalid_argument("Brute-force GEM is limited to 3 qubits.");
    }
    if (grid_density < 2) {
        throw std::invalid_argument("Grid density must be at least 2.");
    }
    std::vector<std::array<cplx, 2>> grid;
    for (int i = 0; i < grid_density; i++) {
        double theta = std::numbers::pi * i / (grid_density - 1);
        for (int j = 0; j < grid_density; j++) {
            double azimuth = 2 * std::numbers::pi * j / grid_density;
            grid.push_back({std::cos(theta / 2), std::polar(std::sin(theta / 2), azimuth)});
        }
        // Both poles are single points on the sphere.
        if (i == 0 || i == grid_density - 1) {
            grid.resize(grid.size() - (grid_density - 1));
        }
    }

    // Contract the leading qubit of `v` (length 2 * rest) against conj(factor).
    auto contract_front = [](const std::vector<cplx> &v, const std::array<cplx, 2> &f) {
        size_t half = v.size() / 2;
        std::vector<cplx> out(half);
        for (size_t t = 0; t < half; t++) {
            out[t] = std::conj(f[0]) * v[t] + std::conj(f[1]) * v[half + t];
        }
        return out;
    };

    double best = 0;
    auto descend = [&](auto &self, const std::vector<cplx> &v) -> void {
        if (v.size() == 2) {
            best = std::max(best, std::norm(v[0]) + std::norm(v[1]));
            return;
        }
        for (const auto &f : grid) {
            self(self, contract_front(v, f));
        }
    };
    descend(descend, std::vector<cplx>(s.amplitudes().begin(), s.amplitudes().end()));
    return 1 - best;
}
