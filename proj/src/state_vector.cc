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

#include "graphent/state_vector.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "graphent/rng.h"
#include "json.hpp"

using namespace graphent;

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument(
            "Qubit count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxQubits) + ".");
    }
}

void check_qubit(const StateVector &s, int q) {
    if (q < 1 || q > s.num_qubits()) {
        throw std::out_of_range(
            "Qubit " + std::to_string(q) + " outside 1.." + std::to_string(s.num_qubits()) + ".");
    }
}

// Applies m to the qubit selected by `mask` in place.
void apply_matrix(std::vector<cplx> &amps, size_t mask, const Matrix2 &m) {
    for (size_t i0 = 0; i0 < amps.size(); i0++) {
        if (i0 & mask) {
            continue;
        }
        size_t i1 = i0 | mask;
        cplx a0 = amps[i0];
        cplx a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

}  // namespace

StateVector::StateVector(int n, std::vector<cplx> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    check_qubit_count(n);
    if (amps_.size() != (size_t{1} << n)) {
        throw std::invalid_argument(
            "Expected " + std::to_string(size_t{1} << n) + " amplitudes for " + std::to_string(n) + " qubits but got " +
            std::to_string(amps_.size()) + ".");
    }
    double nrm = norm();
    if (!(std::abs(nrm - 1) <= kNormTolerance)) {
        throw std::invalid_argument("State is not normalized (norm " + std::to_string(nrm) + ").");
    }
}

StateVector StateVector::basis(int n, size_t index) {
    check_qubit_count(n);
    std::vector<cplx> amps(size_t{1} << n, 0.0);
    if (index >= amps.size()) {
        throw std::out_of_range("Basis index out of range.");
    }
    amps[index] = 1;
    return StateVector(n, std::move(amps));
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

size_t StateVector::qubit_mask(int q) const {
    check_qubit(*this, q);
    return size_t{1} << (n_ - q);
}

LocalUnitary::LocalUnitary(int qubit, const Matrix2 &matrix) : qubit_(qubit), matrix_(matrix) {
    if (qubit < 1) {
        throw std::out_of_range("Qubit index must be at least 1.");
    }
    // U^dagger U, entry (r, c) = sum_k conj(U[k][r]) U[k][c].
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            cplx v = std::conj(matrix[r]) * matrix[c] + std::conj(matrix[2 + r]) * matrix[2 + c];
            if (std::abs(v - cplx(r == c ? 1.0 : 0.0)) > 1e-12) {
                throw std::invalid_argument("Matrix is not unitary.");
            }
        }
    }
}

Matrix2 gates::identity() {
    return {1, 0, 0, 1};
}

Matrix2 gates::pauli_x() {
    return {0, 1, 1, 0};
}

Matrix2 gates::pauli_y() {
    return {0, cplx(0, -1), cplx(0, 1), 0};
}

Matrix2 gates::pauli_z() {
    return {1, 0, 0, -1};
}

Matrix2 gates::sqrt_x_rotation() {
    double h = std::numbers::sqrt2 / 2;
    return {h, cplx(0, -h), cplx(0, -h), h};
}

Matrix2 gates::sqrt_z_rotation() {
    double h = std::numbers::sqrt2 / 2;
    return {cplx(h, h), 0, 0, cplx(h, -h)};
}

StateVector graphent::plus_state(int n) {
    check_qubit_count(n);
    size_t dim = size_t{1} << n;
    return StateVector(n, std::vector<cplx>(dim, 1.0 / std::sqrt((double)dim)));
}

StateVector graphent::apply_cz(const StateVector &s, int i, int j) {
    if (i == j) {
        throw std::invalid_argument("CZ needs two distinct qubits (got " + std::to_string(i) + " twice).");
    }
    size_t both = s.qubit_mask(i) | s.qubit_mask(j);
    std::vector<cplx> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (size_t k = 0; k < amps.size(); k++) {
        if ((k & both) == both) {
            amps[k] = -amps[k];
        }
    }
    return StateVector(s.num_qubits(), std::move(amps));
}

StateVector graphent::build_graph_state(const Graph &g) {
    int n = g.num_vertices();
    StateVector plus = plus_state(n);
    std::vector<cplx> amps(plus.amplitudes().begin(), plus.amplitudes().end());
    for (auto [a, b] : g.edges()) {
        size_t both = plus.qubit_mask(a) | plus.qubit_mask(b);
        for (size_t k = 0; k < amps.size(); k++) {
            if ((k & both) == both) {
                amps[k] = -amps[k];
            }
        }
    }
    return StateVector(n, std::move(amps));
}

StateVector graphent::apply_local_unitary(const StateVector &s, const LocalUnitary &u) {
    size_t mask = s.qubit_mask(u.qubit());
    std::vector<cplx> amps(s.amplitudes().begin(), s.amplitudes().end());
    apply_matrix(amps, mask, u.matrix());
    return StateVector(s.num_qubits(), std::move(amps));
}

StateVector graphent::lc_unitary_apply(const StateVector &s, const Graph &g, int a) {
    if (g.num_vertices() != s.num_qubits()) {
        throw std::invalid_argument("Graph and state sizes differ.");
    }
    check_qubit(s, a);
    std::vector<cplx> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (int b : neighbors(g, a)) {
        apply_matrix(amps, s.qubit_mask(b), gates::sqrt_z_rotation());
    }
    apply_matrix(amps, s.qubit_mask(a), gates::sqrt_x_rotation());
    return StateVector(s.num_qubits(), std::move(amps));
}

cplx graphent::inner_product(const StateVector &s1, const StateVector &s2) {
    if (s1.num_qubits() != s2.num_qubits()) {
        throw std::invalid_argument("Inner product of states with different qubit counts.");
    }
    cplx total = 0;
    for (size_t k = 0; k < s1.dim(); k++) {
        total += std::conj(s1[k]) * s2[k];
    }
    return total;
}

double graphent::overlap_magnitude(const StateVector &s1, const StateVector &s2) {
    return std::abs(inner_product(s1, s2));
}

cplx graphent::stabilizer_expectation(const StateVector &s, const Graph &g, int a) {
    if (g.num_vertices() != s.num_qubits()) {
        throw std::invalid_argument("Graph and state sizes differ.");
    }
    size_t flip = s.qubit_mask(a);
    size_t zmask = 0;
    for (int b : neighbors(g, a)) {
        zmask |= s.qubit_mask(b);
    }
    // K_a |k> = (-1)^{popcount(k & zmask)} |k ^ flip>, so <s|K_a|s> = sum conj(s[k ^ flip]) sign s[k].
    cplx total = 0;
    for (size_t k = 0; k < s.dim(); k++) {
        double sign = std::popcount(k & zmask) & 1 ? -1.0 : 1.0;
        total += std::conj(s[k ^ flip]) * sign * s[k];
    }
    return total;
}

StateVector graphent::random_state(int n, uint64_t seed) {
    check_qubit_count(n);
    auto rng = stream_rng(seed, 0);
    std::normal_distribution<double> normal;
    std::vector<cplx> amps(size_t{1} << n);
    double total = 0;
    for (auto &a : amps) {
        a = cplx(normal(rng), normal(rng));
        total += std::norm(a);
    }
    double scale = 1 / std::sqrt(total);
    for (auto &a : amps) {
        a *= scale;
    }
    return StateVector(n, std::move(amps));
}

Matrix2 graphent::random_unitary(uint64_t seed) {
    auto rng = stream_rng(seed, 1);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    cplx a(normal(rng), normal(rng));
    cplx b(normal(rng), normal(rng));
    double r = std::sqrt(std::norm(a) + std::norm(b));
    a /= r;
    b /= r;
    cplx phase = std::polar(1.0, angle(rng));
    return {phase * a, -phase * std::conj(b), phase * b, phase * std::conj(a)};
}

std::string graphent::state_to_json(const StateVector &s) {
    nlohmann::json out;
    out["num_qubits"] = s.num_qubits();
    out["bit_order"] = "qubit 1 is the most significant bit of the basis index";
    auto &arr = out["amplitudes"] = nlohmann::json::array();
    for (const auto &a : s.amplitudes()) {
        arr.push_back({a.real(), a.imag()});
    }
    return out.dump(2);
}
