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

#ifndef GRAPHENT_STATE_VECTOR_H
#define GRAPHENT_STATE_VECTOR_H

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "graphent/graph.h"

namespace graphent {

using cplx = std::complex<double>;

constexpr int kMaxQubits = 16;

/// Tolerance used when validating externally supplied amplitudes.
constexpr double kNormTolerance = 1e-10;

/// Dense n-qubit pure state.
///
/// Bit order: qubit 1 is the most significant bit of the basis index, so
/// |q1 q2 ... qn> sits at index q1*2^(n-1) + ... + qn. Every module shares
/// this convention.
class StateVector {
   public:
    /// Validates length 2^n and unit norm (within kNormTolerance).
    StateVector(int n, std::vector<cplx> amplitudes);

    /// The computational basis state with the given index.
    static StateVector basis(int n, size_t index);

    int num_qubits() const {
        return n_;
    }
    size_t dim() const {
        return amps_.size();
    }
    std::span<const cplx> amplitudes() const {
        return amps_;
    }
    cplx operator[](size_t index) const {
        return amps_[index];
    }
    double norm() const;

    /// Index mask of qubit q (1-indexed) under the bit-order convention.
    size_t qubit_mask(int q) const;

   private:
    int n_;
    std::vector<cplx> amps_;
};

/// 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
using Matrix2 = std::array<cplx, 4>;

/// A single-qubit unitary acting on one (1-indexed) qubit.
class LocalUnitary {
   public:
    /// Throws std::invalid_argument unless U^dagger U = I within 1e-12.
    LocalUnitary(int qubit, const Matrix2 &matrix);

    int qubit() const {
        return qubit_;
    }
    const Matrix2 &matrix() const {
        return matrix_;
    }

   private:
    int qubit_;
    Matrix2 matrix_;
};

namespace gates {
Matrix2 identity();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
/// exp(-i pi/4 sigma_x)
Matrix2 sqrt_x_rotation();
/// exp(+i pi/4 sigma_z)
Matrix2 sqrt_z_rotation();
}  // namespace gates

/// |+>^{tensor n}: amplitude 2^(-n/2) on every basis state.
StateVector plus_state(int n);

/// Negates every amplitude with both qubit i and qubit j set. Symmetric in i, j.
StateVector apply_cz(const StateVector &s, int i, int j);

/// plus_state(n) followed by a CZ on every edge.
StateVector build_graph_state(const Graph &g);

StateVector apply_local_unitary(const StateVector &s, const LocalUnitary &u);

/// Applies exp(-i pi/4 X_a) prod_{b in N_a} exp(i pi/4 Z_b), which maps |G>
/// to |local_complement(G, a)> up to a global phase.
StateVector lc_unitary_apply(const StateVector &s, const Graph &g, int a);

/// <s1|s2>, conjugating the first argument.
cplx inner_product(const StateVector &s1, const StateVector &s2);

/// |<s1|s2>|.
double overlap_magnitude(const StateVector &s1, const StateVector &s2);

/// <s| X_a prod_{b in N_a} Z_b |s>. Equal to 1 exactly when s is the graph
/// state of g (for every vertex a).
cplx stabilizer_expectation(const StateVector &s, const Graph &g, int a);

/// Haar-random state from a 64-bit seed.
StateVector random_state(int n, uint64_t seed);

/// Haar-random single-qubit unitary from a 64-bit seed.
Matrix2 random_unitary(uint64_t seed);

/// JSON dump: {"num_qubits", "bit_order", "amplitudes": [[re, im], ...]}.
std::string state_to_json(const StateVector &s);

}  // namespace graphent

#endif
