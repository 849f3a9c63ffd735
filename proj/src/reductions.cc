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

#include "graphent/reductions.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

using namespace graphent;

namespace {

/// Reshapes s into a (2^k) x (2^(n-k)) matrix: row index from the kept
/// qubits, column index from the rest, each in global bit order.
std::vector<cplx> split_matrix(const StateVector &s, const QubitSubset &keep, size_t &rows, size_t &cols) {
    int n = s.num_qubits();
    int k = keep.size();
    rows = size_t{1} << k;
    cols = size_t{1} << (n - k);
    std::vector<cplx> m(rows * cols);
    for (size_t idx = 0; idx < s.dim(); idx++) {
        size_t r = 0;
        size_t c = 0;
        for (int q = 1; q <= n; q++) {
            size_t bit = (idx >> (n - q)) & 1;
            if (keep.contains(q)) {
                r = (r << 1) | bit;
            } else {
                c = (c << 1) | bit;
            }
        }
        m[r * cols + c] = s[idx];
    }
    return m;
}

}  // namespace

QubitSubset::QubitSubset(int n, uint32_t members) : n_(n), members_(members) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("Subset universe size out of range.");
    }
    if (members == 0) {
        throw std::invalid_argument("Qubit subset must be nonempty.");
    }
    if (members >> n) {
        throw std::out_of_range("Qubit subset references a qubit beyond " + std::to_string(n) + ".");
    }
}

QubitSubset::QubitSubset(int n, const std::vector<int> &qubits) : QubitSubset(n, [&] {
        uint32_t m = 0;
        for (int q : qubits) {
            if (q < 1 || q > n) {
                throw std::out_of_range("Qubit " + std::to_string(q) + " outside 1.." + std::to_string(n) + ".");
            }
            m |= 1u << (q - 1);
        }
        return m;
    }()) {
}

int QubitSubset::size() const {
    return std::popcount(members_);
}

bool QubitSubset::contains(int q) const {
    return q >= 1 && q <= n_ && ((members_ >> (q - 1)) & 1);
}

std::vector<int> QubitSubset::qubits() const {
    std::vector<int> out;
    for (int q = 1; q <= n_; q++) {
        if (contains(q)) {
            out.push_back(q);
        }
    }
    return out;
}

QubitSubset QubitSubset::complement() const {
    uint32_t all = (uint32_t{1} << n_) - 1;
    return QubitSubset(n_, all & ~members_);
}

std::vector<QubitSubset> graphent::proper_subsets(int n) {
    std::vector<QubitSubset> out;
    uint32_t all = (uint32_t{1} << n) - 1;
    for (uint32_t m = 1; m < all; m++) {
        out.emplace_back(n, m);
    }
    return out;
}

DensityMatrix::DensityMatrix(int k, std::vector<cplx> entries) : k_(k), entries_(std::move(entries)) {
    if (k < 0 || k > kMaxQubits) {
        throw std::invalid_argument("Density matrix qubit count out of range.");
    }
    if (entries_.size() != dim() * dim()) {
        throw std::invalid_argument("Density matrix entry count does not match 4^k.");
    }
}

cplx DensityMatrix::trace() const {
    cplx t = 0;
    for (size_t r = 0; r < dim(); r++) {
        t += at(r, r);
    }
    return t;
}

double DensityMatrix::hermiticity_error() const {
    double worst = 0;
    for (size_t r = 0; r < dim(); r++) {
        for (size_t c = r; c < dim(); c++) {
            worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
        }
    }
    return worst;
}

DensityMatrix graphent::reduce(const StateVector &s, const QubitSubset &keep) {
    if (keep.num_total() != s.num_qubits()) {
        throw std::invalid_argument("Subset universe does not match the state's qubit count.");
    }
    size_t rows, cols;
    auto m = split_matrix(s, keep, rows, cols);
    std::vector<cplx> rho(rows * rows);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = r; c < rows; c++) {
            cplx v = 0;
            for (size_t t = 0; t < cols; t++) {
                v += m[r * cols + t] * std::conj(m[c * cols + t]);
            }
            rho[r * rows + c] = v;
            rho[c * rows + r] = std::conj(v);
        }
    }
    return DensityMatrix(keep.size(), std::move(rho));
}

double graphent::purity(const DensityMatrix &rho) {
    if (rho.hermiticity_error() > 1e-12) {
        throw std::invalid_argument("Density matrix is not Hermitian.");
    }
    if (std::abs(rho.trace() - 1.0) > 1e-12) {
        throw std::invalid_argument("Density matrix does not have unit trace.");
    }
    double total = 0;
    for (const auto &e : rho.entries()) {
        total += std::norm(e);
    }
    return total;
}

double graphent::subset_purity(const StateVector &s, const QubitSubset &keep) {
    if (keep.num_total() != s.num_qubits()) {
        throw std::invalid_argument("Subset universe does not match the state's qubit count.");
    }
    size_t rows, cols;
    auto m = split_matrix(s, keep, rows, cols);
    // Tr((M M^dagger)^2) = Tr((M^dagger M)^2); build whichever Gram matrix is smaller.
    double total = 0;
    if (rows <= cols) {
        for (size_t r = 0; r < rows; r++) {
            for (size_t c = 0; c < rows; c++) {
                cplx v = 0;
                for (size_t t = 0; t < cols; t++) {
                    v += m[r * cols + t] * std::conj(m[c * cols + t]);
                }
                total += std::norm(v);
            }
        }
    } else {
        for (size_t r = 0; r < cols; r++) {
            for (size_t c = 0; c < cols; c++) {
                cplx v = 0;
                for (size_t t = 0; t < rows; t++) {
                    v += std::conj(m[t * cols + r]) * m[t * cols + c];
                }
                total += std::norm(v);
            }
        }
    }
    return total;
}

double graphent::purity_sum(const StateVector &s) {
    int n = s.num_qubits();
    uint32_t all = (uint32_t{1} << n) - 1;
    double total = 0;
    for (uint32_t m = 1; m < all; m++) {
        int k = std::popcount(m);
        if (2 * k < n) {
            total += 2 * subset_purity(s, QubitSubset(n, m));
        } else if (2 * k == n && (m & 1)) {
            // Middle layer: keep the member of each complementary pair that contains qubit 1.
            total += 2 * subset_purity(s, QubitSubset(n, m));
        }
    }
    return total;
}

double graphent::purity_sum_exhaustive(const StateVector &s) {
    double total = 0;
    for (const auto &a : proper_subsets(s.num_qubits())) {
        total += purity(reduce(s, a));
    }
    return total;
}
