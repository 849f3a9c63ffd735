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

#ifndef GRAPHENT_REDUCTIONS_H
#define GRAPHENT_REDUCTIONS_H

#include <cstdint>
#include <vector>

#include "graphent/state_vector.h"

namespace graphent {

/// A nonempty set of qubits out of n. Bit q-1 of `members` marks qubit q.
class QubitSubset {
   public:
    QubitSubset(int n, uint32_t members);
    /// From a list of 1-indexed qubits.
    QubitSubset(int n, const std::vector<int> &qubits);

    int num_total() const {
        return n_;
    }
    uint32_t members() const {
        return members_;
    }
    int size() const;
    bool contains(int q) const;
    bool is_proper() const {
        return size() < n_;
    }
    std::vector<int> qubits() const;

    /// Throws std::invalid_argument if this is the full set.
    QubitSubset complement() const;

    bool operator==(const QubitSubset &other) const = default;

   private:
    int n_;
    uint32_t members_;
};

/// Every nonempty proper subset of n qubits, ordered by member mask.
std::vector<QubitSubset> proper_subsets(int n);

/// Reduced state on k qubits, stored as a dense 2^k x 2^k row-major matrix.
/// Row/column indices follow the global bit order restricted to the kept
/// qubits (lowest-numbered kept qubit is the most significant bit).
class DensityMatrix {
   public:
    DensityMatrix(int k, std::vector<cplx> entries);

    int num_qubits() const {
        return k_;
    }
    size_t dim() const {
        return size_t{1} << k_;
    }
    cplx at(size_t r, size_t c) const {
        return entries_[r * dim() + c];
    }
    const std::vector<cplx> &entries() const {
        return entries_;
    }
    cplx trace() const;
    /// max |rho - rho^dagger| over entries.
    double hermiticity_error() const;

   private:
    int k_;
    std::vector<cplx> entries_;
};

/// Tr_{complement of keep}(|s><s|).
DensityMatrix reduce(const StateVector &s, const QubitSubset &keep);

/// Tr(rho^2), computed as the squared Frobenius norm. Throws
/// std::invalid_argument if rho is not Hermitian or not unit-trace within
/// 1e-12.
double purity(const DensityMatrix &rho);

/// purity(reduce(s, keep)) without materializing the larger reduced matrix:
/// uses the Gram matrix on whichever side of the cut is smaller.
double subset_purity(const StateVector &s, const QubitSubset &keep);

/// Sum of subset_purity over all 2^n - 2 nonempty proper subsets. Only
/// subsets with at most n/2 members are evaluated; each stands in for its
/// complement as well. Enumeration order is fixed.
double purity_sum(const StateVector &s);

/// Same sum, evaluating every subset directly.
double purity_sum_exhaustive(const StateVector &s);

}  // namespace graphent

#endif
