// Copyright 2026 The qstab Authors
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

#ifndef QSTAB_VERIFY_H
#define QSTAB_VERIFY_H

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qstab/pauli.h"
#include "qstab/stabcode.h"

namespace qstab {

/// Amplitudes over the q^n kets, indexed big-endian as in ket_index().
struct StateVector {
    Field field;
    size_t n = 0;
    std::vector<std::complex<double>> amplitudes;

    double norm() const;
    /// <this|other>
    std::complex<double> inner(const StateVector &other) const;
};

/// Sparse application of omega^i U_a V_b to a state.
StateVector apply_error(const ErrorElement &e, const StateVector &psi);

/// Canonical coset representatives of C in F_q^n: c e_1 for the zero-sum
/// subspace, otherwise the lexicographically least vector of each coset.
std::vector<FqVec> coset_representatives(const StabilizerCode &code);

/// psi_{C+x} = |C|^{-1/2} sum_{a in C} omega~(a^T D a) omega~(a^T L x) |a + x>.
StateVector codeword(const StabilizerCode &code, std::span<const Elem> rep, size_t dense_limit = kDefaultDenseLimit);

struct Codeword {
    FqVec rep;
    StateVector state;
};

/// One orthonormal basis vector of the code space per coset representative.
std::vector<Codeword> all_codewords(const StabilizerCode &code, size_t dense_limit = kDefaultDenseLimit);

/// P = |S|^{-1} sum over S; throws InternalCheckFailed unless P^2 = P, P = P^dagger
/// and Tr(P) = q^n / |S| within 1e-9.
Eigen::MatrixXcd projection(const StabilizerCode &code, size_t limit = kDenseMatrixLimit);

inline constexpr double kVerifyTolerance = 1e-9;

struct KLFailure {
    SympPair pair;
    size_t i;
    size_t j;
    std::complex<double> observed;
};

struct KLReport {
    size_t t = 0;
    bool passed = false;
    /// Error labels examined, in canonical order, up to the first failure.
    uint64_t checked = 0;
    std::optional<KLFailure> failure;
};

struct KLOptions {
    size_t dense_limit = kDefaultDenseLimit;
    unsigned workers = 1;
};

/// Every label (a, b) with wt(a, b) <= 2t, in canonical order: by weight, then
/// support lexicographically, then coordinate values (a_i, b_i) lexicographically.
std::vector<SympPair> labels_up_to_weight(const Field &field, size_t n, size_t max_weight);

/// For every label of weight <= 2t, checks that <psi_i|U_a V_b|psi_j> over the
/// codeword basis is a scalar multiple of the identity.
KLReport check_kl(const StabilizerCode &code, size_t t, const KLOptions &options = {});

/// Header `p r n k rep`, then one `index re im` line per nonzero amplitude.
void write_codeword_dump(std::ostream &out, const StabilizerCode &code, const Codeword &cw);

}  // namespace qstab

#endif
