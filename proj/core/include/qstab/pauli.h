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

#ifndef QSTAB_PAULI_H
#define QSTAB_PAULI_H

#include <Eigen/Dense>
#include <cstddef>
#include <string>

#include "qstab/gf.h"
#include "qstab/veclin.h"

namespace qstab {

/// Largest state-vector length materialized by default.
inline constexpr size_t kDefaultDenseLimit = size_t{1} << 14;
/// Largest dimension for which a full q^n x q^n operator is materialized.
inline constexpr size_t kDenseMatrixLimit = size_t{1} << 12;

/// Weyl label (a, b) of the operator U_a V_b.
struct SympPair {
    FqVec a;
    FqVec b;

    SympPair() = default;
    SympPair(FqVec a_, FqVec b_);
    static SympPair zero(size_t n);
    /// Splits a length-2n vector (a | b).
    static SympPair from_concat(std::span<const Elem> ab);

    size_t n() const {
        return a.size();
    }
    FqVec concat() const;

    bool operator==(const SympPair &other) const = default;
};

/// omega^phase U_a V_b.
struct ErrorElement {
    PhaseExp phase;
    SympPair pair;

    bool operator==(const ErrorElement &other) const = default;
};

size_t weight(const SympPair &pr);

/// x.a . y.b - x.b . y.a; zero exactly when the two Weyl operators commute.
Elem symp_form(const Field &field, const SympPair &x, const SympPair &y);

/// Exact product (omega^i U_a V_b)(omega^j U_c V_d) = omega^{i+j+Tr(b.c)} U_{a+c} V_{b+d}.
ErrorElement compose(const Field &field, const ErrorElement &x, const ErrorElement &y);
ErrorElement inverse(const Field &field, const ErrorElement &x);
ErrorElement identity_element(size_t n);
/// x^m for m >= 0.
ErrorElement power(const Field &field, const ErrorElement &x, unsigned m);

/// Number of kets q^n; throws DimensionLimitExceeded when above `limit`.
size_t hilbert_dim(const Field &field, size_t n, size_t limit);

/// Big-endian ket index of a word: sum enc(x_i) q^{n-1-i}.
size_t ket_index(const Field &field, std::span<const Elem> word);
FqVec ket_word(const Field &field, size_t index, size_t n);

/// Dense unitary ket x -> omega^i omega~(b.x) ket(x + a).
Eigen::MatrixXcd weyl_matrix(const Field &field, const ErrorElement &e, size_t limit = kDenseMatrixLimit);

std::string format_vec(std::span<const Elem> v);

}  // namespace qstab

#endif
