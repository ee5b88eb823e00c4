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

#include "qstab/pauli.h"

#include "qstab/error.h"

namespace qstab {

SympPair::SympPair(FqVec a_, FqVec b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch, "symplectic pair halves differ in length");
    }
}

SympPair SympPair::zero(size_t n) {
    return SympPair(FqVec(n, 0), FqVec(n, 0));
}

SympPair SympPair::from_concat(std::span<const Elem> ab) {
    if (ab.size() % 2 != 0) {
        throw Error(ErrorKind::LengthMismatch, "concatenated pair has odd length");
    }
    size_t n = ab.size() / 2;
    return SympPair(FqVec(ab.begin(), ab.begin() + n), FqVec(ab.begin() + n, ab.end()));
}

FqVec SympPair::concat() const {
    FqVec out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

size_t weight(const SympPair &pr) {
    size_t w = 0;
    for (size_t i = 0; i < pr.a.size(); i++) {
        w += (pr.a[i] | pr.b[i]) != 0;
    }
    return w;
}

Elem symp_form(const Field &field, const SympPair &x, const SympPair &y) {
    if (x.n() != y.n()) {
        throw Error(ErrorKind::LengthMismatch, "symplectic form of pairs with different lengths");
    }
    return field.sub(dot(field, x.a, y.b), dot(field, x.b, y.a));
}

ErrorElement compose(const Field &field, const ErrorElement &x, const ErrorElement &y) {
    if (x.pair.n() != y.pair.n()) {
        throw Error(ErrorKind::LengthMismatch, "composing elements of different lengths");
    }
    size_t n = x.pair.n();
    ErrorElement out{phase_add(field, x.phase, y.phase), SympPair::zero(n)};
    // V_b U_c = omega~(b.c) U_c V_b.
    out.phase = phase_add(field, out.phase, field.char_exp(dot(field, x.pair.b, y.pair.a)));
    for (size_t i = 0; i < n; i++) {
        out.pair.a[i] = field.add(x.pair.a[i], y.pair.a[i]);
        out.pair.b[i] = field.add(x.pair.b[i], y.pair.b[i]);
    }
    return out;
}

ErrorElement inverse(const Field &field, const ErrorElement &x) {
    size_t n = x.pair.n();
    ErrorElement out{PhaseExp{}, SympPair::zero(n)};
    for (size_t i = 0; i < n; i++) {
        out.pair.a[i] = field.neg(x.pair.a[i]);
        out.pair.b[i] = field.neg(x.pair.b[i]);
    }
    // (w^i U_a V_b)(w^j U_-a V_-b) = w^{i+j+Tr(-b.a)} I.
    PhaseExp cross = field.char_exp(dot(field, x.pair.b, x.pair.a));
    out.phase = phase_add(field, phase_neg(field, x.phase), cross);
    return out;
}

ErrorElement identity_element(size_t n) {
    return ErrorElement{PhaseExp{}, SympPair::zero(n)};
}

ErrorElement power(const Field &field, const ErrorElement &x, unsigned m) {
    ErrorElement acc = identity_element(x.pair.n());
    for (unsigned i = 0; i < m; i++) {
        acc = compose(field, acc, x);
    }
    return acc;
}

size_t hilbert_dim(const Field &field, size_t n, size_t limit) {
    size_t dim = 1;
    for (size_t i = 0; i < n; i++) {
        dim *= static_cast<size_t>(field.q());
        if (dim > limit) {
            throw Error(ErrorKind::DimensionLimitExceeded,
                        "q^n exceeds the dense limit of " + std::to_string(limit));
        }
    }
    return dim;
}

size_t ket_index(const Field &field, std::span<const Elem> word) {
    size_t idx = 0;
    for (Elem e : word) {
        idx = idx * static_cast<size_t>(field.q()) + e;
    }
    return idx;
}

FqVec ket_word(const Field &field, size_t index, size_t n) {
    FqVec w(n);
    size_t q = static_cast<size_t>(field.q());
    for (size_t i = n; i-- > 0;) {
        w[i] = static_cast<Elem>(index % q);
        index /= q;
    }
    return w;
}

Eigen::MatrixXcd weyl_matrix(const Field &field, const ErrorElement &e, size_t limit) {
    size_t n = e.pair.n();
    size_t dim = hilbert_dim(field, n, limit);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    FqVec shifted(n);
    for (size_t col = 0; col < dim; col++) {
        FqVec x = ket_word(field, col, n);
        int exp = e.phase.e + field.trace(dot(field, e.pair.b, x));
        for (size_t i = 0; i < n; i++) {
            shifted[i] = field.add(x[i], e.pair.a[i]);
        }
        size_t row = ket_index(field, shifted);
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = field.root_of_unity(exp);
    }
    return m;
}

std::string format_vec(std::span<const Elem> v) {
    std::string out;
    for (size_t i = 0; i < v.size(); i++) {
        if (i) {
            out += ',';
        }
        out += std::to_string(static_cast<int>(v[i]));
    }
    return out;
}

}  // namespace qstab
