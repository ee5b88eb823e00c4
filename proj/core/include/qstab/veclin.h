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

#ifndef QSTAB_VECLIN_H
#define QSTAB_VECLIN_H

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "qstab/gf.h"

namespace qstab {

using FqVec = std::vector<Elem>;

/// Dense row-major matrix over F_q.
class FqMat {
   public:
    FqMat(Field field, size_t rows, size_t cols);
    FqMat(Field field, size_t rows, size_t cols, std::vector<Elem> entries);

    static FqMat identity(Field field, size_t n);
    static FqMat from_rows(Field field, const std::vector<FqVec> &rows, size_t cols);

    const Field &field() const {
        return field_;
    }
    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    Elem at(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    Elem &at(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    std::span<const Elem> row(size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<Elem> row(size_t r) {
        return {data_.data() + r * cols_, cols_};
    }
    const std::vector<Elem> &entries() const {
        return data_;
    }

    FqMat transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;
    FqMat operator+(const FqMat &other) const;

    bool operator==(const FqMat &other) const;

   private:
    Field field_;
    size_t rows_;
    size_t cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    size_t rank;
    FqMat reduced;
    std::vector<size_t> pivots;
};

/// Reduced row echelon form: leftmost pivot column, first nonzero row as pivot
/// row, pivots normalized to 1. Over F_2 the elimination runs on packed words.
RrefResult rref(const FqMat &m);

/// Linear subspace of F_q^n held as an echelon basis (pivots strictly increasing).
class Subspace {
   public:
    Subspace(Field field, size_t ambient_dim);
    /// Takes the basis as given; it must already be in echelon form.
    Subspace(Field field, size_t ambient_dim, std::vector<FqVec> echelon_basis);
    /// Row-reduces arbitrary spanning vectors into a reduced echelon basis.
    static Subspace span(Field field, size_t ambient_dim, const std::vector<FqVec> &vectors);

    const Field &field() const {
        return field_;
    }
    size_t ambient_dim() const {
        return ambient_dim_;
    }
    size_t dim() const {
        return basis_.size();
    }
    const std::vector<FqVec> &basis() const {
        return basis_;
    }

    bool contains(std::span<const Elem> v) const;

   private:
    Field field_;
    size_t ambient_dim_;
    std::vector<FqVec> basis_;
};

/// Basis of {x : m x = 0}, one vector per free column of rref(m).
Subspace kernel(const FqMat &m);

/// Row i is the first row cyclically shifted right by i.
FqMat circulant(const Field &field, std::span<const Elem> first_row);

/// The zero-sum subspace {a : sum a_i = 0} with basis e_i - e_{i+1}.
Subspace zero_sum_basis(const Field &field, size_t n);

/// The D with D + D^T = L: strict upper triangle of L, plus diag(L)/2 for odd p.
FqMat split_upper(const FqMat &l);

Elem dot(const Field &field, std::span<const Elem> a, std::span<const Elem> b);
FqVec mat_vec(const FqMat &m, std::span<const Elem> v);
/// v^T m w.
Elem bilinear(const FqMat &m, std::span<const Elem> v, std::span<const Elem> w);
void axpy(const Field &field, Elem scale, std::span<const Elem> x, std::span<Elem> y);
bool is_zero_vec(std::span<const Elem> v);

/// ".fqm" text format: `p r rows cols`, modulus line when r > 1, then the rows.
FqMat read_fqm(std::istream &in);
void write_fqm(std::ostream &out, const FqMat &m);

}  // namespace qstab

#endif
