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

#include "qstab/veclin.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "qstab/error.h"

namespace qstab {

FqMat::FqMat(Field field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
}

FqMat::FqMat(Field field, size_t rows, size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorKind::LengthMismatch, "entry count does not match rows*cols");
    }
    for (Elem e : data_) {
        if (e >= field_.q()) {
            throw Error(ErrorKind::InvalidInput, "matrix entry outside [0, q)");
        }
    }
}

FqMat FqMat::identity(Field field, size_t n) {
    FqMat m(std::move(field), n, n);
    for (size_t i = 0; i < n; i++) {
        m.at(i, i) = 1;
    }
    return m;
}

FqMat FqMat::from_rows(Field field, const std::vector<FqVec> &rows, size_t cols) {
    std::vector<Elem> entries;
    entries.reserve(rows.size() * cols);
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw Error(ErrorKind::LengthMismatch, "row length does not match column count");
        }
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return FqMat(std::move(field), rows.size(), cols, std::move(entries));
}

FqMat FqMat::transpose() const {
    FqMat t(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.at(c, r) = at(r, c);
        }
    }
    return t;
}

bool FqMat::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = r + 1; c < cols_; c++) {
            if (at(r, c) != at(c, r)) {
                return false;
            }
        }
    }
    return true;
}

bool FqMat::is_zero() const {
    return is_zero_vec(data_);
}

FqMat FqMat::operator+(const FqMat &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::LengthMismatch, "matrix shapes differ");
    }
    FqMat out(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); i++) {
        out.data_[i] = field_.add(data_[i], other.data_[i]);
    }
    return out;
}

bool FqMat::operator==(const FqMat &other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

namespace {

RrefResult rref_gf2(const FqMat &m) {
    size_t rows = m.rows();
    size_t cols = m.cols();
    size_t words = (cols + 63) / 64;
    std::vector<uint64_t> bits(rows * words, 0);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            if (m.at(r, c)) {
                bits[r * words + c / 64] |= uint64_t{1} << (c % 64);
            }
        }
    }
    auto row = [&](size_t r) { return bits.data() + r * words; };
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; c++) {
        size_t w = c / 64;
        uint64_t mask = uint64_t{1} << (c % 64);
        size_t pr = rank;
        while (pr < rows && !(row(pr)[w] & mask)) {
            pr++;
        }
        if (pr == rows) {
            continue;
        }
        if (pr != rank) {
            std::swap_ranges(row(pr), row(pr) + words, row(rank));
        }
        for (size_t r = 0; r < rows; r++) {
            if (r != rank && (row(r)[w] & mask)) {
                uint64_t *dst = row(r);
                const uint64_t *src = row(rank);
                for (size_t k = w; k < words; k++) {
                    dst[k] ^= src[k];
                }
            }
        }
        pivots.push_back(c);
        rank++;
    }
    FqMat reduced(m.field(), rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            reduced.at(r, c) = (row(r)[c / 64] >> (c % 64)) & 1;
        }
    }
    return {rank, std::move(reduced), std::move(pivots)};
}

}  // namespace

RrefResult rref(const FqMat &m) {
    const Field &f = m.field();
    if (f.q() == 2) {
        return rref_gf2(m);
    }
    FqMat a = m;
    size_t rows = a.rows();
    size_t cols = a.cols();
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; c++) {
        size_t pr = rank;
        while (pr < rows && a.at(pr, c) == 0) {
            pr++;
        }
        if (pr == rows) {
            continue;
        }
        if (pr != rank) {
            std::swap_ranges(a.row(pr).begin(), a.row(pr).end(), a.row(rank).begin());
        }
        Elem scale = f.inv(a.at(rank, c));
        for (auto &e : a.row(rank)) {
            e = f.mul(e, scale);
        }
        for (size_t r = 0; r < rows; r++) {
            Elem factor = a.at(r, c);
            if (r != rank && factor != 0) {
                axpy(f, f.neg(factor), a.row(rank), a.row(r));
            }
        }
        pivots.push_back(c);
        rank++;
    }
    return {rank, std::move(a), std::move(pivots)};
}

Subspace::Subspace(Field field, size_t ambient_dim) : field_(std::move(field)), ambient_dim_(ambient_dim) {
}

Subspace::Subspace(Field field, size_t ambient_dim, std::vector<FqVec> echelon_basis)
    : field_(std::move(field)), ambient_dim_(ambient_dim), basis_(std::move(echelon_basis)) {
    size_t last_pivot = 0;
    bool first = true;
    for (const auto &v : basis_) {
        if (v.size() != ambient_dim_) {
            throw Error(ErrorKind::LengthMismatch, "basis vector has wrong length");
        }
        auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
        if (it == v.end()) {
            throw Error(ErrorKind::InvalidInput, "basis contains a zero vector");
        }
        size_t pivot = static_cast<size_t>(it - v.begin());
        if (!first && pivot <= last_pivot) {
            throw Error(ErrorKind::InvalidInput, "basis is not in echelon form");
        }
        first = false;
        last_pivot = pivot;
    }
}

Subspace Subspace::span(Field field, size_t ambient_dim, const std::vector<FqVec> &vectors) {
    auto rr = rref(FqMat::from_rows(field, vectors, ambient_dim));
    std::vector<FqVec> basis;
    for (size_t r = 0; r < rr.rank; r++) {
        auto row = rr.reduced.row(r);
        basis.emplace_back(row.begin(), row.end());
    }
    return Subspace(std::move(field), ambient_dim, std::move(basis));
}

bool Subspace::contains(std::span<const Elem> v) const {
    if (v.size() != ambient_dim_) {
        throw Error(ErrorKind::LengthMismatch, "vector has wrong length");
    }
    FqVec rest(v.begin(), v.end());
    for (const auto &b : basis_) {
        size_t pivot = static_cast<size_t>(std::find_if(b.begin(), b.end(), [](Elem e) { return e != 0; }) - b.begin());
        if (rest[pivot] != 0) {
            Elem factor = field_.mul(rest[pivot], field_.inv(b[pivot]));
            axpy(field_, field_.neg(factor), b, rest);
        }
    }
    return is_zero_vec(rest);
}

Subspace kernel(const FqMat &m) {
    const Field &f = m.field();
    auto rr = rref(m);
    size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : rr.pivots) {
        is_pivot[p] = true;
    }
    std::vector<FqVec> basis;
    for (size_t free = 0; free < cols; free++) {
        if (is_pivot[free]) {
            continue;
        }
        FqVec v(cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < rr.rank; r++) {
            v[rr.pivots[r]] = f.neg(rr.reduced.at(r, free));
        }
        basis.push_back(std::move(v));
    }
    // Free-column vectors are echelon once ordered by their last nonzero entry;
    // reduce so the stored basis satisfies the leading-pivot invariant.
    return Subspace::span(f, cols, basis);
}

FqMat circulant(const Field &field, std::span<const Elem> first_row) {
    size_t n = first_row.size();
    FqMat m(field, n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            Elem e = first_row[(j + n - i) % n];
            if (e >= field.q()) {
                throw Error(ErrorKind::InvalidInput, "first row entry outside [0, q)");
            }
            m.at(i, j) = e;
        }
    }
    return m;
}

Subspace zero_sum_basis(const Field &field, size_t n) {
    if (n < 2) {
        throw Error(ErrorKind::DimensionTooSmall, "zero-sum subspace needs n >= 2");
    }
    std::vector<FqVec> basis;
    Elem minus_one = field.neg(1);
    for (size_t i = 0; i + 1 < n; i++) {
        FqVec v(n, 0);
        v[i] = 1;
        v[i + 1] = minus_one;
        basis.push_back(std::move(v));
    }
    return Subspace(field, n, std::move(basis));
}

FqMat split_upper(const FqMat &l) {
    if (!l.is_symmetric()) {
        throw Error(ErrorKind::NotSymmetric, "L must be square and symmetric");
    }
    const Field &f = l.field();
    size_t n = l.rows();
    FqMat d(f, n, n);
    Elem half = f.p() == 2 ? 0 : f.inv(f.from_int(2));
    for (size_t i = 0; i < n; i++) {
        if (f.p() == 2) {
            if (l.at(i, i) != 0) {
                throw Error(ErrorKind::OddDiagonalInCharTwo,
                            "diagonal entry " + std::to_string(i) + " is not of the form 2x in characteristic 2");
            }
        } else {
            d.at(i, i) = f.mul(half, l.at(i, i));
        }
        for (size_t j = i + 1; j < n; j++) {
            d.at(i, j) = l.at(i, j);
        }
    }
    return d;
}

Elem dot(const Field &field, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch, "dot product of vectors with different lengths");
    }
    Elem acc = 0;
    for (size_t i = 0; i < a.size(); i++) {
        acc = field.add(acc, field.mul(a[i], b[i]));
    }
    return acc;
}

FqVec mat_vec(const FqMat &m, std::span<const Elem> v) {
    if (v.size() != m.cols()) {
        throw Error(ErrorKind::LengthMismatch, "matrix-vector shape mismatch");
    }
    FqVec out(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        out[r] = dot(m.field(), m.row(r), v);
    }
    return out;
}

Elem bilinear(const FqMat &m, std::span<const Elem> v, std::span<const Elem> w) {
    return dot(m.field(), v, mat_vec(m, w));
}

void axpy(const Field &field, Elem scale, std::span<const Elem> x, std::span<Elem> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::LengthMismatch, "axpy on vectors with different lengths");
    }
    if (scale == 0) {
        return;
    }
    for (size_t i = 0; i < x.size(); i++) {
        y[i] = field.add(y[i], field.mul(scale, x[i]));
    }
}

bool is_zero_vec(std::span<const Elem> v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

FqMat read_fqm(std::istream &in) {
    auto next = [&](const char *what) {
        long long v;
        if (!(in >> v)) {
            throw Error(ErrorKind::InvalidInput, std::string("fqm: expected ") + what);
        }
        return v;
    };
    long long p = next("p");
    long long r = next("r");
    long long rows = next("rows");
    long long cols = next("cols");
    if (rows < 0 || cols < 0 || r < 1) {
        throw Error(ErrorKind::InvalidInput, "fqm: bad header");
    }
    std::optional<std::vector<int>> modulus;
    if (r > 1) {
        std::vector<int> m;
        for (long long i = 0; i <= r; i++) {
            m.push_back(static_cast<int>(next("modulus coefficient")));
        }
        modulus = std::move(m);
    }
    Field f = Field::make(static_cast<int>(p), static_cast<int>(r), modulus);
    std::vector<Elem> entries;
    entries.reserve(static_cast<size_t>(rows * cols));
    for (long long i = 0; i < rows * cols; i++) {
        long long v = next("matrix entry");
        if (v < 0 || v >= f.q()) {
            throw Error(ErrorKind::InvalidInput, "fqm: entry outside [0, q)");
        }
        entries.push_back(static_cast<Elem>(v));
    }
    std::string trailing;
    if (in >> trailing) {
        throw Error(ErrorKind::InvalidInput, "fqm: unexpected trailing data '" + trailing + "'");
    }
    return FqMat(f, static_cast<size_t>(rows), static_cast<size_t>(cols), std::move(entries));
}

void write_fqm(std::ostream &out, const FqMat &m) {
    const Field &f = m.field();
    out << f.p() << ' ' << f.r() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    if (f.r() > 1) {
        for (size_t i = 0; i < f.modulus().size(); i++) {
            out << (i ? " " : "") << f.modulus()[i];
        }
        out << '\n';
    }
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out << (c ? " " : "") << static_cast<int>(m.at(r, c));
        }
        out << '\n';
    }
}

}  // namespace qstab
