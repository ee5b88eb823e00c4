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

#ifndef QSTAB_SEARCH_H
#define QSTAB_SEARCH_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qstab/stabcode.h"
#include "qstab/veclin.h"

namespace qstab {

/// Exact fraction num/den with 0 < num/den < 1.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    static Rational parse(std::string_view text);
    std::string str() const;
    /// floor(num * n / den).
    size_t floor_times(size_t n) const;

    bool operator==(const Rational &other) const = default;
};

struct CirculantHit {
    FqVec first_row;
    CodeReport report;
};

struct ScanOptions {
    unsigned workers = 1;
    /// Bound on candidate first rows and, per row, on dual elements.
    uint64_t budget = kDefaultEnumerationBudget;
};

/// Scans binary first rows with zero diagonal entry, builds each circulant code
/// over the zero-sum subspace and keeps those with d >= d_target, sorted by
/// (d descending, first row lexicographic).
///
/// With require_symmetric the candidates are the palindromic rows only
/// (c_i = c_{n-i}); otherwise every row with c_0 = 0 is visited and the
/// non-symmetric circulants are skipped.
std::vector<CirculantHit> circulant_scan(
    const Field &field, size_t n, size_t d_target, bool require_symmetric, const ScanOptions &options = {});

enum class ViolationKind { ColLow, ColHigh, RowLow, RowHigh };

const char *violation_kind_name(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<size_t> subset;
    size_t weight;
};

struct GoodnessReport {
    Rational alpha;
    bool good = false;
    std::optional<Violation> violation;
};

struct GoodnessOptions {
    unsigned workers = 1;
    uint64_t budget = uint64_t{1} << 24;
};

/// Checks every nonempty set of at most floor(alpha n) columns and rows: the sum
/// must have weight in [alpha n, (1 - alpha) n]. Subsets are visited by size,
/// then lexicographically; per subset the order is colLow, colHigh, rowLow,
/// rowHigh. The first violation in that order is reported.
GoodnessReport is_alpha_good(const FqMat &r, Rational alpha, const GoodnessOptions &options = {});

/// Fair-coin n x n binary matrix for trial `trial` of the stream named by `seed`.
FqMat random_binary_matrix(size_t n, uint64_t seed, uint64_t trial);

struct SampleResult {
    bool found = false;
    std::optional<FqMat> r;
    /// Trials drawn: the 1-based index of the accepted matrix, or max_tries.
    uint64_t tries = 0;
    uint64_t seed = 0;
};

/// Draws trials 0, 1, ... from the seeded stream and returns the first
/// alpha-good matrix. Workers evaluate trials concurrently; the result is the
/// lowest accepted trial index regardless of worker count.
SampleResult sample_good(size_t n, Rational alpha, uint64_t seed, uint64_t max_tries, unsigned workers = 1);

/// The 2n x 2n block matrix [[0, R], [R^T, 0]].
FqMat block_matrix(const FqMat &r);

struct BlockCode {
    StabilizerCode code;
    /// floor(alpha n): the pure distance guaranteed when R is alpha-good.
    size_t designed_distance;
};

/// Code on 2n qudits from L = block_matrix(R), D = strict upper triangle of L
/// and C = zero-sum subspace of F_2^{2n}.
BlockCode block_code_from_R(const FqMat &r, Rational alpha);

/// exp(-mu delta^2 / 2) with mu = n p.
double chernoff_bound(double n, double p_success, double delta);

}  // namespace qstab

#endif
