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

#include "qstab/search.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "qstab/error.h"

namespace qstab {

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw Error(ErrorKind::InvalidInput, "expected a fraction NUM/DEN, got '" + std::string(text) + "'");
    }
    Rational out;
    auto parse_part = [&](std::string_view part, int64_t &dst) {
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), dst);
        if (ec != std::errc() || ptr != part.data() + part.size()) {
            throw Error(ErrorKind::InvalidInput, "malformed fraction '" + std::string(text) + "'");
        }
    };
    parse_part(text.substr(0, slash), out.num);
    parse_part(text.substr(slash + 1), out.den);
    if (out.den <= 0 || out.num <= 0 || out.num >= out.den) {
        throw Error(ErrorKind::InvalidInput, "fraction must lie strictly between 0 and 1");
    }
    return out;
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

size_t Rational::floor_times(size_t n) const {
    return static_cast<size_t>(num * static_cast<int64_t>(n) / den);
}

namespace {

FqVec row_from_mask(size_t n, uint64_t mask, bool symmetric) {
    FqVec row(n, 0);
    if (symmetric) {
        for (size_t i = 1; i <= n / 2; i++) {
            Elem bit = (mask >> (i - 1)) & 1;
            row[i] = bit;
            row[n - i] = bit;
        }
    } else {
        for (size_t i = 1; i < n; i++) {
            row[i] = (mask >> (i - 1)) & 1;
        }
    }
    return row;
}

template <typename Fn>
void parallel_for(unsigned workers, uint64_t count, Fn &&body) {
    workers = static_cast<unsigned>(std::min<uint64_t>(std::max(1u, workers), std::max<uint64_t>(count, 1)));
    std::atomic<uint64_t> next{0};
    auto loop = [&]() {
        for (uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            body(i);
        }
    };
    if (workers == 1) {
        loop();
        return;
    }
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; w++) {
        threads.emplace_back(loop);
    }
    for (auto &t : threads) {
        t.join();
    }
}

}  // namespace

std::vector<CirculantHit> circulant_scan(
    const Field &field, size_t n, size_t d_target, bool require_symmetric, const ScanOptions &options) {
    if (n < 2) {
        throw Error(ErrorKind::DimensionTooSmall, "circulant scan needs n >= 2");
    }
    size_t free_bits = require_symmetric ? n / 2 : n - 1;
    if (free_bits >= 63 || (uint64_t{1} << free_bits) > options.budget) {
        throw Error(ErrorKind::BudgetExceeded, "2^" + std::to_string(free_bits) + " candidate rows exceed the budget");
    }
    uint64_t count = uint64_t{1} << free_bits;
    Subspace c = zero_sum_basis(field, n);
    DistanceOptions dopt;
    dopt.budget = options.budget;
    if (d_target >= 1) {
        dopt.early_exit = d_target - 1;
    }

    std::vector<std::optional<CirculantHit>> slots(count);
    std::mutex error_mu;
    std::optional<Error> failure;
    parallel_for(options.workers, count, [&](uint64_t mask) {
        try {
            FqVec row = row_from_mask(n, mask, require_symmetric);
            FqMat l = circulant(field, row);
            if (!l.is_symmetric()) {
                return;
            }
            StabilizerCode code = StabilizerCode::from_L(l, c, true);
            CodeReport rep = min_distance(code, dopt);
            if (rep.status == DistanceStatus::Exact && rep.d >= d_target) {
                slots[mask] = CirculantHit{std::move(row), std::move(rep)};
            }
        } catch (const Error &e) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!failure) {
                failure = e;
            }
        }
    });
    if (failure) {
        throw *failure;
    }
    std::vector<CirculantHit> hits;
    for (auto &s : slots) {
        if (s) {
            hits.push_back(std::move(*s));
        }
    }
    std::sort(hits.begin(), hits.end(), [](const CirculantHit &x, const CirculantHit &y) {
        if (x.report.d != y.report.d) {
            return x.report.d > y.report.d;
        }
        return x.first_row < y.first_row;
    });
    return hits;
}

const char *violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::ColLow:
            return "colLow";
        case ViolationKind::ColHigh:
            return "colHigh";
        case ViolationKind::RowLow:
            return "rowLow";
        case ViolationKind::RowHigh:
            return "rowHigh";
    }
    return "unknown";
}

namespace {

struct GoodnessScan {
    size_t n;
    Rational alpha;
    std::vector<uint64_t> cols;
    std::vector<uint64_t> rows;

    std::optional<ViolationKind> classify(uint64_t col_sum, uint64_t row_sum) const {
        auto low = [&](uint64_t v) {
            return static_cast<int64_t>(std::popcount(v)) * alpha.den < alpha.num * static_cast<int64_t>(n);
        };
        auto high = [&](uint64_t v) {
            return static_cast<int64_t>(std::popcount(v)) * alpha.den >
                   (alpha.den - alpha.num) * static_cast<int64_t>(n);
        };
        if (low(col_sum)) {
            return ViolationKind::ColLow;
        }
        if (high(col_sum)) {
            return ViolationKind::ColHigh;
        }
        if (low(row_sum)) {
            return ViolationKind::RowLow;
        }
        if (high(row_sum)) {
            return ViolationKind::RowHigh;
        }
        return std::nullopt;
    }

    // Lexicographic DFS over subsets of the given size whose smallest element is `lead`.
    std::optional<Violation> first_with_lead(size_t size, size_t lead) const {
        std::vector<size_t> chosen{lead};
        return descend(size, chosen, cols[lead], rows[lead]);
    }

    std::optional<Violation> descend(size_t size, std::vector<size_t> &chosen, uint64_t col_sum,
                                     uint64_t row_sum) const {
        if (chosen.size() == size) {
            if (auto kind = classify(col_sum, row_sum)) {
                bool is_col = *kind == ViolationKind::ColLow || *kind == ViolationKind::ColHigh;
                size_t w = static_cast<size_t>(std::popcount(is_col ? col_sum : row_sum));
                return Violation{*kind, chosen, w};
            }
            return std::nullopt;
        }
        size_t remaining = size - chosen.size();
        for (size_t next = chosen.back() + 1; next + remaining <= n; next++) {
            chosen.push_back(next);
            auto v = descend(size, chosen, col_sum ^ cols[next], row_sum ^ rows[next]);
            chosen.pop_back();
            if (v) {
                return v;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

GoodnessReport is_alpha_good(const FqMat &r, Rational alpha, const GoodnessOptions &options) {
    if (r.field().q() != 2) {
        throw Error(ErrorKind::InvalidInput, "alpha-goodness is defined for matrices over F_2");
    }
    if (r.rows() != r.cols()) {
        throw Error(ErrorKind::InvalidInput, "R must be square");
    }
    size_t n = r.rows();
    if (n > 64) {
        throw Error(ErrorKind::InvalidInput, "alpha-goodness checks support n <= 64");
    }
    size_t s_max = alpha.floor_times(n);
    // Sum of binomials up to s_max, stopping as soon as the budget is exceeded.
    uint64_t total = 0;
    uint64_t binom = 1;
    for (size_t s = 1; s <= s_max; s++) {
        binom = binom * (n - s + 1) / s;
        total += binom;
        if (total > options.budget) {
            throw Error(ErrorKind::BudgetExceeded, "subset count exceeds the budget");
        }
    }

    GoodnessScan scan{n, alpha, std::vector<uint64_t>(n, 0), std::vector<uint64_t>(n, 0)};
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (r.at(i, j)) {
                scan.cols[j] |= uint64_t{1} << i;
                scan.rows[i] |= uint64_t{1} << j;
            }
        }
    }

    GoodnessReport report{alpha, true, std::nullopt};
    for (size_t size = 1; size <= s_max; size++) {
        size_t leads = n - size + 1;
        std::vector<std::optional<Violation>> per_lead(leads);
        std::atomic<size_t> first_bad{leads};
        parallel_for(options.workers, leads, [&](uint64_t lead) {
            if (lead > first_bad.load()) {
                return;
            }
            per_lead[lead] = scan.first_with_lead(size, lead);
            if (per_lead[lead]) {
                size_t cur = first_bad.load();
                while (lead < cur && !first_bad.compare_exchange_weak(cur, lead)) {
                }
            }
        });
        for (auto &v : per_lead) {
            if (v) {
                report.good = false;
                report.violation = std::move(v);
                return report;
            }
        }
    }
    return report;
}

FqMat random_binary_matrix(size_t n, uint64_t seed, uint64_t trial) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(trial),
                      static_cast<uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    FqMat m(Field::make(2), n, n);
    for (size_t i = 0; i < n; i++) {
        uint64_t word = 0;
        for (size_t j = 0; j < n; j++) {
            if (j % 64 == 0) {
                word = rng();
            }
            m.at(i, j) = (word >> (j % 64)) & 1;
        }
    }
    return m;
}

SampleResult sample_good(size_t n, Rational alpha, uint64_t seed, uint64_t max_tries, unsigned workers) {
    if (n < 1 || max_tries < 1) {
        throw Error(ErrorKind::InvalidInput, "sample_good needs n >= 1 and max_tries >= 1");
    }
    SampleResult result;
    result.seed = seed;
    uint64_t block = static_cast<uint64_t>(std::max(1u, workers)) * 16;
    for (uint64_t base = 0; base < max_tries; base += block) {
        uint64_t count = std::min(block, max_tries - base);
        std::atomic<uint64_t> best{count};
        parallel_for(workers, count, [&](uint64_t off) {
            if (off > best.load()) {
                return;
            }
            if (is_alpha_good(random_binary_matrix(n, seed, base + off), alpha).good) {
                uint64_t cur = best.load();
                while (off < cur && !best.compare_exchange_weak(cur, off)) {
                }
            }
        });
        if (best.load() < count) {
            result.found = true;
            result.tries = base + best.load() + 1;
            result.r = random_binary_matrix(n, seed, base + best.load());
            return result;
        }
    }
    result.tries = max_tries;
    return result;
}

FqMat block_matrix(const FqMat &r) {
    if (r.rows() != r.cols()) {
        throw Error(ErrorKind::InvalidInput, "R must be square");
    }
    size_t n = r.rows();
    FqMat l(r.field(), 2 * n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            l.at(i, n + j) = r.at(i, j);
            l.at(n + j, i) = r.at(i, j);
        }
    }
    return l;
}

BlockCode block_code_from_R(const FqMat &r, Rational alpha) {
    if (r.field().q() != 2) {
        throw Error(ErrorKind::InvalidInput, "the block construction takes R over F_2");
    }
    FqMat l = block_matrix(r);
    Subspace c = zero_sum_basis(l.field(), l.rows());
    return BlockCode{StabilizerCode::from_LD(l, split_upper(l), c, true), alpha.floor_times(r.rows())};
}

double chernoff_bound(double n, double p_success, double delta) {
    if (!(n > 0) || !(p_success > 0 && p_success < 1) || !(delta > 0 && delta <= 1)) {
        throw Error(ErrorKind::DomainError, "chernoff_bound needs n > 0, 0 < p < 1 and 0 < delta <= 1");
    }
    double mu = n * p_success;
    return std::exp(-mu * delta * delta / 2.0);
}

}  // namespace qstab
