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

#include "qstab/stabcode.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <thread>

#include "qstab/error.h"

namespace qstab {

namespace {

// Echelon set with normalized pivots, grown one vector at a time.
class IncrementalBasis {
   public:
    IncrementalBasis(const Field &field, size_t len) : field_(field), len_(len) {
    }

    /// Adds v if it is independent of the vectors seen so far.
    bool add(const FqVec &v) {
        FqVec rest = v;
        for (size_t i = 0; i < rows_.size(); i++) {
            Elem c = rest[pivots_[i]];
            if (c != 0) {
                axpy(field_, field_.neg(c), rows_[i], rest);
            }
        }
        auto it = std::find_if(rest.begin(), rest.end(), [](Elem e) { return e != 0; });
        if (it == rest.end()) {
            return false;
        }
        size_t pivot = static_cast<size_t>(it - rest.begin());
        Elem scale = field_.inv(rest[pivot]);
        for (auto &e : rest) {
            e = field_.mul(e, scale);
        }
        for (auto &row : rows_) {
            Elem c = row[pivot];
            if (c != 0) {
                axpy(field_, field_.neg(c), rest, row);
            }
        }
        rows_.push_back(std::move(rest));
        pivots_.push_back(pivot);
        return true;
    }

    size_t rank() const {
        return rows_.size();
    }

   private:
    Field field_;
    size_t len_;
    std::vector<FqVec> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace

DualBasis symplectic_dual(const Field &field, size_t n, const std::vector<SympPair> &generators) {
    FqMat constraints(field, generators.size(), 2 * n);
    for (size_t r = 0; r < generators.size(); r++) {
        const auto &g = generators[r];
        if (g.n() != n) {
            throw Error(ErrorKind::LengthMismatch, "generator length differs from n");
        }
        for (size_t i = 0; i < n; i++) {
            constraints.at(r, i) = g.b[i];
            constraints.at(r, n + i) = field.neg(g.a[i]);
        }
    }
    Subspace ker = kernel(constraints);

    DualBasis out;
    IncrementalBasis seen(field, 2 * n);
    for (const auto &g : generators) {
        FqVec v = g.concat();
        for (const auto &row_g : generators) {
            if (symp_form(field, g, row_g) != 0) {
                throw Error(ErrorKind::NotIsotropic, "generator lies outside its own symplectic dual");
            }
        }
        if (!seen.add(v)) {
            throw Error(ErrorKind::DependentGenerators, "generators are linearly dependent");
        }
        out.vectors.push_back(std::move(v));
    }
    out.stabilizer_count = generators.size();
    for (const auto &v : ker.basis()) {
        if (seen.add(v)) {
            out.vectors.push_back(v);
        }
    }
    if (out.vectors.size() != ker.dim() || out.vectors.size() + generators.size() != 2 * n) {
        throw Error(ErrorKind::InternalCheckFailed, "dual dimension differs from 2n - dim S");
    }
    return out;
}

StabilizerCode::StabilizerCode(Field field, size_t n) : field_(std::move(field)), n_(n) {
}

void StabilizerCode::finish() {
    dual_ = symplectic_dual(field_, n_, generators_);
}

StabilizerCode StabilizerCode::from_LD(const FqMat &l, const FqMat &d, const Subspace &c, bool c_is_zero_sum) {
    size_t n = l.rows();
    if (l.cols() != n || d.rows() != n || d.cols() != n || c.ambient_dim() != n) {
        throw Error(ErrorKind::LengthMismatch, "L, D and C must all live in dimension n");
    }
    if (l.field() != d.field() || l.field() != c.field()) {
        throw Error(ErrorKind::InvalidInput, "L, D and C use different fields");
    }
    if (!(d + d.transpose() == l)) {
        throw Error(ErrorKind::PhaseSplitInvalid, "L is not equal to D + D^T");
    }
    StabilizerCode code(l.field(), n);
    for (const auto &v : c.basis()) {
        code.generators_.emplace_back(v, mat_vec(l, v));
    }
    code.l_ = l;
    code.d_ = d;
    code.c_ = c;
    code.zero_sum_ = c_is_zero_sum;
    code.finish();
    return code;
}

StabilizerCode StabilizerCode::from_L(const FqMat &l, const Subspace &c, bool c_is_zero_sum) {
    return from_LD(l, split_upper(l), c, c_is_zero_sum);
}

StabilizerCode StabilizerCode::generic(
    const Field &field, size_t n, std::vector<SympPair> pairs, std::optional<std::vector<PhaseExp>> phases) {
    for (const auto &g : pairs) {
        if (g.n() != n) {
            throw Error(ErrorKind::LengthMismatch, "generator length differs from n");
        }
        for (size_t i = 0; i < n; i++) {
            if (g.a[i] >= field.q() || g.b[i] >= field.q()) {
                throw Error(ErrorKind::InvalidInput, "generator entry outside [0, q)");
            }
        }
    }
    for (size_t i = 0; i < pairs.size(); i++) {
        for (size_t j = i + 1; j < pairs.size(); j++) {
            if (symp_form(field, pairs[i], pairs[j]) != 0) {
                throw Error(ErrorKind::NotIsotropic,
                            "generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
            }
        }
    }
    IncrementalBasis seen(field, 2 * n);
    for (const auto &g : pairs) {
        if (!seen.add(g.concat())) {
            throw Error(ErrorKind::DependentGenerators, "generators are linearly dependent");
        }
    }
    if (phases.has_value()) {
        if (field.r() != 1) {
            throw Error(ErrorKind::InvalidInput, "generator phases are only supported over prime fields");
        }
        if (phases->size() != pairs.size()) {
            throw Error(ErrorKind::LengthMismatch, "one phase per generator is required");
        }
        std::vector<ErrorElement> elems;
        for (size_t i = 0; i < pairs.size(); i++) {
            if ((*phases)[i].e >= field.p()) {
                throw Error(ErrorKind::InvalidInput, "phase exponent outside [0, p)");
            }
            elems.push_back(ErrorElement{(*phases)[i], pairs[i]});
        }
        for (size_t i = 0; i < elems.size(); i++) {
            for (size_t j = i + 1; j < elems.size(); j++) {
                if (compose(field, elems[i], elems[j]) != compose(field, elems[j], elems[i])) {
                    throw Error(ErrorKind::InconsistentPhases, "generator products depend on order");
                }
            }
            // Independent commuting generators only produce a scalar through g^p.
            if (power(field, elems[i], static_cast<unsigned>(field.p())) != identity_element(n)) {
                throw Error(ErrorKind::InconsistentPhases,
                            "generator " + std::to_string(i) + " raised to the p-th power is a nontrivial scalar");
            }
        }
    }
    StabilizerCode code(field, n);
    code.generators_ = std::move(pairs);
    code.phases_ = std::move(phases);
    code.finish();
    return code;
}

const FqMat &StabilizerCode::L() const {
    if (!l_) {
        throw Error(ErrorKind::NoPhaseMatrix, "code has no L/D matrices");
    }
    return *l_;
}

const FqMat &StabilizerCode::D() const {
    if (!d_) {
        throw Error(ErrorKind::NoPhaseMatrix, "code has no phase matrix D");
    }
    return *d_;
}

const Subspace &StabilizerCode::C() const {
    if (!c_) {
        throw Error(ErrorKind::NoPhaseMatrix, "code has no base subspace C");
    }
    return *c_;
}

std::vector<PhaseExp> StabilizerCode::generator_phases() const {
    if (d_) {
        std::vector<PhaseExp> out;
        for (const auto &v : c_->basis()) {
            out.push_back(field_.char_exp(bilinear(*d_, v, v)));
        }
        return out;
    }
    if (phases_) {
        return *phases_;
    }
    throw Error(ErrorKind::NoPhaseMatrix, "code carries no phase information");
}

ErrorElement StabilizerCode::stabilizer_element(std::span<const Elem> coeffs) const {
    if (coeffs.size() != generators_.size()) {
        throw Error(ErrorKind::LengthMismatch, "one coefficient per generator is required");
    }
    if (d_) {
        FqVec a(n_, 0);
        for (size_t j = 0; j < coeffs.size(); j++) {
            axpy(field_, coeffs[j], c_->basis()[j], a);
        }
        PhaseExp phase = field_.char_exp(bilinear(*d_, a, a));
        FqVec b = mat_vec(*l_, a);
        return ErrorElement{phase, SympPair(std::move(a), std::move(b))};
    }
    if (!phases_) {
        throw Error(ErrorKind::NoPhaseMatrix, "code carries no phase information");
    }
    ErrorElement acc = identity_element(n_);
    for (size_t j = 0; j < coeffs.size(); j++) {
        ErrorElement g{(*phases_)[j], generators_[j]};
        acc = compose(field_, acc, power(field_, g, coeffs[j]));
    }
    return acc;
}

const char *distance_status_name(DistanceStatus status) {
    switch (status) {
        case DistanceStatus::Exact:
            return "exact";
        case DistanceStatus::EarlyExit:
            return "early_exit";
        case DistanceStatus::Undefined:
            return "undefined";
    }
    return "unknown";
}

namespace {

constexpr size_t kNoWeight = std::numeric_limits<size_t>::max();
constexpr uint64_t kNoIndex = std::numeric_limits<uint64_t>::max();

struct Candidate {
    size_t weight = kNoWeight;
    uint64_t index = kNoIndex;
    FqVec element;

    // Lower weight wins; equal weights resolve to the earlier canonical index.
    bool better_than(const Candidate &other) const {
        return weight < other.weight || (weight == other.weight && index < other.index);
    }
};

struct ChunkResult {
    Candidate outside;  // best over S^perp \ S
    Candidate inside;   // best over S \ {0}
    Candidate hit;      // first element meeting the early-exit threshold
};

struct SearchSetup {
    size_t n;
    size_t dual_dim;
    uint64_t total;       // q^dual_dim
    uint64_t stab_count;  // q^dim S; indices below this are exactly S
    DistanceMode mode;
    std::optional<size_t> early_exit;
};

void consider(ChunkResult &res, const SearchSetup &s, uint64_t index, size_t w, const auto &materialize,
              std::atomic<uint64_t> &cutoff) {
    bool in_s = index < s.stab_count;
    Candidate &slot = in_s ? res.inside : res.outside;
    if (w < slot.weight) {
        slot.weight = w;
        slot.index = index;
        slot.element = materialize();
    }
    if (s.early_exit && w <= *s.early_exit && (s.mode == DistanceMode::Pure || !in_s) &&
        res.hit.index == kNoIndex) {
        res.hit = Candidate{w, index, materialize()};
        uint64_t cur = cutoff.load();
        while (index < cur && !cutoff.compare_exchange_weak(cur, index)) {
        }
    }
}

// Reflected Gray code walk over F_2 coefficient tuples; a and b halves packed in words.
ChunkResult scan_gf2(const SearchSetup &s, const std::vector<uint64_t> &ba, const std::vector<uint64_t> &bb,
                     uint64_t lo, uint64_t hi, std::atomic<uint64_t> &cutoff) {
    ChunkResult res;
    uint64_t a = 0;
    uint64_t b = 0;
    uint64_t g = lo ^ (lo >> 1);
    for (size_t j = 0; j < s.dual_dim; j++) {
        if ((g >> j) & 1) {
            a ^= ba[j];
            b ^= bb[j];
        }
    }
    auto materialize = [&]() {
        FqVec v(2 * s.n);
        for (size_t i = 0; i < s.n; i++) {
            v[i] = (a >> i) & 1;
            v[s.n + i] = (b >> i) & 1;
        }
        return v;
    };
    for (uint64_t i = lo; i < hi; i++) {
        if (i != lo) {
            int j = std::countr_zero(i);
            a ^= ba[j];
            b ^= bb[j];
        }
        if (i == 0) {
            continue;
        }
        if (s.early_exit && (i & 1023) == 0 && i > cutoff.load(std::memory_order_relaxed)) {
            break;
        }
        size_t w = static_cast<size_t>(std::popcount(a | b));
        bool in_s = i < s.stab_count;
        Candidate &slot = in_s ? res.inside : res.outside;
        if (w < slot.weight || (s.early_exit && w <= *s.early_exit)) {
            consider(res, s, i, w, materialize, cutoff);
            if (res.hit.index != kNoIndex) {
                break;
            }
        }
    }
    return res;
}

// Mixed-radix counting over F_q coefficient tuples, digit 0 fastest.
ChunkResult scan_general(const SearchSetup &s, const Field &f, const std::vector<FqVec> &basis, uint64_t lo,
                         uint64_t hi, std::atomic<uint64_t> &cutoff) {
    ChunkResult res;
    size_t len = 2 * s.n;
    uint64_t q = static_cast<uint64_t>(f.q());
    std::vector<Elem> digits(s.dual_dim, 0);
    FqVec v(len, 0);
    uint64_t rest = lo;
    for (size_t j = 0; j < s.dual_dim; j++) {
        digits[j] = static_cast<Elem>(rest % q);
        rest /= q;
        axpy(f, digits[j], basis[j], v);
    }
    auto materialize = [&]() { return v; };
    for (uint64_t i = lo; i < hi; i++) {
        if (i != lo) {
            for (size_t j = 0; j < s.dual_dim; j++) {
                Elem old = digits[j];
                Elem next = static_cast<Elem>((old + 1) % q);
                digits[j] = next;
                axpy(f, f.sub(next, old), basis[j], v);
                if (next != 0) {
                    break;
                }
            }
        }
        if (i == 0) {
            continue;
        }
        if (s.early_exit && (i & 1023) == 0 && i > cutoff.load(std::memory_order_relaxed)) {
            break;
        }
        size_t w = 0;
        for (size_t k = 0; k < s.n; k++) {
            w += (v[k] | v[s.n + k]) != 0;
        }
        consider(res, s, i, w, materialize, cutoff);
        if (res.hit.index != kNoIndex) {
            break;
        }
    }
    return res;
}

}  // namespace

CodeReport min_distance(const StabilizerCode &code, const DistanceOptions &options) {
    auto start = std::chrono::steady_clock::now();
    const Field &f = code.field();
    const DualBasis &dual = code.dual();
    size_t n = code.n();

    SearchSetup s{n, dual.dim(), 1, 1, options.mode, options.early_exit};
    uint64_t q = static_cast<uint64_t>(f.q());
    for (size_t j = 0; j < dual.dim(); j++) {
        if (s.total > options.budget / q) {
            throw Error(ErrorKind::BudgetExceeded,
                        "q^" + std::to_string(dual.dim()) + " dual elements exceed the enumeration budget of " +
                            std::to_string(options.budget));
        }
        s.total *= q;
        if (j < dual.stabilizer_count) {
            s.stab_count *= q;
        }
    }

    unsigned workers = std::max(1u, options.workers);
    if (static_cast<uint64_t>(workers) > s.total) {
        workers = static_cast<unsigned>(s.total);
    }
    std::atomic<uint64_t> cutoff{kNoIndex};
    std::vector<ChunkResult> results(workers);

    bool packed = f.q() == 2 && n <= 64;
    std::vector<uint64_t> ba;
    std::vector<uint64_t> bb;
    if (packed) {
        for (const auto &v : dual.vectors) {
            uint64_t a = 0;
            uint64_t b = 0;
            for (size_t i = 0; i < n; i++) {
                a |= static_cast<uint64_t>(v[i] & 1) << i;
                b |= static_cast<uint64_t>(v[n + i] & 1) << i;
            }
            ba.push_back(a);
            bb.push_back(b);
        }
    }
    auto run_chunk = [&](unsigned w) {
        uint64_t lo = s.total / workers * w;
        uint64_t hi = w + 1 == workers ? s.total : s.total / workers * (w + 1);
        results[w] = packed ? scan_gf2(s, ba, bb, lo, hi, cutoff) : scan_general(s, f, dual.vectors, lo, hi, cutoff);
    };
    if (workers == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; w++) {
            threads.emplace_back(run_chunk, w);
        }
        for (auto &t : threads) {
            t.join();
        }
    }

    Candidate outside;
    Candidate inside;
    Candidate hit;
    for (const auto &r : results) {
        if (r.outside.better_than(outside)) {
            outside = r.outside;
        }
        if (r.inside.better_than(inside)) {
            inside = r.inside;
        }
        if (r.hit.index < hit.index) {
            hit = r.hit;
        }
    }

    CodeReport report;
    report.n = n;
    report.k = code.k();
    report.trivial_stabilizer = code.stabilizer_dim() == 0;
    auto witness_of = [&](const Candidate &c) { return SympPair::from_concat(c.element); };
    if (hit.index != kNoIndex) {
        report.status = DistanceStatus::EarlyExit;
        report.d = hit.weight;
        report.witness = witness_of(hit);
        report.pure = false;
        report.enumerated = hit.index + 1;
    } else {
        report.enumerated = s.total;
        report.pure = outside.weight == kNoWeight ? false : inside.weight >= outside.weight;
        if (options.mode == DistanceMode::Standard) {
            if (outside.weight == kNoWeight) {
                report.status = DistanceStatus::Undefined;
                report.d = n + 1;
                report.witness = SympPair::zero(n);
            } else {
                report.d = outside.weight;
                report.witness = witness_of(outside);
            }
        } else {
            // Inside indices precede outside ones, so ties go to S.
            const Candidate &best = inside.weight <= outside.weight ? inside : outside;
            if (best.weight == kNoWeight) {
                report.status = DistanceStatus::Undefined;
                report.d = n + 1;
                report.witness = SympPair::zero(n);
            } else {
                report.d = best.weight;
                report.witness = witness_of(best);
            }
        }
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace qstab
