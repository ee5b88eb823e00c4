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

// Acceptance checks. Run with no arguments for every criterion, or pass
// criterion numbers to run a subset. Prints one PASS/FAIL line per criterion
// and exits non-zero if any of them failed.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <Eigen/Sparse>

#include "oracles.h"
#include "qstab/error.h"
#include "qstab/puncture.h"
#include "qstab/search.h"
#include "qstab/verify.h"

using namespace qstab;
using namespace qstab::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Checker {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok) {
            out_.pass = false;
            append("FAILED " + what);
        }
    }
    void note(const std::string &what) {
        append(what);
    }
    Outcome done() {
        return out_;
    }

   private:
    void append(const std::string &s) {
        out_.detail += (out_.detail.empty() ? "" : "; ") + s;
    }
    Outcome out_;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f ms", ms);
    return buf;
}

CodeReport pure_distance(const StabilizerCode &code) {
    DistanceOptions opts;
    opts.mode = DistanceMode::Pure;
    return min_distance(code, opts);
}

/// Minimum nonzero weight over S, by walking all q^{dim S} elements.
size_t min_stabilizer_weight(const StabilizerCode &code, size_t *count_at_min) {
    const Field &f = code.field();
    size_t dim = code.stabilizer_dim();
    uint64_t total = count_vectors(f, dim);
    size_t best = code.n() + 1;
    size_t count = 0;
    for (uint64_t i = 1; i < total; i++) {
        size_t w = weight(code.stabilizer_element(nth_vector(f, i, dim)).pair);
        if (w < best) {
            best = w;
            count = 0;
        }
        count += w == best;
    }
    *count_at_min = count;
    return best;
}

Outcome criterion_1() {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    CodeReport r2 = min_distance(circulant_code(Field::make(2), kRow5));
    CodeReport r3 = min_distance(circulant_code(Field::make(3), kRow5));
    double ms = ms_since(t0);
    c.expect(r2.k == 1 && r2.d == 3 && r2.status == DistanceStatus::Exact, "F_2 d=" + std::to_string(r2.d));
    c.expect(r2.pure, "F_2 pure");
    c.expect(r3.k == 1 && r3.d == 3 && r3.status == DistanceStatus::Exact, "F_3 d=" + std::to_string(r3.d));
    c.expect(ms < 1000, "runtime " + fmt_ms(ms));
    c.note("[[5,1,3]] F_2 d=" + std::to_string(r2.d) + " pure=" + (r2.pure ? "true" : "false") +
           ", F_3 d=" + std::to_string(r3.d) + ", " + fmt_ms(ms));
    return c.done();
}

Outcome criterion_2() {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    CodeReport r = min_distance(circulant_code(Field::make(2), kRow13));
    double ms = ms_since(t0);
    c.expect(r.k == 1 && r.d == 5 && r.status == DistanceStatus::Exact, "d=" + std::to_string(r.d));
    c.expect(r.pure, "pure");
    c.expect(r.enumerated == (uint64_t{1} << 14), "enumerated " + std::to_string(r.enumerated));
    c.expect(ms < 1000, "runtime " + fmt_ms(ms));
    c.note("[[13,1,5]] d=" + std::to_string(r.d) + " pure=" + (r.pure ? "true" : "false") +
           " enumerated=" + std::to_string(r.enumerated) + ", " + fmt_ms(ms));
    return c.done();
}

Outcome criterion_3() {
    Checker c;
    StabilizerCode code = circulant_code(Field::make(2), kRow21);
    auto t0 = std::chrono::steady_clock::now();
    CodeReport r = min_distance(code);
    double ms = ms_since(t0);
    c.expect(r.k == 1 && r.d == 7 && r.status == DistanceStatus::Exact, "d=" + std::to_string(r.d));
    c.expect(r.enumerated == (uint64_t{1} << 22), "enumerated " + std::to_string(r.enumerated));
    c.expect(ms < 60000, "runtime " + fmt_ms(ms));
    c.expect(r.pure, "pure (expected true)");
    if (!r.pure) {
        size_t count = 0;
        size_t w = min_stabilizer_weight(code, &count);
        c.note("S contains " + std::to_string(count) + " elements of weight " + std::to_string(w) + " < d");
    }
    c.note("[[21,1,7]] d=" + std::to_string(r.d) + " pure=" + (r.pure ? "true" : "false") +
           " enumerated=" + std::to_string(r.enumerated) + ", " + fmt_ms(ms));
    return c.done();
}

StabilizerCode random_LC_code(const Field &f, size_t n, std::mt19937_64 &rng) {
    FqMat l(f, n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i; j < n; j++) {
            Elem v = static_cast<Elem>(rng() % f.q());
            if (i == j && f.p() == 2) {
                v = 0;
            }
            l.at(i, j) = l.at(j, i) = v;
        }
    }
    size_t dim = rng() % (n + 1);
    std::vector<FqVec> vecs;
    for (size_t i = 0; i < dim; i++) {
        FqVec v(n);
        for (auto &x : v) {
            x = static_cast<Elem>(rng() % f.q());
        }
        vecs.push_back(v);
    }
    return StabilizerCode::from_L(l, Subspace::span(f, n, vecs));
}

std::vector<StabilizerCode> oracle_instances() {
    std::vector<StabilizerCode> out;
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; i++) {
        out.push_back(random_LC_code(Field::make(2), 1 + rng() % 5, rng));
    }
    for (int i = 0; i < 10; i++) {
        out.push_back(random_LC_code(Field::make(3), 1 + rng() % 3, rng));
    }
    return out;
}

Outcome criterion_4() {
    Checker c;
    size_t agree = 0;
    size_t total = 0;
    for (const StabilizerCode &code : oracle_instances()) {
        OracleResult o = brute_force_distance(code);
        CodeReport s = min_distance(code);
        CodeReport p = pure_distance(code);
        total++;
        bool ok = s.d == o.d_standard && p.d == o.d_pure;
        agree += ok;
        c.expect(ok, "instance " + std::to_string(total) + " q=" + std::to_string(code.field().q()) +
                         " n=" + std::to_string(code.n()) + " got " + std::to_string(s.d) + "/" +
                         std::to_string(p.d) + " oracle " + std::to_string(o.d_standard) + "/" +
                         std::to_string(o.d_pure));
    }
    c.note(std::to_string(agree) + "/" + std::to_string(total) + " instances agree with the all-pairs oracle");
    return c.done();
}

Outcome criterion_5() {
    Checker c;
    StabilizerCode code = circulant_code(Field::make(2), kRow5);
    auto t0 = std::chrono::steady_clock::now();
    KLReport one = check_kl(code, 1);
    KLReport two = check_kl(code, 2);
    double ms = ms_since(t0);
    c.expect(one.passed && one.checked == 106, "t=1 passed over " + std::to_string(one.checked) + " labels");
    c.expect(!two.passed && two.failure.has_value(), "t=2 must fail");
    std::string witness;
    if (two.failure) {
        size_t w = weight(two.failure->pair);
        c.expect(w == 3 || w == 4, "witness weight " + std::to_string(w));
        witness = "(" + format_vec(two.failure->pair.a) + " | " + format_vec(two.failure->pair.b) + ")";
    }
    c.expect(ms < 5000, "runtime " + fmt_ms(ms));
    c.note("t=1 passed over " + std::to_string(one.checked) + " labels, t=2 witness " + witness + ", " + fmt_ms(ms));
    return c.done();
}

Eigen::VectorXcd as_vector(const StateVector &s) {
    return Eigen::Map<const Eigen::VectorXcd>(s.amplitudes.data(), static_cast<Eigen::Index>(s.amplitudes.size()));
}

Outcome criterion_6() {
    Checker c;
    StabilizerCode code = circulant_code(Field::make(2), kRow5);
    Eigen::MatrixXcd p = projection(code);
    std::complex<double> tr = p.trace();
    c.expect(std::abs(tr - 2.0) < kVerifyTolerance, "trace");
    double idem = (p * p - p).norm();
    c.expect(idem < kVerifyTolerance, "P^2 = P");
    double worst = 0;
    for (const auto &w : all_codewords(code)) {
        Eigen::VectorXcd v = as_vector(w.state);
        worst = std::max(worst, (p * v - v).norm());
    }
    c.expect(worst < kVerifyTolerance, "P psi = psi");
    std::ostringstream ss;
    ss << "Tr(P)=" << tr.real() << " |P^2-P|=" << idem << " max|P psi-psi|=" << worst;
    c.note(ss.str());
    return c.done();
}

Outcome criterion_7() {
    Checker c;
    PunctureResult res = puncture(circulant_code(Field::make(2), kRow5), 0);
    CodeReport r = pure_distance(res.code);
    c.expect(res.code.n() == 4 && res.code.k() == 2, "parameters");
    c.expect(r.status == DistanceStatus::Exact && r.d >= 2, "pure distance " + std::to_string(r.d));
    c.note("punctured code n=" + std::to_string(res.code.n()) + " k=" + std::to_string(res.code.k()) +
           " pure d=" + std::to_string(r.d) + " over " + std::to_string(r.enumerated) + " dual elements");
    return c.done();
}

constexpr uint64_t kSampleSeed = 1;

Outcome criterion_8() {
    Checker c;
    Rational alpha{1, 4};
    SampleResult s = sample_good(8, alpha, kSampleSeed, 100000);
    c.expect(s.found, "sample_good found a matrix");
    if (!s.found) {
        return c.done();
    }
    c.expect(is_alpha_good(*s.r, alpha).good, "is_alpha_good");
    c.expect(brute_force_alpha_good(*s.r, alpha), "independent subset enumerator");
    BlockCode bc = block_code_from_R(*s.r, alpha);
    CodeReport r = pure_distance(bc.code);
    c.expect(bc.code.n() == 16 && bc.code.k() == 1, "block code parameters");
    c.expect(r.d >= 2 && r.d >= bc.designed_distance, "pure distance " + std::to_string(r.d));
    c.note("seed=" + std::to_string(kSampleSeed) + " tries=" + std::to_string(s.tries) + ", [[" +
           std::to_string(bc.code.n()) + "," + std::to_string(bc.code.k()) + "]] pure d=" + std::to_string(r.d) +
           " >= " + std::to_string(bc.designed_distance));
    return c.done();
}

Outcome criterion_9() {
    Checker c;
    std::mt19937_64 rng(20261018);
    const uint64_t mask36 = (uint64_t{1} << 36) - 1;
    const int trials = 100000;
    int below = 0;
    for (int t = 0; t < trials; t++) {
        // 100 fair coins: 64 + 36 random bits.
        int x = std::popcount(rng()) + std::popcount(rng() & mask36);
        below += x < 25;
    }
    double freq = static_cast<double>(below) / trials;
    double bound = chernoff_bound(100, 0.5, 0.5);
    c.expect(freq <= bound, "frequency above bound");
    c.expect(std::abs(bound - std::exp(-6.25)) < 1e-15, "bound value");
    std::ostringstream ss;
    ss << "Pr[X<25] ~ " << freq << " (" << below << "/" << trials << ") <= bound " << bound;
    c.note(ss.str());
    return c.done();
}

struct NamedCode {
    std::string name;
    StabilizerCode code;
};

std::vector<NamedCode> built_codes() {
    Field f2 = Field::make(2);
    std::vector<NamedCode> out;
    out.push_back({"[[5,1,3]]_2", circulant_code(f2, kRow5)});
    out.push_back({"[[5,1,3]]_3", circulant_code(Field::make(3), kRow5)});
    out.push_back({"[[13,1,5]]_2", circulant_code(f2, kRow13)});
    out.push_back({"[[21,1,7]]_2", circulant_code(f2, kRow21)});
    size_t i = 0;
    for (auto &code : oracle_instances()) {
        out.push_back({"oracle#" + std::to_string(++i), std::move(code)});
    }
    out.push_back({"punctured", puncture(circulant_code(f2, kRow5), 0).code});
    SampleResult s = sample_good(8, Rational{1, 4}, kSampleSeed, 100000);
    if (s.found) {
        out.push_back({"block", block_code_from_R(*s.r, Rational{1, 4}).code});
    }
    return out;
}

bool phase_additivity(const StabilizerCode &code, std::mt19937_64 &rng) {
    const Field &f = code.field();
    const auto &basis = code.C().basis();
    auto q = [&](const FqVec &v) { return bilinear(code.D(), v, v); };
    auto check = [&](const FqVec &u, const FqVec &v) {
        FqVec s = u;
        axpy(f, 1, v, s);
        return f.sub(f.sub(q(s), q(u)), q(v)) == bilinear(code.L(), u, v);
    };
    for (const auto &u : basis) {
        for (const auto &v : basis) {
            if (!check(u, v)) {
                return false;
            }
        }
    }
    for (int t = 0; t < 200 && !basis.empty(); t++) {
        FqVec u(code.n(), 0);
        FqVec v(code.n(), 0);
        for (const auto &b : basis) {
            axpy(f, static_cast<Elem>(rng() % f.q()), b, u);
            axpy(f, static_cast<Elem>(rng() % f.q()), b, v);
        }
        if (!check(u, v)) {
            return false;
        }
    }
    return true;
}

bool generators_commute(const StabilizerCode &code) {
    auto phases = code.generator_phases();
    std::vector<Eigen::SparseMatrix<std::complex<double>>> mats;
    for (size_t g = 0; g < phases.size(); g++) {
        mats.push_back(weyl_matrix(code.field(), ErrorElement{phases[g], code.generators()[g]}).sparseView());
    }
    for (const auto &x : mats) {
        for (const auto &y : mats) {
            Eigen::SparseMatrix<std::complex<double>> diff = x * y - y * x;
            if (diff.norm() > 1e-9) {
                return false;
            }
        }
    }
    return true;
}

bool dual_dimension(const StabilizerCode &code) {
    const Field &f = code.field();
    size_t n = code.n();
    const DualBasis &dual = code.dual();
    if (dual.dim() + code.stabilizer_dim() != 2 * n) {
        return false;
    }
    if (Subspace::span(f, 2 * n, dual.vectors).dim() != dual.dim()) {
        return false;
    }
    for (const auto &v : dual.vectors) {
        for (const auto &g : code.generators()) {
            FqVec a(v.begin(), v.begin() + n);
            FqVec b(v.begin() + n, v.end());
            if (oracle_symp(f, a, b, g.a, g.b) != 0) {
                return false;
            }
        }
    }
    // Count the centralizer directly where that is cheap.
    if (count_vectors(f, 2 * n) <= (uint64_t{1} << 12)) {
        OracleResult o = brute_force_distance(code);
        if (o.centralizer_size * o.stabilizer_size != count_vectors(f, 2 * n) ||
            o.centralizer_size != count_vectors(f, dual.dim())) {
            return false;
        }
    }
    return true;
}

bool codewords_orthonormal(const StabilizerCode &code) {
    auto words = all_codewords(code);
    for (size_t i = 0; i < words.size(); i++) {
        for (size_t j = 0; j < words.size(); j++) {
            std::complex<double> g = words[i].state.inner(words[j].state);
            if (std::abs(g - std::complex<double>(i == j ? 1.0 : 0.0)) > kVerifyTolerance) {
                return false;
            }
        }
    }
    return true;
}

Outcome criterion_10() {
    Checker c;
    std::mt19937_64 rng(10);
    size_t n_add = 0;
    size_t n_comm = 0;
    size_t n_dual = 0;
    size_t n_ortho = 0;
    std::string no_comm;
    std::string no_ortho;
    auto add = [](std::string &list, const std::string &name) { list += (list.empty() ? "" : ",") + name; };
    for (const auto &[name, code] : built_codes()) {
        if (code.has_phase_matrix()) {
            c.expect(phase_additivity(code, rng), name + " phase additivity");
            n_add++;
        }
        if (code.has_phases() && count_vectors(code.field(), code.n()) <= (uint64_t{1} << 10)) {
            c.expect(generators_commute(code), name + " commutation");
            n_comm++;
        } else {
            add(no_comm, name);
        }
        c.expect(dual_dimension(code), name + " dual dimension");
        n_dual++;
        if (code.has_phase_matrix() && count_vectors(code.field(), code.n()) <= kDefaultDenseLimit) {
            c.expect(codewords_orthonormal(code), name + " orthonormality");
            n_ortho++;
        } else {
            add(no_ortho, name);
        }
    }
    c.note("additivity on " + std::to_string(n_add) + " codes, commutation on " + std::to_string(n_comm) +
           ", dual identity on " + std::to_string(n_dual) + ", orthonormality on " + std::to_string(n_ortho));
    c.note("commutation skipped (q^n > 2^10): " + no_comm);
    c.note("orthonormality skipped (q^n > 2^14 or no phase matrix): " + no_ortho);
    return c.done();
}

const std::vector<std::function<Outcome()>> kCriteria = {
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
};

}  // namespace

int main(int argc, char **argv) {
    std::vector<size_t> which;
    for (int i = 1; i < argc; i++) {
        try {
            size_t k = std::stoul(argv[i]);
            if (k < 1 || k > kCriteria.size()) {
                throw std::out_of_range(argv[i]);
            }
            which.push_back(k);
        } catch (const std::exception &) {
            std::cerr << "usage: " << argv[0] << " [criterion 1-" << kCriteria.size() << " ...]\n";
            return 2;
        }
    }
    if (which.empty()) {
        for (size_t k = 1; k <= kCriteria.size(); k++) {
            which.push_back(k);
        }
    }
    int failed = 0;
    for (size_t k : which) {
        Outcome o;
        try {
            o = kCriteria[k - 1]();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << " | " << o.detail << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
