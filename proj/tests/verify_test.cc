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

#include "qstab/verify.h"

#include <cmath>
#include <sstream>

#include <Eigen/Sparse>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qstab/error.h"

using namespace qstab;
using namespace qstab::testing;

namespace {

Eigen::VectorXcd as_vector(const StateVector &s) {
    return Eigen::Map<const Eigen::VectorXcd>(s.amplitudes.data(), static_cast<Eigen::Index>(s.amplitudes.size()));
}

std::vector<StabilizerCode> small_codes() {
    Field f2 = Field::make(2);
    Field f3 = Field::make(3);
    Field f4 = Field::make(2, 2, std::vector<int>{1, 1, 1});
    std::vector<StabilizerCode> out;
    out.push_back(circulant_code(f2, kRow5));
    out.push_back(circulant_code(f3, kRow5));
    out.push_back(circulant_code(f4, kRow5));
    out.push_back(circulant_code(f2, FqVec{0, 1, 0, 0, 0, 0, 1}));
    // A non-zero-sum C exercises the lexicographic coset representatives.
    FqMat l = circulant(f3, FqVec{1, 2, 2});
    out.push_back(StabilizerCode::from_L(l, Subspace::span(f3, 3, {{1, 1, 0}})));
    return out;
}

}  // namespace

TEST(verify, five_qubit_codeword_zero) {
    StabilizerCode code = circulant_code(Field::make(2), kRow5);
    StateVector psi = codeword(code, FqVec(5, 0));
    EXPECT_NEAR(psi.amplitudes[0].real(), 0.25, 1e-12);
    EXPECT_NEAR(psi.amplitudes[0].imag(), 0.0, 1e-12);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
    for (size_t i = 0; i < psi.amplitudes.size(); i++) {
        FqVec w = ket_word(code.field(), i, 5);
        bool in_c = code.C().contains(w);
        EXPECT_EQ(std::abs(psi.amplitudes[i]) > 1e-12, in_c);
    }
    StateVector psi1 = codeword(code, FqVec{1, 0, 0, 0, 0});
    EXPECT_NEAR(std::abs(psi.inner(psi1)), 0.0, 1e-12);
}

TEST(verify, coset_representatives) {
    StabilizerCode code = circulant_code(Field::make(3), kRow5);
    EXPECT_EQ(coset_representatives(code), (std::vector<FqVec>{{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {2, 0, 0, 0, 0}}));
    Field f3 = Field::make(3);
    StabilizerCode gen = StabilizerCode::from_L(FqMat(f3, 3, 3), Subspace::span(f3, 3, {{1, 1, 0}}));
    auto reps = coset_representatives(gen);
    ASSERT_EQ(reps.size(), 9u);
    EXPECT_EQ(reps[0], (FqVec{0, 0, 0}));
    EXPECT_EQ(reps[1], (FqVec{0, 0, 1}));
    EXPECT_EQ(reps[3], (FqVec{0, 1, 0}));
    // Each representative is the least element of its coset.
    for (const auto &x : reps) {
        for (Elem c = 1; c < 3; c++) {
            FqVec y = x;
            axpy(f3, c, FqVec{1, 1, 0}, y);
            EXPECT_LT(x, y);
        }
    }
}

TEST(verify, codewords_orthonormal) {
    for (const StabilizerCode &code : small_codes()) {
        auto words = all_codewords(code);
        size_t expected = 1;
        for (size_t i = 0; i < code.n() - code.C().dim(); i++) {
            expected *= code.field().q();
        }
        ASSERT_EQ(words.size(), expected);
        for (size_t i = 0; i < words.size(); i++) {
            for (size_t j = 0; j < words.size(); j++) {
                std::complex<double> g = words[i].state.inner(words[j].state);
                EXPECT_NEAR(std::abs(g - std::complex<double>(i == j ? 1.0 : 0.0)), 0.0, kVerifyTolerance);
            }
        }
    }
}

TEST(verify, generators_fix_codewords) {
    for (const StabilizerCode &code : small_codes()) {
        auto words = all_codewords(code);
        auto phases = code.generator_phases();
        for (size_t g = 0; g < code.generators().size(); g++) {
            ErrorElement e{phases[g], code.generators()[g]};
            Eigen::MatrixXcd m = weyl_matrix(code.field(), e);
            for (const auto &w : words) {
                Eigen::VectorXcd v = as_vector(w.state);
                EXPECT_LT((m * v - v).norm(), kVerifyTolerance);
                StateVector moved = apply_error(e, w.state);
                EXPECT_LT((as_vector(moved) - v).norm(), kVerifyTolerance);
            }
        }
    }
}

TEST(verify, generators_commute_as_matrices) {
    for (const StabilizerCode &code : small_codes()) {
        auto phases = code.generator_phases();
        // Weyl matrices are monomial, so sparse products keep q^n = 1024 cheap.
        std::vector<Eigen::SparseMatrix<std::complex<double>>> mats;
        for (size_t g = 0; g < code.generators().size(); g++) {
            mats.push_back(weyl_matrix(code.field(), ErrorElement{phases[g], code.generators()[g]}).sparseView());
        }
        for (const auto &x : mats) {
            for (const auto &y : mats) {
                Eigen::SparseMatrix<std::complex<double>> diff = x * y - y * x;
                EXPECT_LT(diff.norm(), 1e-9);
            }
        }
    }
}

TEST(verify, apply_error_matches_matrix) {
    Field f3 = Field::make(3);
    StabilizerCode code = circulant_code(f3, kRow5);
    StateVector psi = codeword(code, FqVec{1, 0, 0, 0, 0});
    ErrorElement e{PhaseExp{2}, SympPair({1, 0, 2, 0, 1}, {0, 2, 1, 1, 0})};
    Eigen::VectorXcd expect = weyl_matrix(f3, e) * as_vector(psi);
    EXPECT_LT((as_vector(apply_error(e, psi)) - expect).norm(), 1e-9);
}

TEST(verify, projection_five_qubit) {
    StabilizerCode code = circulant_code(Field::make(2), kRow5);
    Eigen::MatrixXcd p = projection(code);
    EXPECT_NEAR(p.trace().real(), 2.0, kVerifyTolerance);
    EXPECT_NEAR(p.trace().imag(), 0.0, kVerifyTolerance);
    EXPECT_LT((p * p - p).norm(), kVerifyTolerance);
    EXPECT_LT((p.adjoint() - p).norm(), kVerifyTolerance);
    for (const auto &w : all_codewords(code)) {
        Eigen::VectorXcd v = as_vector(w.state);
        EXPECT_LT((p * v - v).norm(), kVerifyTolerance);
    }
    auto phases = code.generator_phases();
    for (size_t g = 0; g < phases.size(); g++) {
        Eigen::MatrixXcd m = weyl_matrix(code.field(), ErrorElement{phases[g], code.generators()[g]});
        EXPECT_LT((p * m - p).norm(), kVerifyTolerance);
    }
}

TEST(verify, projection_trivial_code) {
    Field f2 = Field::make(2);
    StabilizerCode empty = StabilizerCode::generic(f2, 2, {}, std::vector<PhaseExp>{});
    Eigen::MatrixXcd p = projection(empty);
    EXPECT_LT((p - Eigen::MatrixXcd::Identity(4, 4)).norm(), 1e-12);
    StabilizerCode no_phase = StabilizerCode::generic(f2, 2, {SympPair({1, 1}, {0, 0})}, std::nullopt);
    EXPECT_THROW(projection(no_phase), Error);
}

TEST(verify, projection_trace_other_fields) {
    for (const StabilizerCode &code : small_codes()) {
        Eigen::MatrixXcd p = projection(code);
        double expected = 1;
        for (size_t i = 0; i < code.k(); i++) {
            expected *= code.field().q();
        }
        EXPECT_NEAR(p.trace().real(), expected, kVerifyTolerance);
    }
}

TEST(verify, label_enumeration) {
    Field f2 = Field::make(2);
    auto labels = labels_up_to_weight(f2, 5, 2);
    EXPECT_EQ(labels.size(), 106u);
    EXPECT_EQ(labels[0], SympPair::zero(5));
    for (size_t i = 1; i < labels.size(); i++) {
        EXPECT_GE(weight(labels[i]), weight(labels[i - 1]));
    }
    EXPECT_EQ(labels_up_to_weight(Field::make(3), 3, 1).size(), 1u + 3 * 8);
}

TEST(verify, knill_laflamme_five_qubit) {
    StabilizerCode code = circulant_code(Field::make(2), kRow5);
    KLReport pass = check_kl(code, 1);
    EXPECT_TRUE(pass.passed);
    EXPECT_EQ(pass.checked, 106u);
    EXPECT_FALSE(pass.failure.has_value());

    KLReport fail = check_kl(code, 2);
    EXPECT_FALSE(fail.passed);
    ASSERT_TRUE(fail.failure.has_value());
    size_t w = weight(fail.failure->pair);
    EXPECT_TRUE(w == 3 || w == 4) << w;

    KLOptions opts;
    opts.workers = 3;
    KLReport fail3 = check_kl(code, 2, opts);
    EXPECT_EQ(fail3.failure->pair, fail.failure->pair);
    EXPECT_EQ(fail3.checked, fail.checked);
}

TEST(verify, knill_laflamme_trivial_t) {
    for (const StabilizerCode &code : small_codes()) {
        KLReport rep = check_kl(code, 0);
        EXPECT_TRUE(rep.passed);
        EXPECT_EQ(rep.checked, 1u);
    }
}

TEST(verify, knill_laflamme_consistent_with_distance) {
    for (const StabilizerCode &code : small_codes()) {
        size_t d = min_distance(code).d;
        size_t t = (d - 1) / 2;
        EXPECT_TRUE(check_kl(code, t).passed) << "q=" << code.field().q() << " n=" << code.n();
    }
}

TEST(verify, dense_limit) {
    StabilizerCode code = circulant_code(Field::make(2), kRow13);
    try {
        check_kl(code, 1, KLOptions{1024, 1});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionLimitExceeded);
    }
}

TEST(verify, codeword_dump_format) {
    StabilizerCode code = circulant_code(Field::make(2), kRow5);
    auto words = all_codewords(code);
    std::stringstream ss;
    write_codeword_dump(ss, code, words[1]);
    std::string header;
    std::getline(ss, header);
    EXPECT_EQ(header, "2 1 5 1 1,0,0,0,0");
    size_t lines = 0;
    long long last = -1;
    long long idx;
    double re;
    double im;
    while (ss >> idx >> re >> im) {
        EXPECT_GT(idx, last);
        last = idx;
        EXPECT_NEAR(std::hypot(re, im), 0.25, 1e-12);
        lines++;
    }
    EXPECT_EQ(lines, 16u);
}
