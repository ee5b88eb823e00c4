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

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <thread>
#include <utility>

#include "qstab/error.h"

namespace qstab {

double StateVector::norm() const {
    double s = 0;
    for (const auto &a : amplitudes) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

std::complex<double> StateVector::inner(const StateVector &other) const {
    if (amplitudes.size() != other.amplitudes.size()) {
        throw Error(ErrorKind::LengthMismatch, "inner product of states with different dimensions");
    }
    std::complex<double> s = 0;
    for (size_t i = 0; i < amplitudes.size(); i++) {
        s += std::conj(amplitudes[i]) * other.amplitudes[i];
    }
    return s;
}

namespace {

// Precomputed action of one Weyl operator on ket indices.
class WeylAction {
   public:
    WeylAction(const Field &field, const ErrorElement &e) : field_(field), e_(e), n_(e.pair.n()) {
        binary_ = field.q() == 2 && n_ <= 63;
        if (binary_) {
            for (size_t i = 0; i < n_; i++) {
                amask_ |= static_cast<uint64_t>(e.pair.a[i]) << (n_ - 1 - i);
                bmask_ |= static_cast<uint64_t>(e.pair.b[i]) << (n_ - 1 - i);
            }
        }
    }

    /// Maps ket x to (target index, phase exponent).
    std::pair<size_t, int> operator()(size_t x) const {
        if (binary_) {
            int exp = e_.phase.e + (std::popcount(bmask_ & x) & 1);
            return {x ^ amask_, exp};
        }
        FqVec word = ket_word(field_, x, n_);
        int exp = e_.phase.e + field_.trace(dot(field_, e_.pair.b, word));
        for (size_t i = 0; i < n_; i++) {
            word[i] = field_.add(word[i], e_.pair.a[i]);
        }
        return {ket_index(field_, word), exp};
    }

   private:
    const Field &field_;
    const ErrorElement &e_;
    size_t n_;
    bool binary_ = false;
    uint64_t amask_ = 0;
    uint64_t bmask_ = 0;
};

// Calls fn(coeffs, vector) for every F_q-combination of the basis, counting in mixed radix.
template <typename Fn>
void for_each_combination(const Field &f, const std::vector<FqVec> &basis, size_t len, Fn &&fn) {
    size_t m = basis.size();
    std::vector<Elem> digits(m, 0);
    FqVec v(len, 0);
    while (true) {
        fn(std::as_const(digits), std::as_const(v));
        size_t j = 0;
        for (; j < m; j++) {
            Elem old = digits[j];
            Elem next = static_cast<Elem>((old + 1) % f.q());
            digits[j] = next;
            axpy(f, f.sub(next, old), basis[j], v);
            if (next != 0) {
                break;
            }
        }
        if (j == m) {
            return;
        }
    }
}

}  // namespace

StateVector apply_error(const ErrorElement &e, const StateVector &psi) {
    WeylAction act(psi.field, e);
    StateVector out{psi.field, psi.n, std::vector<std::complex<double>>(psi.amplitudes.size(), 0.0)};
    for (size_t x = 0; x < psi.amplitudes.size(); x++) {
        if (psi.amplitudes[x] == 0.0) {
            continue;
        }
        auto [y, exp] = act(x);
        out.amplitudes[y] += psi.field.root_of_unity(exp) * psi.amplitudes[x];
    }
    return out;
}

std::vector<FqVec> coset_representatives(const StabilizerCode &code) {
    const Field &f = code.field();
    size_t n = code.n();
    const Subspace &c = code.C();
    std::vector<FqVec> reps;
    if (code.c_is_zero_sum()) {
        for (int v = 0; v < f.q(); v++) {
            FqVec x(n, 0);
            x[0] = static_cast<Elem>(v);
            reps.push_back(std::move(x));
        }
        return reps;
    }
    // Reduced coset vectors vanish on the pivot columns of rref(C); ranging
    // over the free columns big-endian lists them in lexicographic order.
    std::vector<size_t> free_cols;
    if (c.dim() > 0) {
        auto rr = rref(FqMat::from_rows(f, c.basis(), n));
        std::vector<bool> pivot(n, false);
        for (size_t p : rr.pivots) {
            pivot[p] = true;
        }
        for (size_t i = 0; i < n; i++) {
            if (!pivot[i]) {
                free_cols.push_back(i);
            }
        }
    } else {
        for (size_t i = 0; i < n; i++) {
            free_cols.push_back(i);
        }
    }
    size_t count = 1;
    for (size_t i = 0; i < free_cols.size(); i++) {
        count *= static_cast<size_t>(f.q());
    }
    for (size_t idx = 0; idx < count; idx++) {
        FqVec digits = ket_word(f, idx, free_cols.size());
        FqVec x(n, 0);
        for (size_t i = 0; i < free_cols.size(); i++) {
            x[free_cols[i]] = digits[i];
        }
        reps.push_back(std::move(x));
    }
    return reps;
}

StateVector codeword(const StabilizerCode &code, std::span<const Elem> rep, size_t dense_limit) {
    const Field &f = code.field();
    size_t n = code.n();
    if (rep.size() != n) {
        throw Error(ErrorKind::LengthMismatch, "coset representative has wrong length");
    }
    const FqMat &d = code.D();
    const FqMat &l = code.L();
    const Subspace &c = code.C();
    size_t dim = hilbert_dim(f, n, dense_limit);
    StateVector psi{f, n, std::vector<std::complex<double>>(dim, 0.0)};
    FqVec lx = mat_vec(l, rep);
    double scale = 1.0;
    for (size_t i = 0; i < c.dim(); i++) {
        scale *= f.q();
    }
    scale = 1.0 / std::sqrt(scale);
    FqVec ket(n);
    for_each_combination(f, c.basis(), n, [&](const std::vector<Elem> &, const FqVec &a) {
        int exp = f.trace(bilinear(d, a, a)) + f.trace(dot(f, a, lx));
        for (size_t i = 0; i < n; i++) {
            ket[i] = f.add(a[i], rep[i]);
        }
        psi.amplitudes[ket_index(f, ket)] += scale * f.root_of_unity(exp);
    });
    return psi;
}

std::vector<Codeword> all_codewords(const StabilizerCode &code, size_t dense_limit) {
    hilbert_dim(code.field(), code.n(), dense_limit);
    std::vector<Codeword> out;
    for (auto &rep : coset_representatives(code)) {
        StateVector psi = codeword(code, rep, dense_limit);
        out.push_back(Codeword{std::move(rep), std::move(psi)});
    }
    return out;
}

Eigen::MatrixXcd projection(const StabilizerCode &code, size_t limit) {
    const Field &f = code.field();
    size_t n = code.n();
    size_t dim = hilbert_dim(f, n, limit);
    if (!code.has_phases()) {
        throw Error(ErrorKind::NoPhaseMatrix, "projection needs phases on the stabilizer");
    }
    auto idim = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(idim, idim);
    std::vector<FqVec> unit;
    for (size_t j = 0; j < code.stabilizer_dim(); j++) {
        FqVec e(code.stabilizer_dim(), 0);
        e[j] = 1;
        unit.push_back(std::move(e));
    }
    double count = 0;
    for_each_combination(f, unit, code.stabilizer_dim(), [&](const std::vector<Elem> &coeffs, const FqVec &) {
        ErrorElement s = code.stabilizer_element(coeffs);
        WeylAction act(f, s);
        for (size_t x = 0; x < dim; x++) {
            auto [y, exp] = act(x);
            p(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += f.root_of_unity(exp);
        }
        count += 1;
    });
    p /= count;

    double expected_trace = static_cast<double>(dim) / count;
    double idem = (p * p - p).cwiseAbs().maxCoeff();
    double herm = (p - p.adjoint()).cwiseAbs().maxCoeff();
    std::complex<double> tr = p.trace();
    if (idem > kVerifyTolerance || herm > kVerifyTolerance || std::abs(tr - expected_trace) > kVerifyTolerance) {
        throw Error(ErrorKind::InternalCheckFailed, "stabilizer average is not the expected projection");
    }
    return p;
}

std::vector<SympPair> labels_up_to_weight(const Field &field, size_t n, size_t max_weight) {
    std::vector<SympPair> out;
    size_t q = static_cast<size_t>(field.q());
    size_t nonzero = q * q - 1;
    max_weight = std::min(max_weight, n);
    for (size_t w = 0; w <= max_weight; w++) {
        // Supports of size w in lexicographic order.
        std::vector<size_t> support(w);
        for (size_t i = 0; i < w; i++) {
            support[i] = i;
        }
        while (true) {
            std::vector<size_t> vals(w, 1);
            while (true) {
                SympPair pr = SympPair::zero(n);
                for (size_t i = 0; i < w; i++) {
                    pr.a[support[i]] = static_cast<Elem>(vals[i] / q);
                    pr.b[support[i]] = static_cast<Elem>(vals[i] % q);
                }
                out.push_back(std::move(pr));
                size_t i = w;
                while (i > 0 && vals[i - 1] == nonzero) {
                    vals[i - 1] = 1;
                    i--;
                }
                if (i == 0) {
                    break;
                }
                vals[i - 1]++;
            }
            size_t i = w;
            while (i > 0 && support[i - 1] == n - w + (i - 1)) {
                i--;
            }
            if (i == 0) {
                break;
            }
            support[i - 1]++;
            for (size_t k = i; k < w; k++) {
                support[k] = support[k - 1] + 1;
            }
        }
    }
    return out;
}

KLReport check_kl(const StabilizerCode &code, size_t t, const KLOptions &options) {
    const Field &f = code.field();
    std::vector<Codeword> basis = all_codewords(code, options.dense_limit);
    size_t dim = basis.front().state.amplitudes.size();
    size_t kdim = basis.size();

    // Codewords have disjoint supports; owner[x] names the one supported at x.
    std::vector<int> owner(dim, -1);
    std::vector<std::vector<size_t>> support(kdim);
    for (size_t j = 0; j < kdim; j++) {
        const auto &amps = basis[j].state.amplitudes;
        for (size_t x = 0; x < dim; x++) {
            if (amps[x] != 0.0) {
                owner[x] = static_cast<int>(j);
                support[j].push_back(x);
            }
        }
    }

    std::vector<SympPair> labels = labels_up_to_weight(f, code.n(), 2 * t);
    auto check_label = [&](const SympPair &label) -> std::optional<KLFailure> {
        ErrorElement e{PhaseExp{}, label};
        WeylAction act(f, e);
        std::vector<std::complex<double>> m(kdim * kdim, 0.0);
        for (size_t j = 0; j < kdim; j++) {
            const auto &psi_j = basis[j].state.amplitudes;
            for (size_t x : support[j]) {
                auto [y, exp] = act(x);
                int i = owner[y];
                if (i >= 0) {
                    m[static_cast<size_t>(i) * kdim + j] +=
                        std::conj(basis[i].state.amplitudes[y]) * f.root_of_unity(exp) * psi_j[x];
                }
            }
        }
        std::complex<double> lambda = m[0];
        for (size_t i = 0; i < kdim; i++) {
            for (size_t j = 0; j < kdim; j++) {
                std::complex<double> v = m[i * kdim + j];
                bool bad = i == j ? std::abs(v - lambda) > kVerifyTolerance : std::abs(v) > kVerifyTolerance;
                if (bad) {
                    return KLFailure{label, i, j, v};
                }
            }
        }
        return std::nullopt;
    };

    std::atomic<size_t> first_bad{labels.size()};
    std::vector<std::optional<KLFailure>> failures(labels.size());
    unsigned workers = std::max(1u, options.workers);
    auto loop = [&](unsigned w) {
        for (size_t idx = w; idx < labels.size(); idx += workers) {
            if (idx > first_bad.load(std::memory_order_relaxed)) {
                return;
            }
            if (auto fail = check_label(labels[idx])) {
                failures[idx] = std::move(fail);
                size_t cur = first_bad.load();
                while (idx < cur && !first_bad.compare_exchange_weak(cur, idx)) {
                }
                return;
            }
        }
    };
    if (workers == 1) {
        loop(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; w++) {
            threads.emplace_back(loop, w);
        }
        for (auto &th : threads) {
            th.join();
        }
    }

    KLReport report;
    report.t = t;
    size_t bad = first_bad.load();
    if (bad < labels.size()) {
        report.passed = false;
        report.checked = bad + 1;
        report.failure = failures[bad];
    } else {
        report.passed = true;
        report.checked = labels.size();
    }
    return report;
}

void write_codeword_dump(std::ostream &out, const StabilizerCode &code, const Codeword &cw) {
    const Field &f = code.field();
    out << f.p() << ' ' << f.r() << ' ' << code.n() << ' ' << code.k() << ' ' << format_vec(cw.rep) << '\n';
    auto old_precision = out.precision();
    out << std::setprecision(17);
    const auto &amps = cw.state.amplitudes;
    for (size_t x = 0; x < amps.size(); x++) {
        if (amps[x] != 0.0) {
            out << x << ' ' << amps[x].real() << ' ' << amps[x].imag() << '\n';
        }
    }
    out.precision(old_precision);
}

}  // namespace qstab
