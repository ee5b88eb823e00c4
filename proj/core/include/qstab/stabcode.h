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

#ifndef QSTAB_STABCODE_H
#define QSTAB_STABCODE_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qstab/gf.h"
#include "qstab/pauli.h"
#include "qstab/veclin.h"

namespace qstab {

/// Basis of the symplectic dual S^perp ordered as [generators of S | 2k completion vectors].
///
/// A dual element with coefficient vector c lies in S iff the completion
/// coefficients c[stabilizer_count..] are all zero.
struct DualBasis {
    std::vector<FqVec> vectors;  // each of length 2n, laid out (a | b)
    size_t stabilizer_count = 0;

    size_t dim() const {
        return vectors.size();
    }
};

/// Stabilizer group S given by independent, pairwise commuting generator labels.
///
/// Two flavours exist. Codes built from (L, D, C) carry the phase matrix D,
/// so every element of S is omega~(a^T D a) U_a V_{La} for a in C. Generic
/// codes carry only the generator labels and, over prime fields, an optional
/// phase per generator that is extended to S through the Weyl cocycle.
class StabilizerCode {
   public:
    /// Generators (c_i, L c_i) for the basis vectors c_i of C; requires L = D + D^T.
    static StabilizerCode from_LD(const FqMat &l, const FqMat &d, const Subspace &c, bool c_is_zero_sum = false);
    /// Same, with D = split_upper(L).
    static StabilizerCode from_L(const FqMat &l, const Subspace &c, bool c_is_zero_sum = false);
    /// Phases may be omitted; when present they must match the generator count
    /// and the field must be prime.
    static StabilizerCode generic(
        const Field &field, size_t n, std::vector<SympPair> pairs, std::optional<std::vector<PhaseExp>> phases);

    const Field &field() const {
        return field_;
    }
    size_t n() const {
        return n_;
    }
    /// Logical dimension exponent k = n - dim S.
    size_t k() const {
        return n_ - generators_.size();
    }
    size_t stabilizer_dim() const {
        return generators_.size();
    }
    const std::vector<SympPair> &generators() const {
        return generators_;
    }

    bool has_phase_matrix() const {
        return d_.has_value();
    }
    /// Requires has_phase_matrix().
    const FqMat &L() const;
    const FqMat &D() const;
    const Subspace &C() const;
    bool c_is_zero_sum() const {
        return zero_sum_;
    }

    /// True when every element of S has a well-defined phase.
    bool has_phases() const {
        return d_.has_value() || phases_.has_value();
    }
    /// Phase of each generator (derived from D for (L, D, C) codes).
    std::vector<PhaseExp> generator_phases() const;

    /// The element of S with the given coefficients over the generators.
    ErrorElement stabilizer_element(std::span<const Elem> coeffs) const;

    const DualBasis &dual() const {
        return dual_;
    }

   private:
    StabilizerCode(Field field, size_t n);
    void finish();

    Field field_;
    size_t n_;
    std::vector<SympPair> generators_;
    std::optional<FqMat> l_;
    std::optional<FqMat> d_;
    std::optional<Subspace> c_;
    bool zero_sum_ = false;
    std::optional<std::vector<PhaseExp>> phases_;
    DualBasis dual_;
};

/// Kernel of the constraint matrix with rows (d, -c), completed so the
/// generators of S come first.
DualBasis symplectic_dual(const Field &field, size_t n, const std::vector<SympPair> &generators);

inline const DualBasis &symplectic_dual(const StabilizerCode &code) {
    return code.dual();
}

struct CodeParams {
    size_t n;
    size_t k;

    bool operator==(const CodeParams &other) const = default;
};

inline CodeParams params(const StabilizerCode &code) {
    return {code.n(), code.k()};
}

enum class DistanceMode { Standard, Pure };

enum class DistanceStatus {
    Exact,
    /// Stopped at an element of weight <= early_exit; d is only an upper bound.
    EarlyExit,
    /// Standard mode with k = 0: S^perp \ S is empty, d is the sentinel n + 1.
    Undefined,
};

inline constexpr uint64_t kDefaultEnumerationBudget = uint64_t{1} << 26;

struct DistanceOptions {
    DistanceMode mode = DistanceMode::Standard;
    std::optional<size_t> early_exit;
    unsigned workers = 1;
    uint64_t budget = kDefaultEnumerationBudget;
};

struct CodeReport {
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
    /// Every nonzero element of S has weight >= the distance over S^perp \ S.
    bool pure = false;
    SympPair witness;
    DistanceStatus status = DistanceStatus::Exact;
    /// S is {0}: the code is the whole space.
    bool trivial_stabilizer = false;
    /// Canonical-order elements visited (up to and including the early-exit witness).
    uint64_t enumerated = 0;
    double elapsed_ms = 0;
};

/// Exact minimum distance by enumerating every coefficient tuple over the dual basis.
///
/// Over F_2 the walk follows a reflected Gray code so each step XORs one packed
/// basis vector. Elements are visited in a canonical order that does not depend
/// on the worker count; ties resolve to the first minimizer in that order.
CodeReport min_distance(const StabilizerCode &code, const DistanceOptions &options = {});

const char *distance_status_name(DistanceStatus status);

}  // namespace qstab

#endif
