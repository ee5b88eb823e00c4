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

#ifndef QSTAB_GF_H
#define QSTAB_GF_H

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace qstab {

/// A field element encoded as sum c_i p^i over its power-basis coordinates.
using Elem = uint8_t;

/// Exponent e of omega^e with omega = exp(2 pi i / p). Always in [0, p).
struct PhaseExp {
    uint8_t e = 0;

    bool operator==(const PhaseExp &other) const = default;
};

/// Finite field F_q, q = p^r <= 256, backed by full operation tables.
///
/// Cheap to copy: the tables are shared and immutable, so a Field may be
/// handed to any number of concurrent workers.
class Field {
   public:
    static constexpr int kMaxOrder = 256;

    /// Validates p, r and the modulus (coefficients c_0..c_r, monic) and
    /// builds the tables. The modulus must be omitted when r == 1.
    static Field make(int p, int r = 1, const std::optional<std::vector<int>> &modulus = std::nullopt);

    int p() const {
        return tables_->p;
    }
    int r() const {
        return tables_->r;
    }
    int q() const {
        return tables_->q;
    }
    /// Empty for prime fields.
    const std::vector<int> &modulus() const {
        return tables_->modulus;
    }

    Elem add(Elem a, Elem b) const {
        return tables_->add[idx(a, b)];
    }
    Elem sub(Elem a, Elem b) const {
        return tables_->add[idx(a, tables_->neg[b])];
    }
    Elem neg(Elem a) const {
        return tables_->neg[a];
    }
    Elem mul(Elem a, Elem b) const {
        return tables_->mul[idx(a, b)];
    }
    /// inv(0) is undefined; callers must not ask for it.
    Elem inv(Elem a) const {
        return tables_->inv[a];
    }

    /// Tr(x) = x + x^p + ... + x^{p^{r-1}}, returned as an integer in [0, p).
    int trace(Elem x) const {
        return tables_->trace[x];
    }

    /// The additive character value omega~(x) = omega^{Tr(x)}, as an exponent.
    PhaseExp char_exp(Elem x) const {
        return PhaseExp{static_cast<uint8_t>(tables_->trace[x])};
    }

    /// omega^e as a complex number.
    std::complex<double> root_of_unity(int e) const;

    /// The image of the integer v in the prime subfield.
    Elem from_int(long long v) const;

    bool operator==(const Field &other) const;
    bool operator!=(const Field &other) const {
        return !(*this == other);
    }

   private:
    struct Tables {
        int p = 0;
        int r = 0;
        int q = 0;
        std::vector<int> modulus;
        std::vector<Elem> add;
        std::vector<Elem> mul;
        std::vector<Elem> neg;
        std::vector<Elem> inv;
        std::vector<int> trace;
        std::vector<std::complex<double>> roots;
    };

    size_t idx(Elem a, Elem b) const {
        return static_cast<size_t>(a) * static_cast<size_t>(tables_->q) + b;
    }

    explicit Field(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {
    }

    std::shared_ptr<const Tables> tables_;
};

/// Reduces an integer into the exponent group Z_p.
inline PhaseExp phase_add(const Field &f, PhaseExp x, PhaseExp y) {
    return PhaseExp{static_cast<uint8_t>((x.e + y.e) % f.p())};
}

inline PhaseExp phase_neg(const Field &f, PhaseExp x) {
    return PhaseExp{static_cast<uint8_t>((f.p() - x.e) % f.p())};
}

}  // namespace qstab

#endif
