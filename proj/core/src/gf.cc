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

#include "qstab/gf.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qstab/error.h"

namespace qstab {

namespace {

bool is_prime(int v) {
    if (v < 2) {
        return false;
    }
    for (int d = 2; d * d <= v; d++) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

using Poly = std::vector<int>;

// Remainder of num modulo den over F_p; den must have an invertible leading coefficient.
Poly poly_mod(Poly num, const Poly &den, int p) {
    int dd = static_cast<int>(den.size()) - 1;
    int lead_inv = 1;
    while ((lead_inv * den.back()) % p != 1) {
        lead_inv++;
    }
    for (int i = static_cast<int>(num.size()) - 1; i >= dd; i--) {
        int c = (num[i] * lead_inv) % p;
        if (c == 0) {
            continue;
        }
        for (int j = 0; j <= dd; j++) {
            num[i - dd + j] = ((num[i - dd + j] - c * den[j]) % p + p) % p;
        }
    }
    num.resize(dd);
    return num;
}

std::vector<int> to_coords(int x, int p, int r) {
    std::vector<int> c(r);
    for (int i = 0; i < r; i++) {
        c[i] = x % p;
        x /= p;
    }
    return c;
}

int from_coords(const std::vector<int> &c, int p) {
    int x = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; i--) {
        x = x * p + c[i];
    }
    return x;
}

// Exhaustive trial division by every monic polynomial of degree 1..r/2.
bool is_irreducible(const Poly &modulus, int p) {
    int r = static_cast<int>(modulus.size()) - 1;
    for (int deg = 1; deg <= r / 2; deg++) {
        int count = 1;
        for (int i = 0; i < deg; i++) {
            count *= p;
        }
        for (int low = 0; low < count; low++) {
            Poly div = to_coords(low, p, deg);
            div.push_back(1);
            Poly rem = poly_mod(modulus, div, p);
            bool zero = true;
            for (int c : rem) {
                zero &= c == 0;
            }
            if (zero) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

Field Field::make(int p, int r, const std::optional<std::vector<int>> &modulus) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
    }
    if (r < 1) {
        throw Error(ErrorKind::InvalidInput, "extension degree must be >= 1");
    }
    long long q = 1;
    for (int i = 0; i < r; i++) {
        q *= p;
        if (q > kMaxOrder) {
            throw Error(ErrorKind::FieldTooLarge, "field order exceeds 256");
        }
    }
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->r = r;
    t->q = static_cast<int>(q);
    if (r == 1) {
        if (modulus.has_value() && !modulus->empty()) {
            throw Error(ErrorKind::InvalidInput, "a prime field takes no modulus");
        }
    } else {
        if (!modulus.has_value() || modulus->empty()) {
            throw Error(ErrorKind::MissingModulus, "extension fields need a modulus");
        }
        const auto &m = *modulus;
        if (static_cast<int>(m.size()) != r + 1) {
            throw Error(ErrorKind::InvalidInput, "modulus must list r+1 coefficients c_0..c_r");
        }
        for (int c : m) {
            if (c < 0 || c >= p) {
                throw Error(ErrorKind::InvalidInput, "modulus coefficient out of range");
            }
        }
        if (m.back() != 1) {
            throw Error(ErrorKind::InvalidInput, "modulus must be monic");
        }
        if (!is_irreducible(m, p)) {
            throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
        }
        t->modulus = m;
    }

    int qi = t->q;
    t->add.resize(static_cast<size_t>(qi) * qi);
    t->mul.resize(static_cast<size_t>(qi) * qi);
    t->neg.resize(qi);
    t->inv.assign(qi, 0);
    t->trace.resize(qi);
    std::vector<std::vector<int>> coords(qi);
    for (int x = 0; x < qi; x++) {
        coords[x] = to_coords(x, p, r);
    }
    for (int a = 0; a < qi; a++) {
        std::vector<int> n(r);
        for (int i = 0; i < r; i++) {
            n[i] = (p - coords[a][i]) % p;
        }
        t->neg[a] = static_cast<Elem>(from_coords(n, p));
        for (int b = 0; b < qi; b++) {
            std::vector<int> s(r);
            for (int i = 0; i < r; i++) {
                s[i] = (coords[a][i] + coords[b][i]) % p;
            }
            t->add[static_cast<size_t>(a) * qi + b] = static_cast<Elem>(from_coords(s, p));
            Poly prod(2 * r - 1, 0);
            for (int i = 0; i < r; i++) {
                for (int j = 0; j < r; j++) {
                    prod[i + j] = (prod[i + j] + coords[a][i] * coords[b][j]) % p;
                }
            }
            Poly red = r == 1 ? prod : poly_mod(prod, t->modulus, p);
            t->mul[static_cast<size_t>(a) * qi + b] = static_cast<Elem>(from_coords(red, p));
        }
    }
    for (int a = 1; a < qi; a++) {
        for (int b = 1; b < qi; b++) {
            if (t->mul[static_cast<size_t>(a) * qi + b] == 1) {
                t->inv[a] = static_cast<Elem>(b);
                break;
            }
        }
    }
    // Tr(x) lands in the prime subfield, whose elements are encoded as 0..p-1.
    for (int x = 0; x < qi; x++) {
        int acc = 0;
        int pw = x;
        for (int i = 0; i < r; i++) {
            acc = t->add[static_cast<size_t>(acc) * qi + pw];
            int next = 1;
            for (int j = 0; j < p; j++) {
                next = t->mul[static_cast<size_t>(next) * qi + pw];
            }
            pw = next;
        }
        if (acc >= p) {
            throw Error(ErrorKind::InternalCheckFailed, "trace left the prime subfield");
        }
        t->trace[x] = acc;
    }
    t->roots.resize(p);
    for (int e = 0; e < p; e++) {
        double angle = 2.0 * std::numbers::pi * e / p;
        t->roots[e] = {std::cos(angle), std::sin(angle)};
    }
    if (p == 2) {
        t->roots[1] = {-1.0, 0.0};
    }
    return Field(std::move(t));
}

std::complex<double> Field::root_of_unity(int e) const {
    int p = tables_->p;
    return tables_->roots[((e % p) + p) % p];
}

Elem Field::from_int(long long v) const {
    long long p = tables_->p;
    return static_cast<Elem>(((v % p) + p) % p);
}

bool Field::operator==(const Field &other) const {
    if (tables_ == other.tables_) {
        return true;
    }
    return tables_->p == other.tables_->p && tables_->r == other.tables_->r &&
           tables_->modulus == other.tables_->modulus;
}

}  // namespace qstab
