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

#include "qstab/puncture.h"

#include "qstab/error.h"

namespace qstab {

PunctureResult puncture(const StabilizerCode &code, size_t coord, const DistanceOptions &verify) {
    size_t n = code.n();
    if (coord >= n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "coordinate " + std::to_string(coord) + " is outside [0, " + std::to_string(n) + ")");
    }
    DistanceOptions opts = verify;
    opts.mode = DistanceMode::Standard;
    opts.early_exit.reset();
    CodeReport input = min_distance(code, opts);
    if (input.status != DistanceStatus::Exact || !input.pure) {
        throw Error(ErrorKind::NotPure, "only pure codes can be punctured");
    }
    if (input.d < 2) {
        throw Error(ErrorKind::DistanceTooSmall, "puncturing needs pure distance >= 2");
    }

    const Field &f = code.field();
    const DualBasis &dual = code.dual();
    size_t m = n - 1;
    std::vector<FqVec> shortened;
    for (const auto &v : dual.vectors) {
        FqVec w;
        w.reserve(2 * m);
        for (size_t i = 0; i < n; i++) {
            if (i != coord) {
                w.push_back(v[i]);
            }
        }
        for (size_t i = 0; i < n; i++) {
            if (i != coord) {
                w.push_back(v[n + i]);
            }
        }
        shortened.push_back(std::move(w));
    }
    Subspace punctured_dual = Subspace::span(f, 2 * m, shortened);
    if (punctured_dual.dim() != n + code.k()) {
        throw Error(ErrorKind::InternalCheckFailed, "deleting the coordinate collapsed the dual");
    }

    // S' = {v : <v, w> = 0 for all w in the punctured dual}.
    FqMat constraints(f, punctured_dual.dim(), 2 * m);
    for (size_t r = 0; r < punctured_dual.dim(); r++) {
        const auto &w = punctured_dual.basis()[r];
        for (size_t i = 0; i < m; i++) {
            constraints.at(r, i) = w[m + i];
            constraints.at(r, m + i) = f.neg(w[i]);
        }
    }
    Subspace stab = kernel(constraints);
    std::vector<SympPair> gens;
    for (const auto &v : stab.basis()) {
        gens.push_back(SympPair::from_concat(v));
    }
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (symp_form(f, gens[i], gens[j]) != 0) {
                throw Error(ErrorKind::IsotropyLost, "punctured stabilizer is not isotropic");
            }
        }
        if (!punctured_dual.contains(gens[i].concat())) {
            throw Error(ErrorKind::IsotropyLost, "punctured stabilizer is not contained in the punctured dual");
        }
    }

    bool phases_ok = f.r() == 1;
    if (phases_ok && f.p() == 2) {
        for (const auto &g : gens) {
            phases_ok &= f.trace(dot(f, g.a, g.b)) == 0;
        }
    }
    std::optional<std::vector<PhaseExp>> phases;
    if (phases_ok) {
        phases = std::vector<PhaseExp>(gens.size(), PhaseExp{});
    }
    StabilizerCode out = StabilizerCode::generic(f, m, std::move(gens), std::move(phases));
    if (out.k() != code.k() + 1) {
        throw Error(ErrorKind::InternalCheckFailed, "punctured code does not have k + 1 logical qudits");
    }
    return PunctureResult{std::move(out), std::move(input), phases_ok};
}

}  // namespace qstab
