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

#ifndef QSTAB_PUNCTURE_H
#define QSTAB_PUNCTURE_H

#include "qstab/stabcode.h"

namespace qstab {

struct PunctureResult {
    StabilizerCode code;
    /// Distance report of the input code, used to establish purity.
    CodeReport input;
    /// False when no phase assignment makes the new stabilizer scalar-free
    /// (characteristic 2 with a generator whose a.b has nonzero trace) or the
    /// field is not prime.
    bool phases_available;
};

/// [[n, k, d]] pure -> [[n-1, k+1, >= d-1]]: deletes `coord` from both halves of
/// every dual basis vector and takes the symplectic complement of the result
/// as the new stabilizer. Returned codes are generic with zero generator phases.
PunctureResult puncture(const StabilizerCode &code, size_t coord, const DistanceOptions &verify = {});

}  // namespace qstab

#endif
