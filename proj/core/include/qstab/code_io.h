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

#ifndef QSTAB_CODE_IO_H
#define QSTAB_CODE_IO_H

#include <iosfwd>
#include <optional>
#include <string>

#include "qstab/stabcode.h"

namespace qstab {

/// A parsed ".code.json" descriptor.
struct CodeDescriptor {
    StabilizerCode code;
    /// "circulant", "matrixL" or "generic".
    std::string construction;
    /// The `k` field, when the descriptor declares one.
    std::optional<size_t> declared_k;
};

/// Parses and validates a descriptor:
///   field {p, r, modulus?}, n, construction, then first_row | (L, D?) |
///   (pairs [{a, b}], phases?), and optional C ("zero-sum" or a basis list).
CodeDescriptor read_code_descriptor(std::istream &in);
CodeDescriptor read_code_descriptor_file(const std::string &path);

/// Writes a normalized descriptor: "matrixL" with L, D and C for codes that
/// carry a phase matrix, "generic" with pairs and phases otherwise.
void write_code_descriptor(std::ostream &out, const StabilizerCode &code);
void write_code_descriptor_file(const std::string &path, const StabilizerCode &code);

/// `key=value` lines in the fixed order n, k, d, pure, witness_a, witness_b,
/// elapsed_ms, enumerated, status, trivial_stabilizer.
void write_report(std::ostream &out, const CodeReport &report);

}  // namespace qstab

#endif
