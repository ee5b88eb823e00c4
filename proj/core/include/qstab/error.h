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

#ifndef QSTAB_ERROR_H
#define QSTAB_ERROR_H

#include <stdexcept>
#include <string>

namespace qstab {

enum class ErrorKind {
    NonPrimeP,
    ReducibleModulus,
    MissingModulus,
    FieldTooLarge,
    InvalidInput,
    LengthMismatch,
    DimensionTooSmall,
    NotSymmetric,
    OddDiagonalInCharTwo,
    DimensionLimitExceeded,
    PhaseSplitInvalid,
    NotIsotropic,
    DependentGenerators,
    InconsistentPhases,
    NoPhaseMatrix,
    BudgetExceeded,
    DomainError,
    NotPure,
    DistanceTooSmall,
    IsotropyLost,
    IndexOutOfRange,
    InternalCheckFailed,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace qstab

#endif
