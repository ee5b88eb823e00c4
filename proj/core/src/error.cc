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

#include "qstab/error.h"

namespace qstab {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPrimeP:
            return "NonPrimeP";
        case ErrorKind::ReducibleModulus:
            return "ReducibleModulus";
        case ErrorKind::MissingModulus:
            return "MissingModulus";
        case ErrorKind::FieldTooLarge:
            return "FieldTooLarge";
        case ErrorKind::InvalidInput:
            return "InvalidInput";
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::DimensionTooSmall:
            return "DimensionTooSmall";
        case ErrorKind::NotSymmetric:
            return "NotSymmetric";
        case ErrorKind::OddDiagonalInCharTwo:
            return "OddDiagonalInCharTwo";
        case ErrorKind::DimensionLimitExceeded:
            return "DimensionLimitExceeded";
        case ErrorKind::PhaseSplitInvalid:
            return "PhaseSplitInvalid";
        case ErrorKind::NotIsotropic:
            return "NotIsotropic";
        case ErrorKind::DependentGenerators:
            return "DependentGenerators";
        case ErrorKind::InconsistentPhases:
            return "InconsistentPhases";
        case ErrorKind::NoPhaseMatrix:
            return "NoPhaseMatrix";
        case ErrorKind::BudgetExceeded:
            return "BudgetExceeded";
        case ErrorKind::DomainError:
            return "DomainError";
        case ErrorKind::NotPure:
            return "NotPure";
        case ErrorKind::DistanceTooSmall:
            return "DistanceTooSmall";
        case ErrorKind::IsotropyLost:
            return "IsotropyLost";
        case ErrorKind::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorKind::InternalCheckFailed:
            return "InternalCheckFailed";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace qstab
