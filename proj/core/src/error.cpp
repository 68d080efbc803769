// Copyright 2026 The mumeb Authors
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

#include "mumeb/error.hpp"

namespace mumeb {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPrime:
            return "NonPrime";
        case ErrorKind::BadSpec:
            return "BadSpec";
        case ErrorKind::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorKind::NotAUnit:
            return "NotAUnit";
        case ErrorKind::NonGenericCharacter:
            return "NonGenericCharacter";
        case ErrorKind::TheoremNotApplicable:
            return "TheoremNotApplicable";
        case ErrorKind::TooSmall:
            return "TooSmall";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::NodeLimitExceeded:
            return "NodeLimitExceeded";
        case ErrorKind::InvalidSet:
            return "InvalidSet";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

}  // namespace mumeb
