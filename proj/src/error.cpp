// Copyright 2026 The geomur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geomur/error.hpp"

namespace geomur {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotHermitian:
        return "NotHermitian";
    case ErrorCode::NotPSD:
        return "NotPSD";
    case ErrorCode::NoConvergence:
        return "NoConvergence";
    case ErrorCode::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange:
        return "IndexOutOfRange";
    case ErrorCode::DomainError:
        return "DomainError";
    case ErrorCode::InvalidState:
        return "InvalidState";
    case ErrorCode::ParseError:
        return "ParseError";
    case ErrorCode::IoError:
        return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

} // namespace geomur
