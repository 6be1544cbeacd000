// Copyright 2026 The glauber-lqfi Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glauber {

enum class ErrorKind {
    InvalidMatrix,
    ConvergenceFailure,
    NotPositiveSemidefinite,
    DegenerateNormalization,
    InvalidParams,
    UnsupportedSize,
    InvalidChannel,
    InvalidState,
    UnestimableParameter,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidMatrix: return "InvalidMatrix";
        case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorKind::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
        case ErrorKind::DegenerateNormalization: return "DegenerateNormalization";
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::UnsupportedSize: return "UnsupportedSize";
        case ErrorKind::InvalidChannel: return "InvalidChannel";
        case ErrorKind::InvalidState: return "InvalidState";
        case ErrorKind::UnestimableParameter: return "UnestimableParameter";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a kind so callers can branch
/// on the category without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace glauber
