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

#include <array>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <string>
#include <system_error>

namespace glauber {

namespace detail {

inline std::string to_chars_string(double x, std::chars_format fmt, int precision) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, fmt, precision);
    std::string out(buf.data(), res.ptr);
    // A value that rounds to zero prints without a sign.
    if (!out.empty() && out.front() == '-' && out.find_first_not_of("-0.e+") == std::string::npos) {
        out.erase(0, 1);
    }
    return out;
}

}  // namespace detail

/// Twelve digits after the decimal point ("0.500000000000").
inline std::string format_fixed12(double x) { return detail::to_chars_string(x, std::chars_format::fixed, 12); }

/// Twelve significant digits, locale independent. Positional notation for
/// decimal exponents in [-5, 12), scientific otherwise.
inline std::string format_sig12(double x) {
    if (x == 0.0) {
        return "0.00000000000";
    }
    const std::string sci = detail::to_chars_string(x, std::chars_format::scientific, 11);
    const auto e_pos = sci.find('e');
    const int exponent = std::atoi(sci.c_str() + e_pos + 1);
    if (exponent >= -5 && exponent < 12) {
        return detail::to_chars_string(x, std::chars_format::fixed, 11 - exponent);
    }
    return sci;
}

inline std::string format_sig12_or_undefined(const std::optional<double> &x) {
    return x ? format_sig12(*x) : std::string("undefined");
}

}  // namespace glauber
