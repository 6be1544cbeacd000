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

#include <cmath>
#include <optional>

namespace glauber {

inline constexpr double kDenominatorGuard = 1e-12;
inline constexpr double kRadicandGuard = 1e-12;

/// A real number that may be undefined because a denominator vanished or a
/// square root received a negative argument. Undefined propagates through
/// arithmetic.
class Guarded {
   public:
    Guarded() = default;
    Guarded(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static Guarded undefined() { return Guarded(std::nullopt); }

    bool defined() const noexcept { return value_.has_value(); }
    double value() const { return *value_; }
    std::optional<double> optional() const { return value_; }

    friend Guarded operator+(Guarded a, Guarded b) { return combine(a, b, [](double x, double y) { return x + y; }); }
    friend Guarded operator-(Guarded a, Guarded b) { return combine(a, b, [](double x, double y) { return x - y; }); }
    friend Guarded operator*(Guarded a, Guarded b) { return combine(a, b, [](double x, double y) { return x * y; }); }
    friend Guarded operator-(Guarded a) { return a.defined() ? Guarded(-a.value()) : a; }

    /// |den| < 1e-12 makes the quotient undefined.
    friend Guarded operator/(Guarded num, Guarded den) {
        if (!num.defined() || !den.defined() || std::abs(den.value()) < kDenominatorGuard) {
            return undefined();
        }
        return num.value() / den.value();
    }

   private:
    explicit Guarded(std::optional<double> v) : value_(v) {}

    template <typename Op>
    static Guarded combine(Guarded a, Guarded b, Op op) {
        if (!a.defined() || !b.defined()) {
            return undefined();
        }
        return op(a.value(), b.value());
    }

    std::optional<double> value_;
};

/// Square root with radicands in [-1e-12, 0) clamped to zero.
inline Guarded guarded_sqrt(Guarded x) {
    if (!x.defined() || x.value() < -kRadicandGuard) {
        return Guarded::undefined();
    }
    return std::sqrt(std::max(0.0, x.value()));
}

inline Guarded guarded_max(Guarded a, Guarded b) {
    if (!a.defined() || !b.defined()) {
        return Guarded::undefined();
    }
    return std::max(a.value(), b.value());
}

inline Guarded square(Guarded x) { return x * x; }

}  // namespace glauber
