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

#include "mumeb/phase.hpp"

#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mumeb {

Phase::Phase(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        throw std::invalid_argument("Phase: zero denominator");
    }
    num %= den;
    if (num == 0) {
        return;
    }
    std::uint64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Phase Phase::operator+(const Phase &other) const {
    std::uint64_t l = std::lcm(den_, other.den_);
    return Phase(num_ * (l / den_) + other.num_ * (l / other.den_), l);
}

Phase Phase::operator-() const { return is_zero() ? *this : Phase(den_ - num_, den_); }

Phase Phase::operator-(const Phase &other) const { return *this + (-other); }

std::uint64_t Phase::steps_of(std::uint64_t d) const {
    if (d % den_ != 0) {
        throw std::invalid_argument("Phase::steps_of: denominator does not divide d");
    }
    return num_ * (d / den_);
}

std::complex<double> Phase::to_complex() const {
    if (is_zero()) {
        return {1.0, 0.0};
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return std::polar(1.0, angle);
}

std::ostream &operator<<(std::ostream &os, const Phase &phase) {
    return os << phase.num() << '/' << phase.den();
}

}  // namespace mumeb
