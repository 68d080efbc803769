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

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>

namespace mumeb {

/// An exact element of Q/Z: the unit complex number exp(2*pi*i*num/den).
///
/// Always stored reduced, with 0 <= num < den and gcd(num, den) == 1; the
/// zero phase is 0/1.
class Phase {
  public:
    constexpr Phase() = default;

    /// Reduces `num/den` modulo 1. `den` must be positive.
    Phase(std::uint64_t num, std::uint64_t den);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Phase operator+(const Phase &other) const;
    Phase operator-(const Phase &other) const;
    Phase operator-() const;
    Phase &operator+=(const Phase &other) { return *this = *this + other; }

    /// Position on the cycle of d-th roots of unity; requires den | d.
    std::uint64_t steps_of(std::uint64_t d) const;

    std::complex<double> to_complex() const;

    bool operator==(const Phase &) const = default;

  private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &os, const Phase &phase);

}  // namespace mumeb
