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

#include <cstdint>
#include <span>
#include <vector>

namespace mumeb {

struct PrimePower {
    std::uint64_t p = 0;
    std::uint32_t a = 0;

    std::uint64_t value() const;
    bool operator==(const PrimePower &) const = default;
};

bool is_prime(std::uint64_t n);

/// Prime-power factorization by trial division, ordered by prime.
std::vector<PrimePower> factorize(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Inverse of `a` modulo `m`; requires gcd(a, m) == 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

std::uint64_t smallest_prime_factor(std::uint64_t n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n);

/// Exact test that sum_k counts[k] * exp(2*pi*i*k/n) == 0, where n = counts.size().
/// The sum vanishes iff the n-th cyclotomic polynomial divides sum_k counts[k] x^k.
bool root_of_unity_sum_vanishes(std::span<const std::uint64_t> counts);

}  // namespace mumeb
