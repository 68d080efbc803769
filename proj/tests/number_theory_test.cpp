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

#include "mumeb/number_theory.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "gtest/gtest.h"
#include "mumeb/phase.hpp"

using namespace mumeb;

TEST(number_theory, factorize) {
    EXPECT_EQ(factorize(360), (std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}}));
    EXPECT_EQ(factorize(27), (std::vector<PrimePower>{{3, 3}}));
    EXPECT_EQ(factorize(97), (std::vector<PrimePower>{{97, 1}}));
    EXPECT_TRUE(factorize(1).empty());
}

TEST(number_theory, primality) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 0; n < 40; ++n) {
        if (is_prime(n)) {
            primes.push_back(n);
        }
    }
    EXPECT_EQ(primes, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}));
    EXPECT_EQ(smallest_prime_factor(35), 5u);
    EXPECT_EQ(smallest_prime_factor(49), 7u);
}

TEST(number_theory, inverse_mod) {
    for (std::uint64_t m : {9u, 25u, 27u, 7u}) {
        for (std::uint64_t a = 1; a < m; ++a) {
            if (gcd_u64(a, m) == 1) {
                EXPECT_EQ(a * inverse_mod(a, m) % m, 1u) << a << " mod " << m;
            }
        }
    }
    EXPECT_THROW(inverse_mod(3, 9), std::invalid_argument);
}

TEST(number_theory, cyclotomic_small) {
    EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(9), (std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 1}));
    // Phi_15 = x^8 - x^7 + x^5 - x^4 + x^3 - x + 1
    EXPECT_EQ(cyclotomic_polynomial(15), (std::vector<std::int64_t>{1, -1, 0, 1, -1, 1, 0, -1, 1}));
}

namespace {

double float_root_sum(const std::vector<std::uint64_t> &counts) {
    std::complex<double> acc(0.0, 0.0);
    const double n = static_cast<double>(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) {
        acc += static_cast<double>(counts[k]) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
    }
    return std::abs(acc);
}

}  // namespace

TEST(number_theory, root_of_unity_sums_agree_with_floating_point) {
    // Every histogram with entries in {0, 1, 2} for n = 6 and n = 10 (sizes
    // kept small so the enumeration stays exhaustive).
    for (std::size_t n : {6u, 10u}) {
        std::vector<std::uint64_t> counts(n, 0);
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) {
            total *= 3;
        }
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t rest = code;
            for (auto &c : counts) {
                c = rest % 3;
                rest /= 3;
            }
            const bool exact = root_of_unity_sum_vanishes(counts);
            const bool numeric = float_root_sum(counts) < 1e-9;
            ASSERT_EQ(exact, numeric) << "n=" << n << " code=" << code;
        }
    }
}

TEST(phase, reduces_modulo_one) {
    EXPECT_EQ(Phase(6, 9), Phase(2, 3));
    EXPECT_EQ(Phase(9, 9), Phase());
    EXPECT_EQ(Phase(0, 7).den(), 1u);
    EXPECT_EQ(Phase(11, 9), Phase(2, 9));
    EXPECT_THROW(Phase(1, 0), std::invalid_argument);
}

TEST(phase, addition_and_negation) {
    EXPECT_EQ(Phase(1, 3) + Phase(1, 5), Phase(8, 15));
    EXPECT_EQ(Phase(2, 3) + Phase(1, 3), Phase());
    EXPECT_EQ(-Phase(1, 4), Phase(3, 4));
    EXPECT_EQ(Phase(1, 6) - Phase(1, 2), Phase(2, 3));
    EXPECT_EQ(Phase(2, 9).steps_of(27), 6u);
    EXPECT_THROW((void)Phase(1, 4).steps_of(6), std::invalid_argument);
}

TEST(phase, complex_value) {
    auto z = Phase(1, 4).to_complex();
    EXPECT_NEAR(z.real(), 0.0, 1e-15);
    EXPECT_NEAR(z.imag(), 1.0, 1e-15);
    EXPECT_EQ(Phase().to_complex(), std::complex<double>(1.0, 0.0));
}
