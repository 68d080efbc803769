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

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mumeb {

std::uint64_t PrimePower::value() const { return ipow(p, a); }

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> out;
    for (std::uint64_t k = 2; k * k <= n; ++k) {
        if (n % k != 0) {
            continue;
        }
        PrimePower pp{k, 0};
        while (n % k == 0) {
            n /= k;
            ++pp.a;
        }
        out.push_back(pp);
    }
    if (n > 1) {
        out.push_back({n, 1});
    }
    return out;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    if (m == 1) {
        return 0;
    }
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw std::invalid_argument("inverse_mod: argument is not invertible");
    }
    std::int64_t mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    assert(n >= 2);
    for (std::uint64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            return k;
        }
    }
    return n;
}

namespace {

using IntPoly = std::vector<std::int64_t>;

// Quotient of f by the monic g; the remainder goes to `remainder` if given.
IntPoly divide_monic(IntPoly f, const IntPoly &g, IntPoly *remainder) {
    const std::size_t dg = g.size() - 1;
    IntPoly q(f.size() >= g.size() ? f.size() - dg : 1, 0);
    for (std::size_t i = f.size(); i-- > dg;) {
        std::int64_t c = f[i];
        if (c == 0) {
            continue;
        }
        q[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) {
            f[i - dg + j] -= c * g[j];
        }
    }
    if (remainder != nullptr) {
        f.resize(std::min(f.size(), dg));
        *remainder = std::move(f);
    }
    return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n) {
    static std::mutex mu;
    static std::map<std::uint64_t, IntPoly> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(n); it != memo.end()) {
            return it->second;
        }
    }
    assert(n >= 1);
    IntPoly f(n + 1, 0);
    f[0] = -1;
    f[n] = 1;
    for (std::uint64_t e = 1; e < n; ++e) {
        if (n % e == 0) {
            f = divide_monic(std::move(f), cyclotomic_polynomial(e), nullptr);
        }
    }
    while (f.size() > 1 && f.back() == 0) {
        f.pop_back();
    }
    std::lock_guard lock(mu);
    memo.emplace(n, f);
    return f;
}

bool root_of_unity_sum_vanishes(std::span<const std::uint64_t> counts) {
    if (counts.empty()) {
        return true;
    }
    IntPoly h(counts.begin(), counts.end());
    IntPoly remainder;
    divide_monic(std::move(h), cyclotomic_polynomial(counts.size()), &remainder);
    for (std::int64_t c : remainder) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace mumeb
