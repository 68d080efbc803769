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

#include "polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "mumeb/number_theory.hpp"

namespace mumeb::detail {

void trim(Poly &f) {
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

int degree(const Poly &f) {
    for (std::size_t i = f.size(); i > 0; --i) {
        if (f[i - 1] != 0) {
            return static_cast<int>(i - 1);
        }
    }
    return -1;
}

Poly poly_add(const Poly &f, const Poly &g, std::uint64_t p) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = ((i < f.size() ? f[i] : 0) + (i < g.size() ? g[i] : 0)) % p;
    }
    trim(r);
    return r;
}

Poly poly_sub(const Poly &f, const Poly &g, std::uint64_t p) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t a = i < f.size() ? f[i] : 0;
        std::uint64_t b = i < g.size() ? g[i] : 0;
        r[i] = (a + p - b) % p;
    }
    trim(r);
    return r;
}

Poly poly_mul(const Poly &f, const Poly &g, std::uint64_t p) {
    if (f.empty() || g.empty()) {
        return {};
    }
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < g.size(); ++j) {
            r[i + j] = (r[i + j] + f[i] * g[j]) % p;
        }
    }
    trim(r);
    return r;
}

Poly poly_mod(Poly f, const Poly &g, std::uint64_t p) {
    int dg = degree(g);
    assert(dg >= 0);
    std::uint64_t lead_inv = inverse_mod(g[static_cast<std::size_t>(dg)], p);
    trim(f);
    while (degree(f) >= dg) {
        int df = degree(f);
        std::uint64_t factor = f[static_cast<std::size_t>(df)] * lead_inv % p;
        std::size_t shift = static_cast<std::size_t>(df - dg);
        for (int i = 0; i <= dg; ++i) {
            std::size_t k = shift + static_cast<std::size_t>(i);
            f[k] = (f[k] + p - factor * g[static_cast<std::size_t>(i)] % p) % p;
        }
        trim(f);
    }
    return f;
}

Poly poly_gcd(Poly f, Poly g, std::uint64_t p) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly r = poly_mod(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.empty()) {
        std::uint64_t inv = inverse_mod(f.back(), p);
        for (auto &c : f) {
            c = c * inv % p;
        }
    }
    return f;
}

Poly poly_mulmod(const Poly &f, const Poly &g, const Poly &m, std::uint64_t p) {
    return poly_mod(poly_mul(f, g, p), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly &m, std::uint64_t p) {
    Poly result = poly_mod(Poly{1}, m, p);
    base = poly_mod(std::move(base), m, p);
    while (exp > 0) {
        if (exp & 1) {
            result = poly_mulmod(result, base, m, p);
        }
        base = poly_mulmod(base, base, m, p);
        exp >>= 1;
    }
    return result;
}

bool is_irreducible(const Poly &monic, std::uint64_t p) {
    int n = degree(monic);
    if (n <= 0) {
        return false;
    }
    if (n == 1) {
        return true;
    }
    // Without a root no linear factor exists; for degree <= 3 that settles it.
    bool has_root = false;
    for (std::uint64_t x = 0; x < p && !has_root; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = monic.size(); i > 0; --i) {
            acc = (acc * x + monic[i - 1]) % p;
        }
        has_root = acc == 0;
    }
    if (has_root) {
        return false;
    }
    if (n <= 3) {
        return true;
    }
    // Factor-free test: gcd(f, x^(p^k) - x) == 1 for every k <= n/2.
    const Poly x{0, 1};
    Poly frob = x;
    for (int k = 1; k <= n / 2; ++k) {
        frob = poly_powmod(frob, p, monic, p);
        Poly g = poly_gcd(monic, poly_sub(frob, x, p), p);
        if (degree(g) > 0) {
            return false;
        }
    }
    return true;
}

}  // namespace mumeb::detail
