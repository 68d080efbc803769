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

// Dense polynomials over Z_p, coefficients stored lowest degree first.
// Internal to the ring implementation.

#include <cstdint>
#include <vector>

namespace mumeb::detail {

using Poly = std::vector<std::uint64_t>;

void trim(Poly &f);
int degree(const Poly &f);  // -1 for the zero polynomial

Poly poly_add(const Poly &f, const Poly &g, std::uint64_t p);
Poly poly_sub(const Poly &f, const Poly &g, std::uint64_t p);
Poly poly_mul(const Poly &f, const Poly &g, std::uint64_t p);
Poly poly_mod(Poly f, const Poly &g, std::uint64_t p);  // g nonzero
Poly poly_gcd(Poly f, Poly g, std::uint64_t p);
Poly poly_mulmod(const Poly &f, const Poly &g, const Poly &m, std::uint64_t p);
Poly poly_powmod(Poly base, std::uint64_t exp, const Poly &m, std::uint64_t p);

/// `monic` is the full coefficient list including the leading 1.
bool is_irreducible(const Poly &monic, std::uint64_t p);

}  // namespace mumeb::detail
