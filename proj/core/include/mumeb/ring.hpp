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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mumeb/phase.hpp"

namespace mumeb {

enum class ComponentKind { Field, ModRing };

/// One local summand: the field F_{p^a} or the ring Z/p^aZ.
struct ComponentSpec {
    std::uint64_t p = 0;
    std::uint32_t a = 1;
    ComponentKind kind = ComponentKind::Field;

    std::uint64_t size() const;
    bool operator==(const ComponentSpec &) const = default;
};

/// A finite commutative ring given as a direct sum of local components.
///
/// Components are kept in canonical order: ascending by p^a, then by p,
/// with Field before ModRing. Repeated components are allowed.
struct RingSpec {
    std::vector<ComponentSpec> components;

    std::uint64_t d() const;

    /// Sorts `components` into canonical order.
    static RingSpec canonical(std::vector<ComponentSpec> components);

    bool operator==(const RingSpec &) const = default;
};

enum class RingChoice { Fields, Zd };

/// The two rings of order d this project builds families over:
/// Fields gives the direct sum of F_{p^a} over the prime-power factors of d,
/// Zd gives Z_d split into its Z_{p^a} summands.
RingSpec ring_spec_for(std::uint64_t d, RingChoice choice);

/// Every canonical RingSpec with exactly d elements, in a fixed order.
std::vector<RingSpec> enumerate_ring_specs(std::uint64_t d);

std::string describe(const RingSpec &spec);

/// A Field part is the coefficient vector c_0..c_{a-1} over Z_p; a ModRing
/// part is a single residue in [0, p^a).
using Part = std::vector<std::uint64_t>;

struct RingElement {
    std::vector<Part> parts;

    bool operator==(const RingElement &) const = default;
};

std::ostream &operator<<(std::ostream &os, const RingElement &x);

struct Component {
    ComponentSpec spec;
    /// Non-leading coefficients of the monic modulus; empty unless a Field with a > 1.
    std::vector<std::uint64_t> modulus;

    std::uint64_t size() const { return spec.size(); }
};

/// Lexicographically least monic irreducible of degree a over Z_p, ordering
/// candidates by sum_j c_j p^j over the non-leading coefficients. Empty for a == 1.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, std::uint32_t a);

/// Absolute trace F_{p^a} -> Z_p of a Field part.
std::uint64_t trace_component(const Component &comp, const Part &part);

enum class ArithOp { Add, Sub, Mul, Neg };

/// Immutable ring with d elements. Elements are indexed mixed-radix with the
/// first component most significant; within a component Field parts are
/// ordered by sum_j c_j p^j and ModRing parts by value.
class Ring {
  public:
    /// Uses find_irreducible for every Field component.
    explicit Ring(RingSpec spec);

    /// Uses the given moduli (one per component, empty where not needed);
    /// each is checked for irreducibility.
    Ring(RingSpec spec, std::vector<std::vector<std::uint64_t>> moduli);

    const RingSpec &spec() const { return spec_; }
    const std::vector<Component> &components() const { return components_; }
    std::uint64_t size() const { return size_; }

    RingElement zero() const;
    RingElement one() const;
    /// Image of the integer k under Z -> R.
    RingElement from_integer(std::uint64_t k) const;

    RingElement add(const RingElement &x, const RingElement &y) const;
    RingElement sub(const RingElement &x, const RingElement &y) const;
    RingElement mul(const RingElement &x, const RingElement &y) const;
    RingElement neg(const RingElement &x) const;

    /// Throws NotAUnit when any part is not invertible.
    RingElement invert(const RingElement &x) const;
    bool is_unit(const RingElement &x) const;
    bool is_zero(const RingElement &x) const;

    /// Trace character: a Field part contributes T(x_i)/p_i, a ModRing part x_i/p_i^a_i.
    Phase character(const RingElement &x) const;

    std::uint64_t index_of(const RingElement &x) const;
    RingElement element_at(std::uint64_t index) const;

    /// Throws ShapeMismatch if `x` does not belong to this ring.
    void check_shape(const RingElement &x) const;

    bool operator==(const Ring &other) const;

  private:
    void init(std::vector<std::vector<std::uint64_t>> moduli);

    RingSpec spec_;
    std::vector<Component> components_;
    std::uint64_t size_ = 1;
};

/// Validates `spec` (NonPrime, BadSpec) and builds the ring.
Ring make_ring(const RingSpec &spec);

RingElement arith(const Ring &ring, ArithOp op, const RingElement &x,
                  const std::optional<RingElement> &y = std::nullopt);

std::vector<RingElement> enumerate_elements(const Ring &ring);
std::vector<RingElement> list_units(const Ring &ring);
std::uint64_t unit_count(const RingSpec &spec);

/// Exact check that sum_r lambda(a r) == 0 for every a != 0. The histogram of
/// character values over the d-th roots of unity is reduced modulo the d-th
/// cyclotomic polynomial, so no floating point is involved.
bool check_generic(const Ring &ring);

/// Histogram over Z_d of the character values lambda(a r), r in R.
std::vector<std::uint64_t> character_histogram(const Ring &ring, const RingElement &a);

}  // namespace mumeb
