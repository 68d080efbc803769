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

#include "mumeb/ring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <tuple>

#include "mumeb/error.hpp"
#include "mumeb/number_theory.hpp"
#include "polynomial.hpp"

namespace mumeb {

namespace {

auto order_key(const ComponentSpec &c) { return std::make_tuple(c.size(), c.p, static_cast<int>(c.kind)); }

bool is_polynomial_part(const Component &c) { return c.spec.kind == ComponentKind::Field && c.spec.a > 1; }

std::size_t part_length(const Component &c) { return is_polynomial_part(c) ? c.spec.a : 1; }

detail::Poly full_modulus(const Component &c) {
    detail::Poly m = c.modulus;
    m.push_back(1);
    return m;
}

detail::Poly to_poly(const Part &part) {
    detail::Poly f = part;
    detail::trim(f);
    return f;
}

Part from_poly(detail::Poly f, std::size_t len) {
    f.resize(len, 0);
    return f;
}

Part part_add(const Component &c, const Part &x, const Part &y) {
    Part r(x.size());
    std::uint64_t m = is_polynomial_part(c) ? c.spec.p : c.size();
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = (x[i] + y[i]) % m;
    }
    return r;
}

Part part_neg(const Component &c, const Part &x) {
    Part r(x.size());
    std::uint64_t m = is_polynomial_part(c) ? c.spec.p : c.size();
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = (m - x[i]) % m;
    }
    return r;
}

Part part_mul(const Component &c, const Part &x, const Part &y) {
    if (!is_polynomial_part(c)) {
        return {x[0] * y[0] % c.size()};
    }
    const std::uint64_t p = c.spec.p;
    return from_poly(detail::poly_mulmod(to_poly(x), to_poly(y), full_modulus(c), p), c.spec.a);
}

bool part_is_unit(const Component &c, const Part &x) {
    if (is_polynomial_part(c)) {
        return std::any_of(x.begin(), x.end(), [](std::uint64_t v) { return v != 0; });
    }
    return x[0] % c.spec.p != 0;
}

std::optional<Part> part_invert(const Component &c, const Part &x) {
    if (!part_is_unit(c, x)) {
        return std::nullopt;
    }
    if (!is_polynomial_part(c)) {
        return Part{inverse_mod(x[0], c.size())};
    }
    // x^(q-2) in F_q.
    return from_poly(detail::poly_powmod(to_poly(x), c.size() - 2, full_modulus(c), c.spec.p), c.spec.a);
}

std::uint64_t part_index(const Component &c, const Part &x) {
    if (!is_polynomial_part(c)) {
        return x[0];
    }
    std::uint64_t idx = 0;
    for (std::size_t j = x.size(); j > 0; --j) {
        idx = idx * c.spec.p + x[j - 1];
    }
    return idx;
}

Part part_at(const Component &c, std::uint64_t idx) {
    if (!is_polynomial_part(c)) {
        return {idx};
    }
    Part x(c.spec.a);
    for (auto &coef : x) {
        coef = idx % c.spec.p;
        idx /= c.spec.p;
    }
    return x;
}

void validate_spec(const RingSpec &spec) {
    if (spec.components.empty()) {
        throw Error(ErrorKind::BadSpec, "ring has no components");
    }
    for (const auto &c : spec.components) {
        if (!is_prime(c.p)) {
            throw Error(ErrorKind::NonPrime, std::to_string(c.p) + " is not prime");
        }
        if (c.a < 1) {
            throw Error(ErrorKind::BadSpec, "component exponent must be at least 1");
        }
    }
    for (std::size_t i = 1; i < spec.components.size(); ++i) {
        if (order_key(spec.components[i]) < order_key(spec.components[i - 1])) {
            throw Error(ErrorKind::BadSpec, "components are not in canonical order: " + describe(spec));
        }
    }
}

}  // namespace

std::uint64_t ComponentSpec::size() const { return ipow(p, a); }

std::uint64_t RingSpec::d() const {
    std::uint64_t d = 1;
    for (const auto &c : components) {
        d *= c.size();
    }
    return d;
}

RingSpec RingSpec::canonical(std::vector<ComponentSpec> components) {
    std::stable_sort(components.begin(), components.end(),
                     [](const ComponentSpec &x, const ComponentSpec &y) { return order_key(x) < order_key(y); });
    return RingSpec{std::move(components)};
}

RingSpec ring_spec_for(std::uint64_t d, RingChoice choice) {
    if (d < 2) {
        throw Error(ErrorKind::BadSpec, "d must be at least 2");
    }
    std::vector<ComponentSpec> comps;
    for (const auto &pp : factorize(d)) {
        comps.push_back({pp.p, pp.a, choice == RingChoice::Fields ? ComponentKind::Field : ComponentKind::ModRing});
    }
    return RingSpec::canonical(std::move(comps));
}

std::vector<RingSpec> enumerate_ring_specs(std::uint64_t d) {
    std::vector<ComponentSpec> candidates;
    for (std::uint64_t q = 2; q <= d; ++q) {
        if (d % q != 0) {
            continue;
        }
        auto f = factorize(q);
        if (f.size() != 1) {
            continue;
        }
        candidates.push_back({f[0].p, f[0].a, ComponentKind::Field});
        if (f[0].a > 1) {
            candidates.push_back({f[0].p, f[0].a, ComponentKind::ModRing});
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const ComponentSpec &x, const ComponentSpec &y) { return order_key(x) < order_key(y); });

    std::vector<RingSpec> out;
    std::vector<ComponentSpec> current;
    auto recurse = [&](auto &&self, std::size_t first, std::uint64_t remaining) -> void {
        if (remaining == 1) {
            out.push_back(RingSpec{current});
            return;
        }
        for (std::size_t i = first; i < candidates.size(); ++i) {
            if (remaining % candidates[i].size() != 0) {
                continue;
            }
            current.push_back(candidates[i]);
            self(self, i, remaining / candidates[i].size());
            current.pop_back();
        }
    };
    if (d >= 2) {
        recurse(recurse, 0, d);
    }
    return out;
}

std::string describe(const RingSpec &spec) {
    std::ostringstream os;
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const auto &c = spec.components[i];
        os << (i ? " + " : "") << (c.kind == ComponentKind::Field ? "F_" : "Z_") << c.size();
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const RingElement &x) {
    os << '(';
    for (std::size_t i = 0; i < x.parts.size(); ++i) {
        os << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < x.parts[i].size(); ++j) {
            os << (j ? " " : "") << x.parts[i][j];
        }
        os << ']';
    }
    return os << ')';
}

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, std::uint32_t a) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    }
    if (a < 1) {
        throw Error(ErrorKind::BadSpec, "degree must be at least 1");
    }
    if (a == 1) {
        return {};
    }
    const std::uint64_t count = ipow(p, a);
    for (std::uint64_t code = 0; code < count; ++code) {
        detail::Poly f(a + 1, 0);
        std::uint64_t rest = code;
        for (std::uint32_t j = 0; j < a; ++j) {
            f[j] = rest % p;
            rest /= p;
        }
        f[a] = 1;
        if (detail::is_irreducible(f, p)) {
            f.pop_back();
            return f;
        }
    }
    throw Error(ErrorKind::BadSpec, "no irreducible polynomial found");  // unreachable for prime p
}

std::uint64_t trace_component(const Component &comp, const Part &part) {
    if (comp.spec.kind != ComponentKind::Field) {
        throw Error(ErrorKind::ShapeMismatch, "trace is defined for field components only");
    }
    if (!is_polynomial_part(comp)) {
        return part[0];
    }
    const std::uint64_t p = comp.spec.p;
    const detail::Poly m = full_modulus(comp);
    detail::Poly y = to_poly(part);
    detail::Poly sum;
    for (std::uint32_t k = 0; k < comp.spec.a; ++k) {
        sum = detail::poly_add(sum, y, p);
        y = detail::poly_powmod(y, p, m, p);
    }
    // The trace lies in the prime subfield, so only the constant term survives.
    return sum.empty() ? 0 : sum[0];
}

Ring::Ring(RingSpec spec) : spec_(std::move(spec)) {
    validate_spec(spec_);
    std::vector<std::vector<std::uint64_t>> moduli;
    for (const auto &c : spec_.components) {
        moduli.push_back(c.kind == ComponentKind::Field ? find_irreducible(c.p, c.a) : std::vector<std::uint64_t>{});
    }
    init(std::move(moduli));
}

Ring::Ring(RingSpec spec, std::vector<std::vector<std::uint64_t>> moduli) : spec_(std::move(spec)) {
    validate_spec(spec_);
    if (moduli.size() != spec_.components.size()) {
        throw Error(ErrorKind::BadSpec, "one modulus entry is required per component");
    }
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        const auto &c = spec_.components[i];
        const bool needs = c.kind == ComponentKind::Field && c.a > 1;
        if (!needs) {
            if (!moduli[i].empty()) {
                throw Error(ErrorKind::BadSpec, "unexpected modulus for component " + std::to_string(i));
            }
            continue;
        }
        if (moduli[i].size() != c.a || std::any_of(moduli[i].begin(), moduli[i].end(),
                                                    [&](std::uint64_t v) { return v >= c.p; })) {
            throw Error(ErrorKind::BadSpec, "malformed modulus for component " + std::to_string(i));
        }
        detail::Poly f = moduli[i];
        f.push_back(1);
        if (!detail::is_irreducible(f, c.p)) {
            throw Error(ErrorKind::BadSpec, "modulus for component " + std::to_string(i) + " is reducible");
        }
    }
    init(std::move(moduli));
}

void Ring::init(std::vector<std::vector<std::uint64_t>> moduli) {
    components_.clear();
    size_ = 1;
    for (std::size_t i = 0; i < spec_.components.size(); ++i) {
        components_.push_back(Component{spec_.components[i], std::move(moduli[i])});
        size_ *= spec_.components[i].size();
    }
}

bool Ring::operator==(const Ring &other) const {
    if (!(spec_ == other.spec_)) {
        return false;
    }
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].modulus != other.components_[i].modulus) {
            return false;
        }
    }
    return true;
}

void Ring::check_shape(const RingElement &x) const {
    if (x.parts.size() != components_.size()) {
        throw Error(ErrorKind::ShapeMismatch, "element has " + std::to_string(x.parts.size()) + " parts, ring has " +
                                                  std::to_string(components_.size()) + " components");
    }
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto &c = components_[i];
        const auto &part = x.parts[i];
        if (part.size() != part_length(c)) {
            throw Error(ErrorKind::ShapeMismatch, "part " + std::to_string(i) + " has the wrong length");
        }
        const std::uint64_t bound = is_polynomial_part(c) ? c.spec.p : c.size();
        for (std::uint64_t v : part) {
            if (v >= bound) {
                throw Error(ErrorKind::ShapeMismatch, "part " + std::to_string(i) + " is not reduced");
            }
        }
    }
}

RingElement Ring::zero() const {
    RingElement z;
    for (const auto &c : components_) {
        z.parts.emplace_back(part_length(c), 0);
    }
    return z;
}

RingElement Ring::one() const { return from_integer(1); }

RingElement Ring::from_integer(std::uint64_t k) const {
    RingElement x = zero();
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto &c = components_[i];
        x.parts[i][0] = k % (is_polynomial_part(c) ? c.spec.p : c.size());
    }
    return x;
}

RingElement Ring::add(const RingElement &x, const RingElement &y) const {
    check_shape(x);
    check_shape(y);
    RingElement r;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        r.parts.push_back(part_add(components_[i], x.parts[i], y.parts[i]));
    }
    return r;
}

RingElement Ring::neg(const RingElement &x) const {
    check_shape(x);
    RingElement r;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        r.parts.push_back(part_neg(components_[i], x.parts[i]));
    }
    return r;
}

RingElement Ring::sub(const RingElement &x, const RingElement &y) const { return add(x, neg(y)); }

RingElement Ring::mul(const RingElement &x, const RingElement &y) const {
    check_shape(x);
    check_shape(y);
    RingElement r;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        r.parts.push_back(part_mul(components_[i], x.parts[i], y.parts[i]));
    }
    return r;
}

RingElement Ring::invert(const RingElement &x) const {
    check_shape(x);
    RingElement r;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        auto inv = part_invert(components_[i], x.parts[i]);
        if (!inv) {
            std::ostringstream os;
            os << x << " is not invertible (component " << i << ")";
            throw Error(ErrorKind::NotAUnit, os.str());
        }
        r.parts.push_back(std::move(*inv));
    }
    return r;
}

bool Ring::is_unit(const RingElement &x) const {
    check_shape(x);
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (!part_is_unit(components_[i], x.parts[i])) {
            return false;
        }
    }
    return true;
}

bool Ring::is_zero(const RingElement &x) const { return x == zero(); }

Phase Ring::character(const RingElement &x) const {
    check_shape(x);
    Phase total;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto &c = components_[i];
        if (c.spec.kind == ComponentKind::Field) {
            total += Phase(trace_component(c, x.parts[i]), c.spec.p);
        } else {
            total += Phase(x.parts[i][0], c.size());
        }
    }
    return total;
}

std::uint64_t Ring::index_of(const RingElement &x) const {
    check_shape(x);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        idx = idx * components_[i].size() + part_index(components_[i], x.parts[i]);
    }
    return idx;
}

RingElement Ring::element_at(std::uint64_t index) const {
    if (index >= size_) {
        throw Error(ErrorKind::ShapeMismatch, "element index " + std::to_string(index) + " out of range");
    }
    RingElement x;
    x.parts.resize(components_.size());
    for (std::size_t i = components_.size(); i > 0; --i) {
        const auto &c = components_[i - 1];
        x.parts[i - 1] = part_at(c, index % c.size());
        index /= c.size();
    }
    return x;
}

Ring make_ring(const RingSpec &spec) { return Ring(spec); }

RingElement arith(const Ring &ring, ArithOp op, const RingElement &x, const std::optional<RingElement> &y) {
    if (op == ArithOp::Neg) {
        return ring.neg(x);
    }
    if (!y) {
        throw Error(ErrorKind::ShapeMismatch, "binary operation needs a second operand");
    }
    switch (op) {
        case ArithOp::Add:
            return ring.add(x, *y);
        case ArithOp::Sub:
            return ring.sub(x, *y);
        case ArithOp::Mul:
            return ring.mul(x, *y);
        case ArithOp::Neg:
            break;
    }
    return ring.neg(x);
}

std::vector<RingElement> enumerate_elements(const Ring &ring) {
    std::vector<RingElement> out;
    out.reserve(ring.size());
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        out.push_back(ring.element_at(i));
    }
    return out;
}

std::vector<RingElement> list_units(const Ring &ring) {
    std::vector<RingElement> out;
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        RingElement x = ring.element_at(i);
        if (ring.is_unit(x)) {
            out.push_back(std::move(x));
        }
    }
    return out;
}

std::uint64_t unit_count(const RingSpec &spec) {
    std::uint64_t n = 1;
    for (const auto &c : spec.components) {
        n *= c.kind == ComponentKind::Field ? c.size() - 1 : c.size() - c.size() / c.p;
    }
    return n;
}

std::vector<std::uint64_t> character_histogram(const Ring &ring, const RingElement &a) {
    std::vector<std::uint64_t> counts(ring.size(), 0);
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        Phase ph = ring.character(ring.mul(a, ring.element_at(i)));
        ++counts[ph.steps_of(ring.size())];
    }
    return counts;
}

bool check_generic(const Ring &ring) {
    for (std::uint64_t i = 1; i < ring.size(); ++i) {
        auto counts = character_histogram(ring, ring.element_at(i));
        if (!root_of_unity_sum_vanishes(counts)) {
            return false;
        }
    }
    return true;
}

}  // namespace mumeb
