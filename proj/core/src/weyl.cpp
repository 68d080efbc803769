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

#include "mumeb/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "mumeb/error.hpp"
#include "mumeb/number_theory.hpp"
#include "parallel.hpp"

namespace mumeb {

namespace {

// Index-level addition, multiplication and character tables for one ring.
struct RingTables {
    std::uint64_t d = 0;
    std::vector<std::uint64_t> add;
    std::vector<std::uint64_t> mul;
    std::vector<Phase> chr;
    std::vector<RingElement> elements;

    explicit RingTables(const Ring &ring) : d(ring.size()), elements(enumerate_elements(ring)) {
        add.resize(d * d);
        mul.resize(d * d);
        chr.resize(d);
        for (std::uint64_t i = 0; i < d; ++i) {
            chr[i] = ring.character(elements[i]);
            for (std::uint64_t j = i; j < d; ++j) {
                add[i * d + j] = add[j * d + i] = ring.index_of(ring.add(elements[i], elements[j]));
                mul[i * d + j] = mul[j * d + i] = ring.index_of(ring.mul(elements[i], elements[j]));
            }
        }
    }
};

MEBasis build_basis_from_tables(const RingTables &t, const Ring &ring, const RingElement &b) {
    const std::uint64_t d = t.d;
    const std::uint64_t bi = ring.index_of(b);
    MEBasis basis{b, {}};
    basis.states.reserve(d * d);
    for (std::uint64_t xi = 0; xi < d; ++xi) {
        for (std::uint64_t eta = 0; eta < d; ++eta) {
            SparseState s{d, t.elements[xi], t.elements[eta], {}};
            s.entries.reserve(d);
            for (std::uint64_t r = 0; r < d; ++r) {
                std::uint64_t col = t.mul[bi * d + t.add[r * d + eta]];
                s.entries.push_back({r * d + col, t.chr[t.mul[r * d + xi]]});
            }
            basis.states.push_back(std::move(s));
        }
    }
    return basis;
}

void require_unit(const Ring &ring, const RingElement &b) {
    if (!ring.is_unit(b)) {
        std::ostringstream os;
        os << b << " is not a unit";
        throw Error(ErrorKind::NotAUnit, os.str());
    }
}

}  // namespace

PermUnitary PermUnitary::compose(const PermUnitary &other, const Ring &ring) const {
    PermUnitary out{ring.mul(b, other.b), std::vector<std::uint64_t>(image.size())};
    for (std::size_t r = 0; r < image.size(); ++r) {
        out.image[r] = image[other.image[r]];
    }
    return out;
}

PermUnitary perm_unitary(const Ring &ring, const RingElement &b) {
    require_unit(ring, b);
    PermUnitary u{b, std::vector<std::uint64_t>(ring.size())};
    for (std::uint64_t r = 0; r < ring.size(); ++r) {
        u.image[r] = ring.index_of(ring.mul(b, ring.element_at(r)));
    }
    return u;
}

void SparseState::validate() const {
    if (entries.size() != d) {
        throw Error(ErrorKind::DimensionMismatch,
                    "state has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(d));
    }
    std::vector<bool> row_seen(d, false), col_seen(d, false);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto flat = entries[i].flat;
        if (flat >= d * d || (i > 0 && entries[i - 1].flat >= flat)) {
            throw Error(ErrorKind::DimensionMismatch, "state entries must be strictly ascending and below d^2");
        }
        const auto row = flat / d, col = flat % d;
        if (row_seen[row] || col_seen[col]) {
            throw Error(ErrorKind::DimensionMismatch, "state support is not a permutation");
        }
        row_seen[row] = col_seen[col] = true;
    }
}

SparseState build_state(const Ring &ring, const RingElement &b, const RingElement &xi, const RingElement &eta) {
    require_unit(ring, b);
    const std::uint64_t d = ring.size();
    SparseState s{d, xi, eta, {}};
    for (std::uint64_t i = 0; i < d; ++i) {
        RingElement r = ring.element_at(i);
        std::uint64_t col = ring.index_of(ring.mul(b, ring.add(r, eta)));
        s.entries.push_back({i * d + col, ring.character(ring.mul(r, xi))});
    }
    return s;
}

MEBasis build_basis(const Ring &ring, const RingElement &b) {
    require_unit(ring, b);
    if (!check_generic(ring)) {
        throw Error(ErrorKind::NonGenericCharacter, "character of " + describe(ring.spec()) + " is not generic");
    }
    return build_basis_from_tables(RingTables(ring), ring, b);
}

SetCheck validate_set_condition(const Ring &ring, const std::vector<RingElement> &set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        ring.check_shape(set[i]);
        if (!ring.is_unit(set[i])) {
            std::ostringstream os;
            os << "element " << i << " " << set[i] << " is not a unit";
            return {false, os.str(), std::nullopt};
        }
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (set[i] == set[j]) {
                return {false, "elements " + std::to_string(i) + " and " + std::to_string(j) + " are equal",
                        std::make_pair(i, j)};
            }
            RingElement diff = ring.sub(set[i], set[j]);
            if (!ring.is_unit(diff)) {
                std::ostringstream os;
                os << "difference of elements " << i << " and " << j << " is " << diff << ", not a unit";
                return {false, os.str(), std::make_pair(i, j)};
            }
        }
    }
    return {};
}

std::vector<RingElement> diagonal_unit_set(const Ring &ring) {
    const auto &comps = ring.components();
    for (const auto &c : comps) {
        if (c.spec.kind != ComponentKind::Field) {
            throw Error(ErrorKind::TheoremNotApplicable, "ring " + describe(ring.spec()) + " is not a sum of fields");
        }
    }
    const std::uint64_t q1 = comps.front().size();
    if (q1 < 3) {
        throw Error(ErrorKind::TheoremNotApplicable, "smallest component has " + std::to_string(q1) + " elements");
    }
    // Units of a field component in enumeration order are the indices 1..q-1.
    std::vector<RingElement> set;
    for (std::uint64_t l = 1; l < q1; ++l) {
        std::uint64_t idx = 0;
        for (const auto &c : comps) {
            idx = idx * c.size() + l;
        }
        set.push_back(ring.element_at(idx));
    }
    return set;
}

std::vector<RingElement> zd_baseline_set(const Ring &ring) {
    const std::uint64_t p = smallest_prime_factor(ring.size());
    std::vector<RingElement> set;
    for (std::uint64_t k = 1; k < p; ++k) {
        set.push_back(ring.from_integer(k));
    }
    return set;
}

Family build_family_from_set(const Ring &ring, std::vector<RingElement> set, bool enforce_set_condition) {
    if (set.empty()) {
        throw Error(ErrorKind::TooSmall, "the unit set is empty");
    }
    if (enforce_set_condition) {
        if (auto check = validate_set_condition(ring, set); !check) {
            throw Error(ErrorKind::InvalidSet, check.reason);
        }
    } else {
        for (const auto &b : set) {
            require_unit(ring, b);
        }
    }
    if (!check_generic(ring)) {
        throw Error(ErrorKind::NonGenericCharacter, "character of " + describe(ring.spec()) + " is not generic");
    }
    const RingTables tables(ring);
    Family family{ring, std::move(set), {}};
    family.bases.resize(family.set.size());
    detail::parallel_for(family.set.size(), [&](std::size_t i) {
        family.bases[i] = build_basis_from_tables(tables, ring, family.set[i]);
    });
    return family;
}

Family build_family(std::uint64_t d, RingChoice choice, FamilyOptions options) {
    Ring ring = make_ring(ring_spec_for(d, choice));
    std::vector<RingElement> set;
    if (choice == RingChoice::Fields) {
        try {
            set = diagonal_unit_set(ring);
        } catch (const Error &e) {
            if (!options.allow_single || e.kind() != ErrorKind::TheoremNotApplicable) {
                throw;
            }
            set = {ring.one()};
        }
    } else {
        set = zd_baseline_set(ring);
    }
    return build_family_from_set(ring, std::move(set));
}

}  // namespace mumeb
