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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mumeb/phase.hpp"
#include "mumeb/ring.hpp"

namespace mumeb {

/// The permutation matrix e_r -> e_{br} for a unit b.
struct PermUnitary {
    RingElement b;
    /// image[index(r)] == index(b * r)
    std::vector<std::uint64_t> image;

    /// Matrix product (*this) * other, i.e. r -> this(other(r)).
    PermUnitary compose(const PermUnitary &other, const Ring &ring) const;

    bool operator==(const PermUnitary &) const = default;
};

PermUnitary perm_unitary(const Ring &ring, const RingElement &b);

struct StateEntry {
    std::uint64_t flat = 0;  // first-factor index * d + second-factor index
    Phase phase;

    bool operator==(const StateEntry &) const = default;
};

/// Maximally entangled state with d nonzero amplitudes, each of modulus 1/sqrt(d).
struct SparseState {
    std::uint64_t d = 0;
    RingElement xi;
    RingElement eta;
    std::vector<StateEntry> entries;  // ascending by flat

    /// Throws DimensionMismatch unless there are exactly d entries, strictly
    /// ascending, whose row indices and column indices are each distinct.
    void validate() const;

    bool operator==(const SparseState &) const = default;
};

/// Phi_U for U = U^(b): states ordered by index(xi) * d + index(eta).
struct MEBasis {
    RingElement b;
    std::vector<SparseState> states;

    bool operator==(const MEBasis &) const = default;
};

struct Family {
    Ring ring;
    std::vector<RingElement> set;
    std::vector<MEBasis> bases;
};

/// H_{xi,eta} |psi_{U^(b)}>: entries (index(r) * d + index(b(r + eta)), lambda(r xi)).
SparseState build_state(const Ring &ring, const RingElement &b, const RingElement &xi, const RingElement &eta);

/// Throws NotAUnit, or NonGenericCharacter if the ring's character fails check_generic.
MEBasis build_basis(const Ring &ring, const RingElement &b);

struct SetCheck {
    bool ok = true;
    std::string reason;
    std::optional<std::pair<std::size_t, std::size_t>> violating_pair;

    explicit operator bool() const { return ok; }
};

/// Every member a unit, no duplicates, and every pairwise difference a unit.
SetCheck validate_set_condition(const Ring &ring, const std::vector<RingElement> &set);

/// The l-th element takes the l-th unit of every component, for l < q_1 - 1.
/// Throws TheoremNotApplicable unless every component is a field with q_1 >= 3.
std::vector<RingElement> diagonal_unit_set(const Ring &ring);

/// {1, ..., p - 1} for the smallest prime p dividing d, as images of integers.
std::vector<RingElement> zd_baseline_set(const Ring &ring);

struct FamilyOptions {
    /// Fields mode with q_1 == 2 yields the one-basis family {1} instead of failing.
    bool allow_single = false;
};

Family build_family(std::uint64_t d, RingChoice choice, FamilyOptions options = {});

/// Builds one basis per element of `set`; throws InvalidSet if the set fails
/// validate_set_condition. With `enforce_set_condition` off only unit
/// membership is required, which is how negative-control families are made.
Family build_family_from_set(const Ring &ring, std::vector<RingElement> set, bool enforce_set_condition = true);

}  // namespace mumeb
