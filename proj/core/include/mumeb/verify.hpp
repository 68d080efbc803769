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
#include <optional>
#include <string>
#include <vector>

#include "mumeb/ring.hpp"
#include "mumeb/weyl.hpp"

namespace mumeb {

inline constexpr double kDefaultTolerance = 1e-9;

/// Amplitudes of a state in C^d (x) C^d, row-major: flat = first * d + second.
struct DenseState {
    std::vector<std::complex<double>> amplitudes;

    std::uint64_t local_dim() const;
};

DenseState to_dense(const SparseState &state);

/// <u|v>, conjugate-linear in u. Throws DimensionMismatch.
std::complex<double> inner_product(const DenseState &u, const DenseState &v);

struct Check {
    std::string name;
    bool passed = true;
    double worst_deviation = 0.0;
    /// Labels (xi, eta) or (xi, eta, xi', eta') as element indices at the worst deviation.
    std::vector<std::uint64_t> witness;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    bool overall = true;
    double tolerance = kDefaultTolerance;
    std::vector<std::string> notes;

    void add(Check check);
    void merge(const Report &other);
    const Check *find(const std::string &name) const;
};

Report check_orthonormal(const MEBasis &basis, double tol = kDefaultTolerance);

enum class EntanglementSide { RowGram, ColumnGram };

/// max |(M M^dagger - I/d)_{ij}| (RowGram) or the same for M^dagger M (ColumnGram),
/// where M is the d x d coefficient matrix of the state.
double entanglement_deviation(const DenseState &state, EntanglementSide side = EntanglementSide::RowGram);

Report check_max_entangled(const SparseState &state, double tol = kDefaultTolerance);
Report check_max_entangled(const DenseState &state, double tol = kDefaultTolerance);

/// All d^2 x d^2 cross inner products must have modulus 1/d. Throws DimensionMismatch.
Report check_pair_unbiased(const MEBasis &a, const MEBasis &b, double tol = kDefaultTolerance);

struct ExactPairResult {
    bool unbiased = false;
    RingElement c;                      // a^{-1} b
    std::optional<RingElement> witness;  // (c - 1)^{-1} when it exists
    /// Number of r with c r = r; the cross inner product at xi = xi', eta = eta'
    /// has modulus exactly fixed_points / d.
    std::uint64_t fixed_points = 0;
};

/// Exact unbiasedness of Phi_{U^(a)} and Phi_{U^(b)}: true iff c - 1 is a unit
/// for c = a^{-1} b. Throws NotAUnit.
ExactPairResult exact_pair_criterion(const Ring &ring, const RingElement &a, const RingElement &b);

enum class VerifyMode { Exact, Numeric, Both };

struct VerifyOptions {
    double tol = kDefaultTolerance;
    VerifyMode mode = VerifyMode::Both;
    /// 0 checks every basis pair numerically; otherwise at most this many,
    /// spread evenly over the pair list. Sampling is noted in the report.
    std::size_t max_numeric_pairs = 0;
};

Report verify_family(const Family &family, const VerifyOptions &options = {});

/// Experimental: evaluates |sum_r lambda(xi r) w_{r, r+eta}| for W = U^dagger V
/// with dense d x d unitaries (row-major, entry (r, s) = <e_s|U|e_r> as in
/// U|e_r> = sum_s u_{rs} e_s). Reports the worst deviation from 1.
Check general_pair_criterion(const Ring &ring, const std::vector<std::complex<double>> &u,
                             const std::vector<std::complex<double>> &v, double tol = kDefaultTolerance);

/// Dense row-major matrix of U^(b): u_{rs} = 1 iff s = b r.
std::vector<std::complex<double>> dense_matrix(const PermUnitary &u);

}  // namespace mumeb
