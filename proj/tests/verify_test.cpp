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

#include "mumeb/verify.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "mumeb/error.hpp"
#include "support/oracles.hpp"

using namespace mumeb;

namespace {

constexpr auto F = ComponentKind::Field;
constexpr auto Z = ComponentKind::ModRing;

Ring ring_of(std::vector<ComponentSpec> comps) { return make_ring(RingSpec{std::move(comps)}); }
RingElement el(std::vector<Part> parts) { return RingElement{std::move(parts)}; }

}  // namespace

TEST(dense, to_dense_and_inner_product) {
    Ring f3 = ring_of({{3, 1, F}});
    auto s = build_state(f3, el({{2}}), el({{1}}), el({{1}}));
    DenseState ds = to_dense(s);
    ASSERT_EQ(ds.amplitudes.size(), 9u);
    EXPECT_EQ(ds.local_dim(), 3u);
    const double amp = 1.0 / std::sqrt(3.0);
    EXPECT_NEAR(std::abs(ds.amplitudes[2] - std::complex<double>(amp, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::arg(ds.amplitudes[4]), 2.0 * std::acos(-1.0) / 3.0, 1e-12);
    EXPECT_EQ(ds.amplitudes[0], std::complex<double>(0.0, 0.0));
    EXPECT_NEAR(std::abs(inner_product(ds, ds) - 1.0), 0.0, 1e-12);

    DenseState short_state{std::vector<std::complex<double>>(4)};
    EXPECT_THROW((void)inner_product(ds, short_state), Error);
}

TEST(dense, inner_product_matches_oracle_and_is_conjugate_symmetric) {
    Ring z6 = make_ring(ring_spec_for(6, RingChoice::Zd));
    Ring r = make_ring(ring_spec_for(6, RingChoice::Fields));
    for (const Ring *ring : {&z6, &r}) {
        auto units = list_units(*ring);
        auto a = build_basis(*ring, units.front());
        auto b = build_basis(*ring, units.back());
        for (std::size_t i = 0; i < a.states.size(); i += 5) {
            for (std::size_t j = 0; j < b.states.size(); j += 3) {
                auto x = to_dense(a.states[i]);
                auto y = to_dense(b.states[j]);
                auto lib = inner_product(x, y);
                EXPECT_LT(std::abs(lib - oracle::dense_inner_product(a.states[i], b.states[j])), 1e-12);
                EXPECT_LT(std::abs(lib - std::conj(inner_product(y, x))), 1e-12);
            }
        }
    }
}

TEST(check_orthonormal, constructed_bases_pass) {
    for (std::uint64_t d : {2u, 3u, 4u, 6u, 9u, 10u}) {
        for (auto choice : {RingChoice::Fields, RingChoice::Zd}) {
            Ring r = make_ring(ring_spec_for(d, choice));
            for (const auto &b : list_units(r)) {
                Report rep = check_orthonormal(build_basis(r, b));
                EXPECT_TRUE(rep.overall) << d;
                EXPECT_LT(rep.checks.front().worst_deviation, 1e-12);
            }
        }
    }
}

TEST(check_orthonormal, corrupted_phase_is_caught_with_witness) {
    Ring f3 = ring_of({{3, 1, F}});
    MEBasis basis = build_basis(f3, f3.one());
    // State (xi=1, eta=0) gets the phases of (xi=0, eta=0) on its first
    // entry only; it is no longer orthogonal to (0, 0).
    basis.states[3].entries[1].phase = Phase();
    Report rep = check_orthonormal(basis);
    EXPECT_FALSE(rep.overall);
    const Check &c = rep.checks.front();
    EXPECT_FALSE(c.passed);
    EXPECT_GT(c.worst_deviation, 0.5 / 3.0);
    ASSERT_EQ(c.witness.size(), 4u);
}

TEST(check_max_entangled, constructed_states_pass) {
    Ring z9 = ring_of({{3, 2, Z}});
    MEBasis basis = build_basis(z9, el({{2}}));
    for (const auto &s : basis.states) {
        ASSERT_TRUE(check_max_entangled(s).overall);
        auto ds = to_dense(s);
        ASSERT_LT(entanglement_deviation(ds, EntanglementSide::RowGram), 1e-12);
        ASSERT_LT(entanglement_deviation(ds, EntanglementSide::ColumnGram), 1e-12);
    }
}

TEST(check_max_entangled, every_constructed_state_up_to_15) {
    for (std::uint64_t d = 2; d <= 15; ++d) {
        for (auto choice : {RingChoice::Fields, RingChoice::Zd}) {
            Family fam = build_family(d, choice, {.allow_single = true});
            for (const auto &basis : fam.bases) {
                for (const auto &s : basis.states) {
                    ASSERT_TRUE(check_max_entangled(s).overall) << d;
                }
            }
        }
    }
}

TEST(check_max_entangled, product_state_fails) {
    // |0>|0> is normalized but a product state.
    DenseState prod{std::vector<std::complex<double>>(9)};
    prod.amplitudes[0] = 1.0;
    Report rep = check_max_entangled(prod);
    EXPECT_FALSE(rep.overall);
    EXPECT_NEAR(rep.checks.front().worst_deviation, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(entanglement_deviation(prod, EntanglementSide::ColumnGram), 2.0 / 3.0, 1e-12);
}

TEST(check_pair_unbiased, examples) {
    Ring f3 = ring_of({{3, 1, F}});
    auto b1 = build_basis(f3, el({{1}}));
    auto b2 = build_basis(f3, el({{2}}));
    Report ok = check_pair_unbiased(b1, b2);
    EXPECT_TRUE(ok.overall);
    EXPECT_LT(ok.checks.front().worst_deviation, 1e-12);

    Ring f9 = ring_of({{3, 2, F}});
    EXPECT_TRUE(check_pair_unbiased(build_basis(f9, f9.one()), build_basis(f9, el({{0, 1}}))).overall);

    Report self = check_pair_unbiased(b1, b1);
    EXPECT_FALSE(self.overall);
    // |<psi|psi>| = 1 against a target of 1/3.
    EXPECT_NEAR(self.checks.front().worst_deviation, 2.0 / 3.0, 1e-12);

    Ring f5 = ring_of({{5, 1, F}});
    EXPECT_THROW((void)check_pair_unbiased(b1, build_basis(f5, f5.one())), Error);
}

TEST(exact_pair_criterion, examples) {
    Ring f3 = ring_of({{3, 1, F}});
    auto res = exact_pair_criterion(f3, el({{1}}), el({{2}}));
    EXPECT_TRUE(res.unbiased);
    EXPECT_EQ(res.c, el({{2}}));
    ASSERT_TRUE(res.witness.has_value());
    EXPECT_EQ(*res.witness, el({{1}}));  // (2 - 1)^{-1}
    EXPECT_EQ(res.fixed_points, 1u);

    Ring z9 = ring_of({{3, 2, Z}});
    auto bad = exact_pair_criterion(z9, el({{1}}), el({{4}}));
    EXPECT_FALSE(bad.unbiased);
    EXPECT_FALSE(bad.witness.has_value());
    EXPECT_EQ(bad.fixed_points, 3u);  // 3r = 0 has 3 solutions

    auto self = exact_pair_criterion(f3, el({{2}}), el({{2}}));
    EXPECT_FALSE(self.unbiased);
    EXPECT_EQ(self.fixed_points, 3u);

    EXPECT_THROW((void)exact_pair_criterion(z9, el({{3}}), el({{1}})), Error);
}

TEST(exact_pair_criterion, agrees_with_dense_oracle_exhaustively) {
    // Every ring with d <= 15 and every ordered pair of distinct units. When
    // biased, the (0,0)-(0,0) overlap is fixed_points / d; when unbiased
    // every overlap modulus is 1/d.
    for (std::uint64_t d = 2; d <= 15; ++d) {
        for (const auto &spec : enumerate_ring_specs(d)) {
            Ring r = make_ring(spec);
            auto units = list_units(r);
            std::vector<MEBasis> bases;
            for (const auto &u : units) {
                bases.push_back(build_basis(r, u));
            }
            const double inv_d = 1.0 / static_cast<double>(d);
            for (std::size_t i = 0; i < units.size(); ++i) {
                for (std::size_t j = 0; j < units.size(); ++j) {
                    if (i == j) {
                        continue;
                    }
                    auto res = exact_pair_criterion(r, units[i], units[j]);
                    const double diag = std::abs(oracle::dense_inner_product(bases[i].states[0], bases[j].states[0]));
                    ASSERT_NEAR(diag, static_cast<double>(res.fixed_points) * inv_d, 1e-12) << describe(spec);
                    if (res.unbiased) {
                        ASSERT_EQ(res.fixed_points, 1u);
                        ASSERT_EQ(r.mul(*res.witness, r.sub(res.c, r.one())), r.one());
                    } else {
                        ASSERT_GT(diag - inv_d, 0.5 * inv_d);
                    }
                    if (d <= 6) {
                        ASSERT_EQ(check_pair_unbiased(bases[i], bases[j]).overall, res.unbiased) << describe(spec);
                    }
                }
            }
        }
    }
}

TEST(general_pair_criterion, matches_numeric_for_permutations) {
    for (std::uint64_t d : {5u, 8u, 9u}) {
        for (auto choice : {RingChoice::Fields, RingChoice::Zd}) {
            Ring r = make_ring(ring_spec_for(d, choice));
            auto units = list_units(r);
            for (std::size_t i = 0; i < units.size(); ++i) {
                for (std::size_t j = i + 1; j < units.size(); ++j) {
                    auto u = dense_matrix(perm_unitary(r, units[i]));
                    auto v = dense_matrix(perm_unitary(r, units[j]));
                    Check g = general_pair_criterion(r, u, v);
                    ASSERT_EQ(g.passed, exact_pair_criterion(r, units[i], units[j]).unbiased) << d;
                }
            }
        }
    }
}

TEST(verify_family, all_modes_pass_on_constructed_families) {
    for (std::uint64_t d : {3u, 5u, 9u, 15u}) {
        Family fam = build_family(d, RingChoice::Fields);
        for (auto mode : {VerifyMode::Exact, VerifyMode::Numeric, VerifyMode::Both}) {
            Report rep = verify_family(fam, {.mode = mode});
            EXPECT_TRUE(rep.overall) << d;
            for (const auto &c : rep.checks) {
                EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
            }
        }
    }
    Report both = verify_family(build_family(9, RingChoice::Fields));
    EXPECT_NE(both.find("mode_agreement"), nullptr);
    EXPECT_NE(both.find("exact_pair[0,7]"), nullptr);
    EXPECT_NE(both.find("unbiased[0,7]"), nullptr);
    EXPECT_NE(both.find("max_entangled[3]"), nullptr);
}

TEST(verify_family, negative_control_is_flagged_by_both_modes) {
    Ring z9 = ring_of({{3, 2, Z}});
    Family fam = build_family_from_set(z9, {el({{1}}), el({{4}})}, false);
    Report rep = verify_family(fam);
    EXPECT_FALSE(rep.overall);
    const Check *ex = rep.find("exact_pair[0,1]");
    const Check *nu = rep.find("unbiased[0,1]");
    ASSERT_NE(ex, nullptr);
    ASSERT_NE(nu, nullptr);
    EXPECT_FALSE(ex->passed);
    EXPECT_FALSE(nu->passed);
    EXPECT_FALSE(rep.find("set_condition")->passed);
    EXPECT_TRUE(rep.find("mode_agreement")->passed);
    // The worst overlap is 3/9 against a target of 1/9.
    EXPECT_NEAR(nu->worst_deviation, 2.0 / 9.0, 1e-12);
    ASSERT_EQ(nu->witness.size(), 4u);
}

TEST(verify_family, exact_mode_catches_tampered_states) {
    Family fam = build_family(5, RingChoice::Fields);
    fam.bases[1].states[7].entries[2].phase = fam.bases[1].states[7].entries[2].phase + Phase(1, 5);
    Report exact = verify_family(fam, {.mode = VerifyMode::Exact});
    EXPECT_FALSE(exact.overall);
    EXPECT_FALSE(exact.find("conformance[1]")->passed);
    Report numeric = verify_family(fam, {.mode = VerifyMode::Numeric});
    EXPECT_FALSE(numeric.overall);
}

TEST(verify_family, pair_sampling_is_noted) {
    Family fam = build_family(7, RingChoice::Fields);
    Report rep = verify_family(fam, {.mode = VerifyMode::Numeric, .max_numeric_pairs = 3});
    EXPECT_TRUE(rep.overall);
    std::size_t pair_checks = 0;
    for (const auto &c : rep.checks) {
        pair_checks += c.name.rfind("unbiased[", 0) == 0;
    }
    EXPECT_EQ(pair_checks, 3u);
    EXPECT_FALSE(rep.notes.empty());
}
