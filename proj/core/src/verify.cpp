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
#include <sstream>

#include "mumeb/error.hpp"
#include "parallel.hpp"

namespace mumeb {

namespace {

using cplx = std::complex<double>;

// Nonzero amplitudes of a dense state, as read back from the dense vector.
struct Support {
    std::vector<std::uint32_t> index;
    std::vector<cplx> amp;
};

Support support_of(const DenseState &s) {
    Support out;
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
        if (s.amplitudes[i] != cplx(0.0, 0.0)) {
            out.index.push_back(static_cast<std::uint32_t>(i));
            out.amp.push_back(s.amplitudes[i]);
        }
    }
    return out;
}

std::vector<Support> numeric_basis(const MEBasis &basis) {
    std::vector<Support> out(basis.states.size());
    for (std::size_t i = 0; i < basis.states.size(); ++i) {
        out[i] = support_of(to_dense(basis.states[i]));
    }
    return out;
}

// <u|v> with u scattered into `conj_u` (already conjugated).
cplx dot_scattered(const std::vector<cplx> &conj_u, const Support &v) {
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < v.index.size(); ++k) {
        acc += conj_u[v.index[k]] * v.amp[k];
    }
    return acc;
}

void scatter_conj(const Support &u, std::vector<cplx> &buf) {
    for (std::size_t k = 0; k < u.index.size(); ++k) {
        buf[u.index[k]] = std::conj(u.amp[k]);
    }
}

void clear(const Support &u, std::vector<cplx> &buf) {
    for (auto i : u.index) {
        buf[i] = cplx(0.0, 0.0);
    }
}

std::uint64_t basis_dim(const MEBasis &basis) {
    return basis.states.empty() ? 0 : basis.states.front().d;
}

std::string label_text(const std::vector<std::uint64_t> &w) {
    std::ostringstream os;
    if (w.size() >= 2) {
        os << "(xi=" << w[0] << ", eta=" << w[1] << ")";
    }
    if (w.size() == 4) {
        os << " vs (xi=" << w[2] << ", eta=" << w[3] << ")";
    }
    return os.str();
}

struct Worst {
    double deviation = -1.0;
    std::size_t i = 0, j = 0;

    void offer(double dev, std::size_t a, std::size_t b) {
        if (dev > deviation) {
            deviation = dev;
            i = a;
            j = b;
        }
    }
};

Check finish(std::string name, const Worst &w, std::uint64_t d, double tol, bool pair_labels) {
    Check c;
    c.name = std::move(name);
    c.worst_deviation = std::max(0.0, w.deviation);
    c.passed = c.worst_deviation < tol;
    if (d > 0 && w.deviation >= 0.0) {
        c.witness = {w.i / d, w.i % d};
        if (pair_labels) {
            c.witness.push_back(w.j / d);
            c.witness.push_back(w.j % d);
        }
        c.detail = label_text(c.witness);
    }
    return c;
}

Check orthonormal_check(const MEBasis &basis, double tol, std::string name) {
    const std::uint64_t d = basis_dim(basis);
    const auto states = numeric_basis(basis);
    std::vector<cplx> buf(d * d, cplx(0.0, 0.0));
    Worst worst;
    for (std::size_t i = 0; i < states.size(); ++i) {
        scatter_conj(states[i], buf);
        for (std::size_t j = i; j < states.size(); ++j) {
            cplx ip = dot_scattered(buf, states[j]);
            worst.offer(std::abs(ip - cplx(i == j ? 1.0 : 0.0, 0.0)), i, j);
        }
        clear(states[i], buf);
    }
    return finish(std::move(name), worst, d, tol, true);
}

Check unbiased_check(const MEBasis &a, const MEBasis &b, double tol, std::string name) {
    const std::uint64_t d = basis_dim(a);
    if (basis_dim(b) != d || a.states.size() != b.states.size()) {
        throw Error(ErrorKind::DimensionMismatch, "bases have different dimensions");
    }
    const auto sa = numeric_basis(a);
    const auto sb = numeric_basis(b);
    const double target = 1.0 / static_cast<double>(d);
    std::vector<cplx> buf(d * d, cplx(0.0, 0.0));
    Worst worst;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        scatter_conj(sa[i], buf);
        for (std::size_t j = 0; j < sb.size(); ++j) {
            worst.offer(std::abs(std::abs(dot_scattered(buf, sb[j])) - target), i, j);
        }
        clear(sa[i], buf);
    }
    return finish(std::move(name), worst, d, tol, true);
}

Check entangled_check(const MEBasis &basis, double tol, std::string name) {
    const std::uint64_t d = basis_dim(basis);
    Worst worst;
    for (std::size_t i = 0; i < basis.states.size(); ++i) {
        worst.offer(entanglement_deviation(to_dense(basis.states[i])), i, i);
    }
    return finish(std::move(name), worst, d, tol, false);
}

std::string pair_name(const char *prefix, std::size_t i, std::size_t j) {
    return std::string(prefix) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::string index_name(const char *prefix, std::size_t i) {
    return std::string(prefix) + "[" + std::to_string(i) + "]";
}

std::string element_text(const RingElement &x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

std::uint64_t DenseState::local_dim() const {
    auto d = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(amplitudes.size()))));
    return d;
}

DenseState to_dense(const SparseState &state) {
    const std::uint64_t d = state.d;
    DenseState out{std::vector<cplx>(d * d, cplx(0.0, 0.0))};
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (const auto &e : state.entries) {
        out.amplitudes.at(e.flat) = scale * e.phase.to_complex();
    }
    return out;
}

std::complex<double> inner_product(const DenseState &u, const DenseState &v) {
    if (u.amplitudes.size() != v.amplitudes.size()) {
        throw Error(ErrorKind::DimensionMismatch, "states have different dimensions");
    }
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < u.amplitudes.size(); ++i) {
        acc += std::conj(u.amplitudes[i]) * v.amplitudes[i];
    }
    return acc;
}

void Report::add(Check check) {
    overall = overall && check.passed;
    checks.push_back(std::move(check));
}

void Report::merge(const Report &other) {
    for (const auto &c : other.checks) {
        add(c);
    }
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

const Check *Report::find(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

Report check_orthonormal(const MEBasis &basis, double tol) {
    Report r;
    r.tolerance = tol;
    r.add(orthonormal_check(basis, tol, "orthonormal"));
    return r;
}

double entanglement_deviation(const DenseState &state, EntanglementSide side) {
    const std::uint64_t d = state.local_dim();
    const auto &m = state.amplitudes;
    const double target = 1.0 / static_cast<double>(d);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t j = 0; j < d; ++j) {
            cplx acc(0.0, 0.0);
            for (std::uint64_t k = 0; k < d; ++k) {
                if (side == EntanglementSide::RowGram) {
                    acc += m[i * d + k] * std::conj(m[j * d + k]);
                } else {
                    acc += std::conj(m[k * d + i]) * m[k * d + j];
                }
            }
            worst = std::max(worst, std::abs(acc - cplx(i == j ? target : 0.0, 0.0)));
        }
    }
    return worst;
}

Report check_max_entangled(const DenseState &state, double tol) {
    Report r;
    r.tolerance = tol;
    Check c;
    c.name = "max_entangled";
    c.worst_deviation = entanglement_deviation(state);
    c.passed = c.worst_deviation < tol;
    r.add(std::move(c));
    return r;
}

Report check_max_entangled(const SparseState &state, double tol) {
    Report r = check_max_entangled(to_dense(state), tol);
    return r;
}

Report check_pair_unbiased(const MEBasis &a, const MEBasis &b, double tol) {
    Report r;
    r.tolerance = tol;
    r.add(unbiased_check(a, b, tol, "unbiased"));
    return r;
}

ExactPairResult exact_pair_criterion(const Ring &ring, const RingElement &a, const RingElement &b) {
    if (!ring.is_unit(b)) {
        throw Error(ErrorKind::NotAUnit, element_text(b) + " is not a unit");
    }
    ExactPairResult out;
    out.c = ring.mul(ring.invert(a), b);
    const RingElement c_minus_1 = ring.sub(out.c, ring.one());
    out.unbiased = ring.is_unit(c_minus_1);
    if (out.unbiased) {
        out.witness = ring.invert(c_minus_1);
    }
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        if (ring.is_zero(ring.mul(c_minus_1, ring.element_at(i)))) {
            ++out.fixed_points;
        }
    }
    return out;
}

Report verify_family(const Family &family, const VerifyOptions &options) {
    const double tol = options.tol;
    const Ring &ring = family.ring;
    const std::uint64_t d = ring.size();
    const std::size_t m = family.bases.size();
    Report report;
    report.tolerance = tol;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            pairs.emplace_back(i, j);
        }
    }

    std::optional<bool> exact_verdict, numeric_verdict;

    if (options.mode != VerifyMode::Numeric) {
        Report exact;
        Check generic{"generic_character", check_generic(ring), 0.0, {}, ""};
        if (!generic.passed) {
            generic.worst_deviation = 1.0;
            generic.detail = "some character sum over a nonzero multiple does not vanish";
        }
        exact.add(std::move(generic));

        Check set_check{"set_condition", true, 0.0, {}, ""};
        if (family.set.size() != m) {
            set_check.passed = false;
            set_check.detail = "set and basis counts differ";
        } else if (auto sc = validate_set_condition(ring, family.set); !sc) {
            set_check.passed = false;
            set_check.detail = sc.reason;
        }
        exact.add(std::move(set_check));

        // The stored bases must be exactly Phi_{U^(b)} for their recorded b.
        std::vector<Check> conformance(m);
        detail::parallel_for(m, [&](std::size_t i) {
            Check &c = conformance[i];
            c.name = index_name("conformance", i);
            const MEBasis &stored = family.bases[i];
            if (i < family.set.size() && !(stored.b == family.set[i])) {
                c.passed = false;
                c.detail = "basis element differs from the set element";
                return;
            }
            if (!ring.is_unit(stored.b)) {
                c.passed = false;
                c.detail = "basis element is not a unit";
                return;
            }
            if (stored.states.size() != d * d) {
                c.passed = false;
                c.detail = "basis does not hold d^2 states";
                return;
            }
            for (std::uint64_t k = 0; k < d * d; ++k) {
                SparseState expected = build_state(ring, stored.b, ring.element_at(k / d), ring.element_at(k % d));
                if (!(expected == stored.states[k])) {
                    c.passed = false;
                    c.worst_deviation = 1.0;
                    c.witness = {k / d, k % d};
                    c.detail = "state " + label_text(c.witness) + " differs from the construction";
                    return;
                }
            }
        });
        for (auto &c : conformance) {
            exact.add(std::move(c));
        }

        for (auto [i, j] : pairs) {
            Check c;
            c.name = pair_name("exact_pair", i, j);
            const auto &a = family.bases[i].b;
            const auto &b = family.bases[j].b;
            if (!ring.is_unit(a) || !ring.is_unit(b)) {
                c.passed = false;
                c.detail = "basis element is not a unit";
                exact.add(std::move(c));
                continue;
            }
            ExactPairResult res = exact_pair_criterion(ring, a, b);
            c.passed = res.unbiased;
            if (res.unbiased) {
                c.detail = "single-term collapse via (c-1)^-1 = " + element_text(*res.witness);
            } else {
                // At xi = xi', eta = eta' the cross product has modulus fixed_points / d.
                c.worst_deviation = static_cast<double>(res.fixed_points - 1) / static_cast<double>(d);
                c.witness = {0, 0, 0, 0};
                c.detail = "c - 1 = " + element_text(ring.sub(res.c, ring.one())) + " is not a unit; " +
                           std::to_string(res.fixed_points) + " solutions of c r = r";
            }
            exact.add(std::move(c));
        }
        exact_verdict = exact.overall;
        report.merge(exact);
    }

    if (options.mode != VerifyMode::Exact) {
        Report numeric;
        std::vector<Check> ortho(m), ent(m);
        detail::parallel_for(m, [&](std::size_t i) {
            ortho[i] = orthonormal_check(family.bases[i], tol, index_name("orthonormal", i));
            ent[i] = entangled_check(family.bases[i], tol, index_name("max_entangled", i));
        });
        for (std::size_t i = 0; i < m; ++i) {
            numeric.add(std::move(ortho[i]));
            numeric.add(std::move(ent[i]));
        }

        std::vector<std::pair<std::size_t, std::size_t>> chosen = pairs;
        if (options.max_numeric_pairs != 0 && pairs.size() > options.max_numeric_pairs) {
            chosen.clear();
            const std::size_t k = options.max_numeric_pairs;
            for (std::size_t s = 0; s < k; ++s) {
                chosen.push_back(pairs[s * pairs.size() / k]);
            }
            numeric.notes.push_back("numeric unbiasedness sampled " + std::to_string(k) + " of " +
                                    std::to_string(pairs.size()) + " basis pairs");
        }
        std::vector<Check> cross(chosen.size());
        detail::parallel_for(chosen.size(), [&](std::size_t s) {
            auto [i, j] = chosen[s];
            cross[s] = unbiased_check(family.bases[i], family.bases[j], tol, pair_name("unbiased", i, j));
        });
        for (auto &c : cross) {
            numeric.add(std::move(c));
        }
        numeric_verdict = numeric.overall;
        report.merge(numeric);
    }

    if (exact_verdict && numeric_verdict) {
        Check agree;
        agree.name = "mode_agreement";
        agree.passed = *exact_verdict == *numeric_verdict;
        agree.detail = std::string("exact ") + (*exact_verdict ? "pass" : "fail") + ", numeric " +
                       (*numeric_verdict ? "pass" : "fail");
        report.add(std::move(agree));
    }
    return report;
}

std::vector<std::complex<double>> dense_matrix(const PermUnitary &u) {
    const std::size_t d = u.image.size();
    std::vector<cplx> m(d * d, cplx(0.0, 0.0));
    for (std::size_t r = 0; r < d; ++r) {
        m[r * d + u.image[r]] = 1.0;
    }
    return m;
}

Check general_pair_criterion(const Ring &ring, const std::vector<std::complex<double>> &u,
                             const std::vector<std::complex<double>> &v, double tol) {
    const std::uint64_t d = ring.size();
    if (u.size() != d * d || v.size() != d * d) {
        throw Error(ErrorKind::DimensionMismatch, "unitaries must be d x d");
    }
    // w_{rs} = sum_l conj(u_{lr}) v_{ls}
    std::vector<cplx> w(d * d, cplx(0.0, 0.0));
    for (std::uint64_t r = 0; r < d; ++r) {
        for (std::uint64_t s = 0; s < d; ++s) {
            cplx acc(0.0, 0.0);
            for (std::uint64_t l = 0; l < d; ++l) {
                acc += std::conj(u[l * d + r]) * v[l * d + s];
            }
            w[r * d + s] = acc;
        }
    }
    const auto elements = enumerate_elements(ring);
    Worst worst;
    for (std::uint64_t xi = 0; xi < d; ++xi) {
        for (std::uint64_t eta = 0; eta < d; ++eta) {
            cplx acc(0.0, 0.0);
            for (std::uint64_t r = 0; r < d; ++r) {
                const auto s = ring.index_of(ring.add(elements[r], elements[eta]));
                acc += ring.character(ring.mul(elements[xi], elements[r])).to_complex() * w[r * d + s];
            }
            worst.offer(std::abs(std::abs(acc) - 1.0), xi * d + eta, xi * d + eta);
        }
    }
    Check c = finish("general_pair_criterion", worst, d, tol, false);
    c.detail = "experimental dense criterion; " + c.detail;
    return c;
}

}  // namespace mumeb
