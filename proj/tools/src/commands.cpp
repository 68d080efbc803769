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

#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>

#include "json.hpp"
#include "mumeb/error.hpp"
#include "mumeb/family_io.hpp"
#include "mumeb/number_theory.hpp"
#include "mumeb/weyl.hpp"

namespace mumeb::cli {

namespace {

using ojson = nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::TheoremNotApplicable:
        return kNotApplicable;
    case ErrorKind::InvalidSet:
    case ErrorKind::TooSmall:
    case ErrorKind::NotAUnit:
    case ErrorKind::ShapeMismatch:
        return kInvalidSet;
    case ErrorKind::ParseError:
        return kParseFailure;
    case ErrorKind::NodeLimitExceeded:
        return kNodeLimit;
    default:
        return kVerifyFailed;
    }
}

ojson element_json(const RingElement &x) {
    ojson parts = ojson::array();
    for (const auto &p : x.parts) {
        parts.push_back(p);
    }
    return parts;
}

std::string_view ring_name(RingChoice choice) { return choice == RingChoice::Fields ? "fields" : "zd"; }

std::uint64_t parse_u64(std::string_view token) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw Error(ErrorKind::InvalidSet, "bad set member '" + std::string(token) + "'");
    }
    return v;
}

}  // namespace

std::vector<RingElement> parse_set_list(const Ring &ring, const std::string &text) {
    std::vector<RingElement> set;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string_view token = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        while (!token.empty() && token.front() == ' ') {
            token.remove_prefix(1);
        }
        while (!token.empty() && token.back() == ' ') {
            token.remove_suffix(1);
        }
        if (!token.empty() && token.front() == '@') {
            const std::uint64_t index = parse_u64(token.substr(1));
            if (index >= ring.size()) {
                throw Error(ErrorKind::InvalidSet, "element index " + std::to_string(index) + " out of range");
            }
            set.push_back(ring.element_at(index));
        } else {
            set.push_back(ring.from_integer(parse_u64(token)));
        }
    }
    return set;
}

int run_info(const InfoOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        const RingSpec fields = ring_spec_for(opts.d, RingChoice::Fields);
        const RingSpec zd = ring_spec_for(opts.d, RingChoice::Zd);
        const std::uint64_t q1 = fields.components.front().size();
        const bool applicable = q1 >= 3;
        const std::uint64_t zd_bound = smallest_prime_factor(opts.d) - 1;
        if (opts.json) {
            ojson j;
            j["d"] = opts.d;
            ojson fac = ojson::array();
            for (const auto &pp : factorize(opts.d)) {
                fac.push_back({{"p", pp.p}, {"a", pp.a}});
            }
            j["factorization"] = fac;
            j["fields_ring"] = describe(fields);
            j["zd_ring"] = describe(zd);
            j["q1"] = q1;
            j["fields_applicable"] = applicable;
            j["fields_bound"] = applicable ? q1 - 1 : 1;
            j["zd_bound"] = zd_bound;
            out << j.dump(2) << '\n';
        } else {
            out << "d = " << opts.d << " =";
            const char *sep = " ";
            for (const auto &pp : factorize(opts.d)) {
                out << sep << pp.p;
                if (pp.a > 1) {
                    out << '^' << pp.a;
                }
                sep = " * ";
            }
            out << '\n';
            out << "fields ring: " << describe(fields) << '\n';
            out << "zd ring: " << describe(zd) << '\n';
            out << "q1 = " << q1 << '\n';
            if (applicable) {
                out << "fields mode: " << q1 - 1 << " mutually unbiased bases\n";
            } else {
                out << "fields mode: not applicable (q1 = 2); --allow-single gives 1 basis\n";
            }
            out << "zd mode: " << zd_bound << (zd_bound == 1 ? " basis\n" : " mutually unbiased bases\n");
        }
        return kOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

int run_construct(const ConstructOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        Family family = [&] {
            if (opts.set == "auto") {
                return build_family(opts.d, opts.ring, {.allow_single = opts.allow_single});
            }
            Ring ring = make_ring(ring_spec_for(opts.d, opts.ring));
            auto set = parse_set_list(ring, opts.set);
            if (opts.force) {
                if (auto check = validate_set_condition(ring, set); !check) {
                    err << "warning: " << check.reason << "; building anyway\n";
                }
            }
            return build_family_from_set(ring, std::move(set), !opts.force);
        }();
        if (opts.out.empty()) {
            write_family(out, family);
        } else {
            write_family_file(opts.out, family);
        }
        if (!opts.dense.empty()) {
            std::ofstream dense(opts.dense, std::ios::binary);
            if (!dense) {
                err << "error: cannot open " << opts.dense << '\n';
                return kVerifyFailed;
            }
            write_dense(dense, family);
        }
        err << "constructed " << family.bases.size() << " bases over " << describe(family.ring.spec()) << '\n';
        return kOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

int run_verify(const VerifyCommandOptions &opts, std::ostream &out, std::ostream &err) {
    std::optional<Family> family;
    try {
        family = read_family_file(opts.path);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kParseFailure;
    }
    Report report = verify_family(*family, opts.verify);
    out << report_to_json(report, opts.verify.mode) << '\n';
    if (!report.overall) {
        for (const auto &c : report.checks) {
            if (!c.passed) {
                err << "FAIL " << c.name << ": worst deviation " << c.worst_deviation << '\n';
            }
        }
    }
    return report.overall ? kOk : kVerifyFailed;
}

int run_search(const SearchOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        Ring ring = make_ring(ring_spec_for(opts.d, opts.ring));
        DifferenceGraph graph = difference_graph(ring);
        std::vector<std::size_t> best;
        bool certified = false;
        int code = kOk;
        if (opts.greedy) {
            best = greedy_set_indices(graph);
        } else {
            try {
                best = max_clique_indices(graph, opts.node_limit);
                certified = true;
            } catch (const NodeLimitExceeded &e) {
                err << "error: " << e.what() << '\n';
                best = e.best();
                code = kNodeLimit;
            }
        }
        ojson j;
        j["d"] = opts.d;
        j["ring"] = ring_name(opts.ring);
        j["components"] = describe(ring.spec());
        j["method"] = opts.greedy ? "greedy" : "exact";
        j["size"] = best.size();
        j["certified_maximum"] = certified;
        ojson set = ojson::array();
        for (const auto &x : to_elements(graph, best)) {
            set.push_back(element_json(x));
        }
        j["set"] = set;
        out << j.dump() << '\n';
        return code;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

}  // namespace mumeb::cli
