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

#include "mumeb/family_io.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "mumeb/error.hpp"

namespace mumeb {

namespace {

using json = nlohmann::json;

void write_element(std::ostream &os, const RingElement &x) {
    os << '[';
    for (std::size_t i = 0; i < x.parts.size(); ++i) {
        os << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < x.parts[i].size(); ++j) {
            os << (j ? "," : "") << x.parts[i][j];
        }
        os << ']';
    }
    os << ']';
}

[[noreturn]] void fail(const std::string &what) { throw Error(ErrorKind::ParseError, what); }

const json &field(const json &obj, const char *key) {
    if (!obj.is_object()) {
        fail(std::string("expected an object holding '") + key + "'");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(std::string("missing key '") + key + "'");
    }
    return *it;
}

std::uint64_t as_uint(const json &v, const char *what) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        fail(std::string(what) + " must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

const json &as_array(const json &v, const char *what) {
    if (!v.is_array()) {
        fail(std::string(what) + " must be an array");
    }
    return v;
}

RingElement parse_element(const json &v, const Ring &ring) {
    RingElement x;
    for (const auto &part : as_array(v, "element")) {
        Part p;
        for (const auto &c : as_array(part, "element part")) {
            p.push_back(as_uint(c, "coefficient"));
        }
        x.parts.push_back(std::move(p));
    }
    try {
        ring.check_shape(x);
    } catch (const Error &e) {
        fail(e.what());
    }
    return x;
}

Ring parse_ring(const json &v) {
    std::vector<ComponentSpec> comps;
    std::vector<std::vector<std::uint64_t>> moduli;
    for (const auto &c : as_array(field(v, "components"), "components")) {
        const json &kind = field(c, "kind");
        ComponentSpec spec;
        if (kind == "field") {
            spec.kind = ComponentKind::Field;
        } else if (kind == "modring") {
            spec.kind = ComponentKind::ModRing;
        } else {
            fail("unknown component kind");
        }
        spec.p = as_uint(field(c, "p"), "p");
        std::uint64_t a = as_uint(field(c, "a"), "a");
        if (a == 0 || a > 64) {
            fail("component exponent out of range");
        }
        spec.a = static_cast<std::uint32_t>(a);
        std::vector<std::uint64_t> modulus;
        for (const auto &m : as_array(field(c, "modulus"), "modulus")) {
            modulus.push_back(as_uint(m, "modulus coefficient"));
        }
        comps.push_back(spec);
        moduli.push_back(std::move(modulus));
    }
    try {
        return Ring(RingSpec{std::move(comps)}, std::move(moduli));
    } catch (const Error &e) {
        fail(e.what());
    }
}

SparseState parse_state(const json &v, const Ring &ring) {
    SparseState s;
    s.d = ring.size();
    s.xi = parse_element(field(v, "xi"), ring);
    s.eta = parse_element(field(v, "eta"), ring);
    for (const auto &e : as_array(field(v, "entries"), "entries")) {
        if (!e.is_array() || e.size() != 3) {
            fail("state entry must be [flat, num, den]");
        }
        std::uint64_t flat = as_uint(e[0], "flat index");
        std::uint64_t num = as_uint(e[1], "phase numerator");
        std::uint64_t den = as_uint(e[2], "phase denominator");
        if (den == 0 || num >= den || (num == 0 && den != 1) || (num != 0 && std::gcd(num, den) != 1)) {
            fail("phase " + std::to_string(num) + "/" + std::to_string(den) + " is not reduced");
        }
        s.entries.push_back({flat, Phase(num, den)});
    }
    try {
        s.validate();
    } catch (const Error &e) {
        fail(e.what());
    }
    return s;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string_view to_string(VerifyMode mode) {
    switch (mode) {
        case VerifyMode::Exact:
            return "exact";
        case VerifyMode::Numeric:
            return "numeric";
        case VerifyMode::Both:
            return "both";
    }
    return "both";
}

void write_family(std::ostream &os, const Family &family) {
    const Ring &ring = family.ring;
    os << "{\"format_version\":" << kFamilyFormatVersion << ",\"d\":" << ring.size() << ",\n\"ring\":{\"components\":[";
    for (std::size_t i = 0; i < ring.components().size(); ++i) {
        const auto &c = ring.components()[i];
        os << (i ? "," : "") << "{\"kind\":\"" << (c.spec.kind == ComponentKind::Field ? "field" : "modring")
           << "\",\"p\":" << c.spec.p << ",\"a\":" << c.spec.a << ",\"modulus\":[";
        for (std::size_t j = 0; j < c.modulus.size(); ++j) {
            os << (j ? "," : "") << c.modulus[j];
        }
        os << "]}";
    }
    os << "]},\n\"set\":[";
    for (std::size_t i = 0; i < family.set.size(); ++i) {
        os << (i ? "," : "");
        write_element(os, family.set[i]);
    }
    os << "],\n\"bases\":[";
    for (std::size_t bi = 0; bi < family.bases.size(); ++bi) {
        const auto &basis = family.bases[bi];
        os << (bi ? "," : "") << "\n{\"b\":";
        write_element(os, basis.b);
        os << ",\"states\":[";
        for (std::size_t si = 0; si < basis.states.size(); ++si) {
            const auto &s = basis.states[si];
            os << (si ? "," : "") << "\n{\"xi\":";
            write_element(os, s.xi);
            os << ",\"eta\":";
            write_element(os, s.eta);
            os << ",\"entries\":[";
            for (std::size_t k = 0; k < s.entries.size(); ++k) {
                const auto &e = s.entries[k];
                os << (k ? "," : "") << '[' << e.flat << ',' << e.phase.num() << ',' << e.phase.den() << ']';
            }
            os << "]}";
        }
        os << "]}";
    }
    os << "]}\n";
}

std::string serialize_family(const Family &family) {
    std::ostringstream os;
    write_family(os, family);
    return os.str();
}

Family parse_family(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::exception &e) {
        fail(e.what());
    }
    if (as_uint(field(doc, "format_version"), "format_version") != kFamilyFormatVersion) {
        fail("unsupported format_version");
    }
    Ring ring = parse_ring(field(doc, "ring"));
    if (as_uint(field(doc, "d"), "d") != ring.size()) {
        fail("d does not match the ring");
    }
    Family family{ring, {}, {}};
    for (const auto &x : as_array(field(doc, "set"), "set")) {
        family.set.push_back(parse_element(x, ring));
    }
    for (const auto &b : as_array(field(doc, "bases"), "bases")) {
        MEBasis basis;
        basis.b = parse_element(field(b, "b"), ring);
        for (const auto &s : as_array(field(b, "states"), "states")) {
            basis.states.push_back(parse_state(s, ring));
        }
        family.bases.push_back(std::move(basis));
    }
    return family;
}

Family read_family_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family(buf.str());
}

void write_family_file(const std::string &path, const Family &family) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    write_family(out, family);
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

std::string report_to_json(const Report &report, VerifyMode mode, int indent) {
    nlohmann::ordered_json out;
    out["overall"] = report.overall;
    out["mode"] = std::string(to_string(mode));
    out["tolerance"] = report.tolerance;
    out["notes"] = report.notes;
    auto checks = nlohmann::ordered_json::array();
    for (const auto &c : report.checks) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["worst_deviation"] = c.worst_deviation;
        j["witness"] = c.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.witness);
        j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    out["checks"] = std::move(checks);
    return out.dump(indent);
}

void write_dense(std::ostream &os, const Family &family) {
    os << "{\"d\":" << family.ring.size() << ",\"bases\":[";
    for (std::size_t bi = 0; bi < family.bases.size(); ++bi) {
        const auto &basis = family.bases[bi];
        os << (bi ? "," : "") << "\n{\"b\":";
        write_element(os, basis.b);
        os << ",\"states\":[";
        for (std::size_t si = 0; si < basis.states.size(); ++si) {
            DenseState dense = to_dense(basis.states[si]);
            os << (si ? "," : "") << "\n[";
            for (std::size_t k = 0; k < dense.amplitudes.size(); ++k) {
                const auto &z = dense.amplitudes[k];
                os << (k ? "," : "") << '[' << format_double(z.real()) << ',' << format_double(z.imag()) << ']';
            }
            os << ']';
        }
        os << "]}";
    }
    os << "]}\n";
}

}  // namespace mumeb
