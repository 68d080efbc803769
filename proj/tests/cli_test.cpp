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

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "commands.hpp"
#include "gtest/gtest.h"
#include "json.hpp"
#include "mumeb/family_io.hpp"

using namespace mumeb;
using nlohmann::json;

namespace {

std::string temp_path(const std::string &name) { return ::testing::TempDir() + "mumeb_cli_" + name; }

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void dump(const std::string &path, const std::string &text) { std::ofstream(path, std::ios::binary) << text; }

int run_binary(const std::string &args) {
    const std::string cmd = std::string(MUMEB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Captured {
    int code;
    std::string out;
    std::string err;
};

template <typename Fn>
Captured capture(Fn &&fn) {
    std::ostringstream out, err;
    int code = fn(out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli_info, examples) {
    auto r9 = capture([](auto &o, auto &e) { return cli::run_info({.d = 9, .json = true}, o, e); });
    ASSERT_EQ(r9.code, cli::kOk);
    auto j9 = json::parse(r9.out);
    EXPECT_EQ(j9["q1"], 9);
    EXPECT_EQ(j9["fields_bound"], 8);
    EXPECT_EQ(j9["zd_bound"], 2);

    auto j15 = json::parse(capture([](auto &o, auto &e) { return cli::run_info({.d = 15, .json = true}, o, e); }).out);
    EXPECT_EQ(j15["q1"], 3);
    EXPECT_EQ(j15["fields_bound"], 2);
    EXPECT_EQ(j15["fields_ring"], "F_3 + F_5");

    auto r6 = capture([](auto &o, auto &e) { return cli::run_info({.d = 6}, o, e); });
    EXPECT_EQ(r6.code, cli::kOk);
    EXPECT_NE(r6.out.find("not applicable"), std::string::npos);
}

TEST(cli_construct, examples) {
    auto f9 = capture([](auto &o, auto &e) { return cli::run_construct({.d = 9}, o, e); });
    ASSERT_EQ(f9.code, cli::kOk);
    Family fam = parse_family(f9.out);
    EXPECT_EQ(fam.bases.size(), 8u);
    EXPECT_EQ(fam.bases.front().states.size(), 81u);

    auto z9 = capture([](auto &o, auto &e) { return cli::run_construct({.d = 9, .ring = RingChoice::Zd}, o, e); });
    EXPECT_EQ(parse_family(z9.out).bases.size(), 2u);

    auto bad = capture(
        [](auto &o, auto &e) { return cli::run_construct({.d = 9, .ring = RingChoice::Zd, .set = "1,4"}, o, e); });
    EXPECT_EQ(bad.code, cli::kInvalidSet);
    EXPECT_TRUE(bad.out.empty());
    EXPECT_FALSE(bad.err.empty());

    auto forced = capture([](auto &o, auto &e) {
        return cli::run_construct({.d = 9, .ring = RingChoice::Zd, .set = "1,4", .force = true}, o, e);
    });
    EXPECT_EQ(forced.code, cli::kOk);
    EXPECT_EQ(parse_family(forced.out).bases.size(), 2u);

    auto six = capture([](auto &o, auto &e) { return cli::run_construct({.d = 6}, o, e); });
    EXPECT_EQ(six.code, cli::kNotApplicable);
    auto single = capture([](auto &o, auto &e) { return cli::run_construct({.d = 6, .allow_single = true}, o, e); });
    EXPECT_EQ(single.code, cli::kOk);
}

TEST(cli_construct, set_syntax) {
    Ring f9 = make_ring(ring_spec_for(9, RingChoice::Fields));
    auto set = cli::parse_set_list(f9, "1, 2,@3");
    ASSERT_EQ(set.size(), 3u);
    EXPECT_EQ(set[0], f9.one());
    EXPECT_EQ(set[1], f9.add(f9.one(), f9.one()));
    EXPECT_EQ(set[2], f9.element_at(3));
    EXPECT_THROW((void)cli::parse_set_list(f9, "1,x"), Error);
    EXPECT_THROW((void)cli::parse_set_list(f9, "@81"), Error);
}

TEST(cli_verify, pass_fail_and_parse_error) {
    const std::string good = temp_path("f9.json");
    write_family_file(good, build_family(9, RingChoice::Fields));
    auto ok = capture([&](auto &o, auto &e) { return cli::run_verify({.path = good}, o, e); });
    ASSERT_EQ(ok.code, cli::kOk);
    auto report = json::parse(ok.out);
    EXPECT_EQ(report["overall"], true);
    EXPECT_TRUE(ok.err.empty());

    // One phase numerator incremented: 1/3 becomes 2/3.
    std::string text = slurp(good);
    std::smatch m;
    ASSERT_TRUE(std::regex_search(text, m, std::regex(R"(\[(\d+),1,3\])")));
    text.replace(m.position(0), m.length(0), "[" + m[1].str() + ",2,3]");
    const std::string tampered = temp_path("f9_tampered.json");
    dump(tampered, text);
    auto fail = capture([&](auto &o, auto &e) { return cli::run_verify({.path = tampered}, o, e); });
    EXPECT_EQ(fail.code, cli::kVerifyFailed);
    bool witnessed = false;
    const json failed_report = json::parse(fail.out);
    for (const auto &c : failed_report["checks"]) {
        witnessed |= c["passed"] == false && c["witness"].is_array();
    }
    EXPECT_TRUE(witnessed);

    const std::string junk = temp_path("junk.json");
    dump(junk, "{\"format_version\":1");
    EXPECT_EQ(capture([&](auto &o, auto &e) { return cli::run_verify({.path = junk}, o, e); }).code,
              cli::kParseFailure);
    EXPECT_EQ(capture([&](auto &o, auto &e) { return cli::run_verify({.path = junk + ".none"}, o, e); }).code,
              cli::kParseFailure);
}

TEST(cli_verify, modes_agree) {
    const std::string path = temp_path("f7.json");
    write_family_file(path, build_family(7, RingChoice::Fields));
    for (auto mode : {VerifyMode::Exact, VerifyMode::Numeric, VerifyMode::Both}) {
        auto r = capture([&](auto &o, auto &e) {
            return cli::run_verify({.path = path, .verify = {.mode = mode}}, o, e);
        });
        EXPECT_EQ(r.code, cli::kOk);
        EXPECT_EQ(json::parse(r.out)["mode"], std::string(to_string(mode)));
    }
}

TEST(cli_search, examples) {
    auto size_of = [](cli::SearchOptions opts) {
        std::ostringstream o, e;
        EXPECT_EQ(cli::run_search(opts, o, e), cli::kOk);
        auto j = json::parse(o.str());
        EXPECT_EQ(j["certified_maximum"], !opts.greedy);
        return j["size"].get<std::size_t>();
    };
    EXPECT_EQ(size_of({.d = 9, .ring = RingChoice::Zd}), 2u);
    EXPECT_EQ(size_of({.d = 9}), 8u);
    EXPECT_EQ(size_of({.d = 25}), 24u);
    EXPECT_EQ(size_of({.d = 15, .ring = RingChoice::Zd, .greedy = true}), 2u);
}

TEST(cli_pipeline, construct_then_verify_up_to_21) {
    std::size_t applicable = 0;
    for (std::uint64_t d = 2; d <= 21; ++d) {
        if (ring_spec_for(d, RingChoice::Fields).components.front().size() < 3) {
            continue;
        }
        ++applicable;
        const std::string path = temp_path("pipe_" + std::to_string(d) + ".json");
        std::ostringstream o, e;
        ASSERT_EQ(cli::run_construct({.d = d, .out = path}, o, e), cli::kOk) << d;
        EXPECT_TRUE(o.str().empty());
        std::ostringstream vo, ve;
        ASSERT_EQ(cli::run_verify({.path = path}, vo, ve), cli::kOk) << d << "\n" << vo.str();
    }
    EXPECT_EQ(applicable, 15u);  // odd d, and d divisible by 4
}

TEST(cli_binary, exit_codes) {
    const std::string path = temp_path("bin_f5.json");
    EXPECT_EQ(run_binary("info 9"), 0);
    EXPECT_EQ(run_binary("construct 5 --out " + path), 0);
    EXPECT_EQ(run_binary("verify " + path + " --mode both --tol 1e-9"), 0);
    EXPECT_EQ(run_binary("construct 6"), 2);
    EXPECT_EQ(run_binary("construct 9 --ring zd --set 1,4"), 3);
    EXPECT_EQ(run_binary("verify " + path + ".missing"), 4);
    EXPECT_EQ(run_binary("search 9 --ring zd --exact"), 0);
    EXPECT_NE(run_binary("construct 1"), 0);
    EXPECT_NE(run_binary("frobnicate"), 0);
}
