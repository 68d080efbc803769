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
#include <string>

#include "mumeb/ring.hpp"
#include "mumeb/search.hpp"
#include "mumeb/verify.hpp"

namespace mumeb::cli {

/// Process exit codes. Anything else comes from argument parsing.
enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kNotApplicable = 2,
    kInvalidSet = 3,
    kParseFailure = 4,
    kNodeLimit = 5,
};

struct InfoOptions {
    std::uint64_t d = 0;
    bool json = false;
};

struct ConstructOptions {
    std::uint64_t d = 0;
    RingChoice ring = RingChoice::Fields;
    /// "auto", or comma-separated members: an integer k means k * 1, "@i"
    /// means the element with enumeration index i.
    std::string set = "auto";
    std::string out;  // empty: standard output
    bool allow_single = false;
    bool force = false;  // skip the pairwise-difference condition
    std::string dense;
};

struct VerifyCommandOptions {
    std::string path;
    VerifyOptions verify;
};

struct SearchOptions {
    std::uint64_t d = 0;
    RingChoice ring = RingChoice::Fields;
    bool greedy = false;
    std::uint64_t node_limit = kDefaultNodeLimit;
};

int run_info(const InfoOptions &opts, std::ostream &out, std::ostream &err);
int run_construct(const ConstructOptions &opts, std::ostream &out, std::ostream &err);
int run_verify(const VerifyCommandOptions &opts, std::ostream &out, std::ostream &err);
int run_search(const SearchOptions &opts, std::ostream &out, std::ostream &err);

std::vector<RingElement> parse_set_list(const Ring &ring, const std::string &text);

}  // namespace mumeb::cli
