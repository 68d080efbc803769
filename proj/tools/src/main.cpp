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

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace mumeb;

int main(int argc, char **argv) {
    CLI::App app{"Mutually unbiased maximally entangled bases over finite rings"};
    app.require_subcommand(1);

    const std::map<std::string, RingChoice> rings{{"fields", RingChoice::Fields}, {"zd", RingChoice::Zd}};
    const std::map<std::string, VerifyMode> modes{
        {"exact", VerifyMode::Exact}, {"numeric", VerifyMode::Numeric}, {"both", VerifyMode::Both}};
    auto dim = CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31);

    cli::InfoOptions info;
    auto *info_cmd = app.add_subcommand("info", "Factorization, ring choice and guaranteed family sizes");
    info_cmd->add_option("d", info.d, "Local dimension")->required()->check(dim);
    info_cmd->add_flag("--json", info.json, "Print JSON instead of text");

    cli::ConstructOptions construct;
    auto *construct_cmd = app.add_subcommand("construct", "Build a family file");
    construct_cmd->add_option("d", construct.d, "Local dimension")->required()->check(dim);
    construct_cmd->add_option("--ring", construct.ring, "fields or zd")
        ->transform(CLI::CheckedTransformer(rings, CLI::ignore_case))
        ->default_str("fields");
    construct_cmd->add_option("--set", construct.set, "auto, or a list like 1,2 or @3,@5 (element indices)")
        ->default_str("auto");
    construct_cmd->add_option("--out", construct.out, "Output path (default: standard output)");
    construct_cmd->add_flag("--allow-single", construct.allow_single, "Accept a one-basis family when q1 = 2");
    construct_cmd->add_flag("--force", construct.force, "Build from an explicit set even if it violates the condition");
    construct_cmd->add_option("--dense", construct.dense, "Also write dense complex amplitudes to this path");

    cli::VerifyCommandOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Check a family file and print a JSON report");
    verify_cmd->add_option("path", verify.path, "Family file")->required();
    verify_cmd->add_option("--tol", verify.verify.tol, "Numeric tolerance")->default_val(kDefaultTolerance);
    verify_cmd->add_option("--mode", verify.verify.mode, "exact, numeric or both")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
        ->default_str("both");
    verify_cmd->add_option("--max-pairs", verify.verify.max_numeric_pairs,
                           "Numerically check at most this many basis pairs (0: all)");

    cli::SearchOptions search;
    auto *search_cmd = app.add_subcommand("search", "Largest set with unit pairwise differences");
    search_cmd->add_option("d", search.d, "Local dimension")->required()->check(dim);
    search_cmd->add_option("--ring", search.ring, "fields or zd")
        ->transform(CLI::CheckedTransformer(rings, CLI::ignore_case))
        ->default_str("fields");
    auto *exact_flag = search_cmd->add_flag("--exact", "Branch and bound (default)");
    search_cmd->add_flag("--greedy", search.greedy, "Greedy maximal set")->excludes(exact_flag);
    search_cmd->add_option("--node-limit", search.node_limit, "Branch node budget")->default_val(kDefaultNodeLimit);

    CLI11_PARSE(app, argc, argv);

    if (info_cmd->parsed()) {
        return cli::run_info(info, std::cout, std::cerr);
    }
    if (construct_cmd->parsed()) {
        return cli::run_construct(construct, std::cout, std::cerr);
    }
    if (verify_cmd->parsed()) {
        return cli::run_verify(verify, std::cout, std::cerr);
    }
    return cli::run_search(search, std::cout, std::cerr);
}
