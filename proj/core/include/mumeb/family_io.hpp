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

#include <iosfwd>
#include <string>
#include <string_view>

#include "mumeb/verify.hpp"
#include "mumeb/weyl.hpp"

namespace mumeb {

inline constexpr int kFamilyFormatVersion = 1;

/// Family file layout (UTF-8 JSON, keys in this order, integers only):
///
///   {"format_version":1,"d":D,
///    "ring":{"components":[{"kind":"field"|"modring","p":P,"a":A,"modulus":[...]}, ...]},
///    "set":[ELEMENT, ...],
///    "bases":[{"b":ELEMENT,"states":[{"xi":ELEMENT,"eta":ELEMENT,
///                                     "entries":[[flat,num,den], ...]}, ...]}, ...]}
///
/// ELEMENT is a list of parts in component order; each part is its
/// coefficient list (a residue alone for Z/p^a and prime fields). One basis
/// header and one state per line, so the output is byte-stable.
void write_family(std::ostream &os, const Family &family);
std::string serialize_family(const Family &family);

/// Throws Error(ParseError) on malformed input, including states that are not
/// valid sparse maximally entangled states.
Family parse_family(std::string_view text);
Family read_family_file(const std::string &path);
void write_family_file(const std::string &path, const Family &family);

std::string report_to_json(const Report &report, VerifyMode mode, int indent = 2);

/// Complex amplitudes of every state as [re, im] pairs with 17 significant digits.
void write_dense(std::ostream &os, const Family &family);

std::string_view to_string(VerifyMode mode);

}  // namespace mumeb
