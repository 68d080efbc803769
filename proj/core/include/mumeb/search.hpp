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
#include <vector>

#include "mumeb/error.hpp"
#include "mumeb/ring.hpp"

namespace mumeb {

/// Graph on the units of a ring with an edge x - y whenever x - y is a unit.
/// Cliques are exactly the sets admissible for a mutually unbiased family.
struct DifferenceGraph {
    std::vector<RingElement> vertices;  // units in enumeration order
    std::vector<std::vector<bool>> adjacent;

    std::size_t size() const { return vertices.size(); }
    std::size_t edge_count() const;
};

DifferenceGraph difference_graph(const Ring &ring);

inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

/// Carries the best clique found before the branch budget ran out.
class NodeLimitExceeded : public Error {
  public:
    NodeLimitExceeded(std::vector<std::size_t> best, std::uint64_t nodes);

    const std::vector<std::size_t> &best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

  private:
    std::vector<std::size_t> best_;
    std::uint64_t nodes_;
};

/// Maximum clique by branch and bound with greedy-colouring bounds. Among all
/// maximum cliques the lexicographically smallest vertex-index sequence is
/// returned. Throws NodeLimitExceeded once more than `node_limit` branch
/// nodes have been expanded.
std::vector<std::size_t> max_clique_indices(const DifferenceGraph &graph, std::uint64_t node_limit = kDefaultNodeLimit);

std::vector<RingElement> max_clique(const DifferenceGraph &graph, std::uint64_t node_limit = kDefaultNodeLimit);

/// Maximal clique taking vertices lowest index first.
std::vector<std::size_t> greedy_set_indices(const DifferenceGraph &graph);

std::vector<RingElement> greedy_set(const DifferenceGraph &graph);

std::vector<RingElement> to_elements(const DifferenceGraph &graph, const std::vector<std::size_t> &indices);

}  // namespace mumeb
