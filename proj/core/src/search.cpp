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

#include "mumeb/search.hpp"

#include <algorithm>

namespace mumeb {

namespace {

class CliqueSearch {
  public:
    CliqueSearch(const DifferenceGraph &g, std::uint64_t limit) : g_(g), limit_(limit) {}

    std::vector<std::size_t> run() {
        std::vector<std::size_t> all(g_.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            all[i] = i;
        }
        global_bound_ = colour_bound(all);
        // The greedy clique is lexicographically smallest among cliques of
        // its size, so it may seed the incumbent.
        best_ = greedy_set_indices(g_);
        done_ = best_.size() >= global_bound_;
        expand(all);
        return best_;
    }

  private:
    std::size_t colour_bound(const std::vector<std::size_t> &cand) const {
        std::vector<std::size_t> colour(cand.size(), 0);
        std::size_t used = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::vector<bool> taken(used + 1, false);
            for (std::size_t j = 0; j < i; ++j) {
                if (g_.adjacent[cand[i]][cand[j]]) {
                    taken[colour[j]] = true;
                }
            }
            std::size_t c = 0;
            while (taken[c]) {
                ++c;
            }
            colour[i] = c;
            used = std::max(used, c + 1);
        }
        return used;
    }

    void expand(const std::vector<std::size_t> &cand) {
        if (++nodes_ > limit_) {
            throw NodeLimitExceeded(best_, nodes_);
        }
        if (current_.size() > best_.size()) {
            best_ = current_;
            done_ = best_.size() >= global_bound_;
        }
        if (done_ || cand.empty() || current_.size() + colour_bound(cand) <= best_.size()) {
            return;
        }
        // Ascending vertex order keeps the first maximum found lexicographically smallest.
        for (std::size_t k = 0; k < cand.size() && !done_; ++k) {
            if (current_.size() + (cand.size() - k) <= best_.size()) {
                break;
            }
            const std::size_t v = cand[k];
            std::vector<std::size_t> next;
            for (std::size_t m = k + 1; m < cand.size(); ++m) {
                if (g_.adjacent[v][cand[m]]) {
                    next.push_back(cand[m]);
                }
            }
            current_.push_back(v);
            expand(next);
            current_.pop_back();
        }
    }

    const DifferenceGraph &g_;
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
    std::size_t global_bound_ = 0;
    bool done_ = false;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

}  // namespace

std::size_t DifferenceGraph::edge_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < adjacent.size(); ++i) {
        for (std::size_t j = i + 1; j < adjacent.size(); ++j) {
            n += adjacent[i][j] ? 1 : 0;
        }
    }
    return n;
}

DifferenceGraph difference_graph(const Ring &ring) {
    DifferenceGraph g;
    g.vertices = list_units(ring);
    const std::size_t n = g.vertices.size();
    g.adjacent.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool edge = ring.is_unit(ring.sub(g.vertices[i], g.vertices[j]));
            g.adjacent[i][j] = g.adjacent[j][i] = edge;
        }
    }
    return g;
}

NodeLimitExceeded::NodeLimitExceeded(std::vector<std::size_t> best, std::uint64_t nodes)
    : Error(ErrorKind::NodeLimitExceeded, "gave up after " + std::to_string(nodes) + " branch nodes with a clique of size " +
                                              std::to_string(best.size())),
      best_(std::move(best)),
      nodes_(nodes) {}

std::vector<std::size_t> max_clique_indices(const DifferenceGraph &graph, std::uint64_t node_limit) {
    return CliqueSearch(graph, node_limit).run();
}

std::vector<RingElement> max_clique(const DifferenceGraph &graph, std::uint64_t node_limit) {
    return to_elements(graph, max_clique_indices(graph, node_limit));
}

std::vector<std::size_t> greedy_set_indices(const DifferenceGraph &graph) {
    std::vector<std::size_t> chosen;
    for (std::size_t v = 0; v < graph.size(); ++v) {
        bool fits = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return graph.adjacent[u][v]; });
        if (fits) {
            chosen.push_back(v);
        }
    }
    return chosen;
}

std::vector<RingElement> greedy_set(const DifferenceGraph &graph) { return to_elements(graph, greedy_set_indices(graph)); }

std::vector<RingElement> to_elements(const DifferenceGraph &graph, const std::vector<std::size_t> &indices) {
    std::vector<RingElement> out;
    out.reserve(indices.size());
    for (auto i : indices) {
        out.push_back(graph.vertices.at(i));
    }
    return out;
}

}  // namespace mumeb
