//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qfree/subgraph.hpp"

namespace qfree {

enum class ReaddMode { exact, greedy };

struct SearchConfig {
  double time_budget = 0.0;     // seconds; soft limit, 0 disables
  int remove_t = 2;             // perturbation depth
  unsigned worker_count = 1;    // 0 = hardware concurrency
  std::uint64_t rng_seed = 0;
  std::uint64_t node_limit = 0; // 0 disables
  // Perturbation: random t-subsets per round; 0 enumerates all of them.
  std::uint64_t sample = 0;
  ReaddMode readd = ReaddMode::exact;
  // Cap on the exact re-add search for a single removed subset.
  std::uint64_t extension_node_limit = 200000;
  // Called with every new incumbent (serialised; may come from any worker).
  std::function<void(const CubeSubgraph &)> on_incumbent;
};

struct SearchResult {
  CubeSubgraph best;
  // Exact search: no smaller hitting set exists. Perturbation: the whole
  // t-neighbourhood of `best` was scanned without improvement.
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  double elapsed = 0.0;
  bool node_limit_hit = false;
  bool time_limit_hit = false;
  int rounds = 0;
  int improvements = 0;
};

/// Minimum hitting set over explicit element sets.
struct HittingProblem {
  std::size_t element_count = 0;
  std::vector<std::vector<std::uint32_t>> sets;
};

struct HittingSolution {
  bool found = false;
  std::vector<std::uint32_t> chosen; // ascending
  bool exhausted = false;
  std::uint64_t nodes = 0;
  bool node_limit_hit = false;
  bool time_limit_hit = false;
};

// Branch and bound: branch on the uncovered set with the fewest candidates,
// excluding earlier siblings; prune with max(disjoint-set packing, ratio)
// bounds. Only solutions smaller than `upper_bound` are reported. The
// solution returned is the first minimum one in serial depth-first order,
// whatever the worker count.
HittingSolution solve_min_hitting(const HittingProblem &problem, std::size_t upper_bound,
                                  const SearchConfig &cfg,
                                  const std::function<void(const std::vector<std::uint32_t> &)> &on_improve = {});

// Node budget used by the command line when none is given.
inline constexpr std::uint64_t kDefaultExactNodeLimit = 2'000'000;

// Fewest omitted edges leaving Q_n free of d-subcubes. The incumbent starts
// from the best of several greedy completions.
SearchResult exact_min_hitting(int n, int d, const SearchConfig &cfg);

// Remove t present edges, re-add as many omitted edges as possible, keep the
// result if it has more edges; repeat until no t-subset improves.
SearchResult perturb(const CubeSubgraph &g, int d, const SearchConfig &cfg);

} // namespace qfree
