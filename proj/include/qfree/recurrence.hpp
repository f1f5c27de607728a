//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfree/coloring.hpp"

namespace qfree {

// Omitted-edge state of a Q3-free G_k: c_k omitted edges overall, q_k of them
// in the parallel class used for the split.
struct BoundState {
  int k = 0;
  std::int64_t c_k = 0;
  std::int64_t q_k = 0;
};

std::int64_t total_edges(int k);

// Present-edge form: 2^(m-1) (e - p) + a p + (e_count + o_count) 2^(k-2).
std::int64_t step_edges(std::int64_t e_k, std::int64_t p_k, const ColoringStats &stats, int k);
// Omitted-edge form: 2^(m-1) c + (a - 2^(m-1)) q + (e_count + o_count) 2^(k-2).
std::int64_t step_omitted(std::int64_t c_k, std::int64_t q_k, const ColoringStats &stats, int k);
// Best class omits at most the average.
std::int64_t pigeonhole_q(std::int64_t c_k, int k);

// One product step with the pigeonhole class bound.
BoundState advance(const BoundState &s, const ColoringStats &stats);

struct TableRow {
  int k = 0;
  std::optional<std::int64_t> lower_bound;
  std::int64_t upper_bound = 0;
  bool seeded = false;
  std::optional<double> lb_ratio;
  double ub_ratio = 0.0;
};

// Lower bounds for c(Q3, k), k = 7..27, as published alongside the table.
std::optional<std::int64_t> stored_lower_bound(int k);

std::vector<TableRow> bound_table(const std::map<int, std::int64_t> &seeds, const ColoringStats &stats,
                                  int k_max);

std::map<int, std::int64_t> parse_seeds(const std::string &text);
std::string format_ratio(double r);

} // namespace qfree
