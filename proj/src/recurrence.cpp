//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include "qfree/recurrence.hpp"

#include <array>
#include <cstdio>
#include <sstream>

namespace qfree {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error("recurrence overflow");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw Error("recurrence overflow");
  return r;
}

std::int64_t pow2(int e) {
  if (e < 0 || e > 62)
    throw Error("recurrence overflow");
  return std::int64_t{1} << e;
}

void check_stats(const ColoringStats &stats) {
  if (stats.m < 1 || stats.count_a < 0 || stats.count_e < 0 || stats.count_o < 0 ||
      stats.count_a + stats.count_e + stats.count_o != total_edges(stats.m))
    throw Error("inconsistent coloring stats");
}

void check_k(int k) {
  if (k < 2 || k > 62)
    throw Error("recurrence needs 2 <= k <= 62, got " + std::to_string(k));
}

} // namespace

std::int64_t total_edges(int k) {
  if (k < 1)
    return 0;
  return mul(k, pow2(k - 1));
}

std::int64_t step_edges(std::int64_t e_k, std::int64_t p_k, const ColoringStats &stats, int k) {
  check_k(k);
  check_stats(stats);
  if (p_k < 0 || p_k > e_k || e_k > total_edges(k) || p_k > pow2(k - 1))
    throw Error("step_edges needs 0 <= p_k <= e_k <= k 2^(k-1)");
  std::int64_t r = mul(pow2(stats.m - 1), e_k - p_k);
  r = add(r, mul(stats.count_a, p_k));
  return add(r, mul(stats.non_a(), pow2(k - 2)));
}

std::int64_t step_omitted(std::int64_t c_k, std::int64_t q_k, const ColoringStats &stats, int k) {
  check_k(k);
  check_stats(stats);
  if (q_k < 0 || q_k > c_k || c_k > total_edges(k) || q_k > pow2(k - 1))
    throw Error("step_omitted needs 0 <= q_k <= c_k <= k 2^(k-1)");
  const std::int64_t half = pow2(stats.m - 1);
  std::int64_t r = mul(half, c_k);
  r = add(r, mul(stats.count_a - half, q_k));
  return add(r, mul(stats.non_a(), pow2(k - 2)));
}

std::int64_t pigeonhole_q(std::int64_t c_k, int k) {
  if (c_k < 0 || k < 1)
    throw Error("pigeonhole_q needs c_k >= 0 and k >= 1");
  return c_k / k;
}

BoundState advance(const BoundState &s, const ColoringStats &stats) {
  const int next_k = s.k + stats.m - 1;
  const std::int64_t c = step_omitted(s.c_k, s.q_k, stats, s.k);
  return {next_k, c, pigeonhole_q(c, next_k)};
}

std::optional<std::int64_t> stored_lower_bound(int k) {
  static constexpr std::array<std::int64_t, 21> lb = {
      52,       119,      268,      596,      1312,      2863,      6204,
      13363,    28635,    61088,    129812,   274896,    580336,    1221760,
      2565696,  5375744,  11240192, 23457792, 48870400,  101650432, 211120128};
  if (k < 7 || k > 27)
    return std::nullopt;
  return lb[static_cast<std::size_t>(k - 7)];
}

std::vector<TableRow> bound_table(const std::map<int, std::int64_t> &seeds, const ColoringStats &stats,
                                  int k_max) {
  if (seeds.empty())
    throw Error("bound table needs at least one seed");
  const int step = stats.m - 1;
  if (step < 1)
    throw Error("coloring dimension must be >= 2 to advance k");
  const int k_min = seeds.begin()->first;
  std::map<int, std::int64_t> ub;
  std::vector<TableRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    TableRow row;
    row.k = k;
    if (auto it = seeds.find(k); it != seeds.end()) {
      row.seeded = true;
      row.upper_bound = it->second;
      if (row.upper_bound < 0 || row.upper_bound > total_edges(k))
        throw Error("seed for k=" + std::to_string(k) + " out of range");
    } else {
      const int prev = k - step;
      const auto p = ub.find(prev);
      if (p == ub.end()) {
        // rows off every seed's chain are skipped; the last row must exist
        if (k == k_max)
          throw Error("k=" + std::to_string(k) + " is not reachable from the seeds");
        continue;
      }
      row.upper_bound = step_omitted(p->second, pigeonhole_q(p->second, prev), stats, prev);
    }
    ub[k] = row.upper_bound;
    const auto total = static_cast<double>(total_edges(k));
    row.ub_ratio = static_cast<double>(row.upper_bound) / total;
    row.lower_bound = stored_lower_bound(k);
    if (row.lower_bound)
      row.lb_ratio = static_cast<double>(*row.lower_bound) / total;
    rows.push_back(row);
  }
  return rows;
}

std::map<int, std::int64_t> parse_seeds(const std::string &text) {
  std::map<int, std::int64_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("seed '" + item + "' is not of the form k:c");
    try {
      out[std::stoi(item.substr(0, colon))] = std::stoll(item.substr(colon + 1));
    } catch (const std::exception &) {
      throw ParseError("seed '" + item + "' is not of the form k:c");
    }
  }
  if (out.empty())
    throw ParseError("no seeds given");
  return out;
}

std::string format_ratio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", r);
  return buf;
}

} // namespace qfree
