//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include "qfree/product.hpp"

#include <bit>
#include <vector>

#include "qfree/recurrence.hpp"

namespace qfree {

int product_direction(const ProductSpec &spec) {
  if (spec.direction == 0)
    return parallel_class_stats(spec.base).best_direction;
  if (spec.direction < 1 || spec.direction > spec.base.n())
    throw Error("split direction " + std::to_string(spec.direction) + " out of range");
  return spec.direction;
}

CubeSubgraph build_product(const ProductSpec &spec) {
  const int k = spec.base.n();
  const int m = spec.coloring.m();
  if (k < 2)
    throw Error("product needs a base of dimension >= 2");
  const ColoringReport report = validate(spec.coloring, spec.target);
  if (!report.ok) {
    std::string msg = "coloring fails the " + std::string(to_string(spec.target)) + " conditions:";
    for (const auto &v : report.violations)
      msg += " " + format_subcube(v.where) + "(" + std::to_string(v.condition) + ")";
    throw Error(msg);
  }
  const int n = k - 1 + m;
  check_dimension(n);
  const int dir = product_direction(spec);
  const SplitResult split = split_by_direction(spec.base, dir);
  std::vector<bool> crossing(std::size_t{1} << (k - 1), false);
  for (std::uint32_t w : split.crossing)
    crossing[w] = true;

  const int h = k - 1;
  CubeSubgraph out(n, false);
  const std::uint32_t copies = std::uint32_t{1} << m;
  const std::uint32_t half_vertices = std::uint32_t{1} << h;

  // Copies of the halves: even u carries half0, odd u carries half1.
  for (std::uint32_t u = 0; u < copies; ++u) {
    const CubeSubgraph &half = (std::popcount(u) & 1) ? split.half1 : split.half0;
    for (EdgeIndex i = 0; i < half.total(); ++i) {
      if (!half.has(i))
        continue;
      const EdgeRef e = edge_from_index(h, i);
      out.add(edge_index_at(n, (e.lower() << m) | u, e.star_pos));
    }
  }

  // Cross edges, one per Q_m edge and vertex of Q_{k-1}.
  for (EdgeIndex j = 0; j < edge_count(m); ++j) {
    const EdgeRef ue = edge_from_index(m, j);
    const AeoColor color = spec.coloring.at(j);
    const std::uint32_t u = ue.lower();
    for (std::uint32_t v = 0; v < half_vertices; ++v) {
      bool keep = false;
      switch (color) {
      case AeoColor::a:
        keep = crossing[v];
        break;
      case AeoColor::e:
        keep = (static_cast<unsigned>(std::popcount(v)) & 1U) == (spec.parity_convention & 1U);
        break;
      case AeoColor::o:
        keep = (static_cast<unsigned>(std::popcount(v)) & 1U) != (spec.parity_convention & 1U);
        break;
      }
      if (keep)
        out.add(edge_index_at(n, (v << m) | u, h + ue.star_pos));
    }
  }
  return out;
}

std::int64_t predicted_edge_count(std::int64_t e_k, std::int64_t p_k, const ColoringStats &stats, int k) {
  return step_edges(e_k, p_k, stats, k);
}

} // namespace qfree
