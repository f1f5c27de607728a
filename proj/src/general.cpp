//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include "qfree/general.hpp"

#include <atomic>
#include <bit>

#include "parallel.hpp"

namespace qfree {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

void check_residue(int r) {
  if (r < 0 || r > 3)
    throw Error("residue must be in 0..3, got " + std::to_string(r));
}

} // namespace

int p_residue(const EdgeRef &e) { return mod4(edge_p_value(e)); }

ResidueClass residue_class(int n, int r) {
  check_dimension(n);
  check_residue(r);
  ResidueClass c{n, r, {}};
  for (EdgeIndex i = 0; i < edge_count(n); ++i)
    if (p_residue(edge_from_index(n, i)) == r)
      c.members.push_back(i);
  return c;
}

std::array<std::uint64_t, 4> residue_class_sizes(int n) {
  check_dimension(n);
  std::array<std::uint64_t, 4> sizes{};
  // star at coordinate s: i ones among the s-1 coordinates before it, j among
  // the n-s after it
  for (int s = 1; s <= n; ++s)
    for (int i = 0; i <= s - 1; ++i)
      for (int j = 0; j <= n - s; ++j)
        sizes[static_cast<std::size_t>(mod4(i - j))] += binomial(s - 1, i) * binomial(n - s, j);
  return sizes;
}

CoveringResult covering_check(int n, int r, unsigned workers) {
  check_residue(r);
  if (n < 3)
    throw Error("covering_check needs n >= 3");
  check_dimension(n);
  const SubcubeRange range(n, 3);
  std::atomic<std::uint64_t> first{range.size()};
  detail::run_ranges(range.size(), resolve_workers(workers), [&](std::uint64_t b, std::uint64_t e, unsigned) {
    std::vector<EdgeIndex> scratch;
    for (std::uint64_t i = b; i < e && i < first.load(std::memory_order_relaxed); ++i) {
      subcube_edge_indices(range[i], scratch);
      bool hit = false;
      for (EdgeIndex x : scratch)
        if (p_residue(edge_from_index(n, x)) == r) {
          hit = true;
          break;
        }
      if (!hit) {
        std::uint64_t cur = first.load();
        while (i < cur && !first.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  CoveringResult res;
  if (first.load() < range.size()) {
    res.covered = false;
    res.uncovered = range[first.load()];
  }
  return res;
}

int smallest_residue(int n) {
  const auto sizes = residue_class_sizes(n);
  int best = 0;
  for (int r = 1; r < 4; ++r)
    if (sizes[static_cast<std::size_t>(r)] < sizes[static_cast<std::size_t>(best)])
      best = r;
  return best;
}

CubeSubgraph general_construction(int n, std::optional<int> r) {
  if (n < 3)
    throw Error("general construction needs n >= 3");
  const int residue = r ? *r : smallest_residue(n);
  check_residue(residue);
  const CoveringResult cover = covering_check(n, residue);
  if (!cover.covered)
    throw Error("residue class " + std::to_string(residue) + " misses the Q3 " +
                format_subcube(*cover.uncovered) + " of Q" + std::to_string(n));
  CubeSubgraph g(n, true);
  for (EdgeIndex i : residue_class(n, residue).members)
    g.remove(i);
  const FreenessResult check = is_free(g, 3);
  if (!check.free)
    throw Error("general construction is not Q3-free at " + format_subcube(*check.witness));
  return g;
}

std::pair<EdgeRef, EdgeRef> case_witness(const Subcube &s, int r) {
  check_residue(r);
  if (s.d != 3)
    throw Error("case_witness needs a Q3 subcube");
  const std::vector<int> stars = s.stars();
  const int n = s.n;
  const std::uint32_t base = s.base();
  const int ones = std::popcount(base);
  auto edge_at = [&](int star, int c1, unsigned b1, int c2, unsigned b2) {
    std::uint32_t v = base;
    if (b1)
      v |= coord_bit(n, c1);
    if (b2)
      v |= coord_bit(n, c2);
    return edge_from_vertex(n, v, star);
  };
  // Star on the first free coordinate with equal bits on the other two gives
  // p-values P and P-2 with P = |a| - |b| - |c| - |d|; star on the middle one
  // with unequal bits gives S+1 and S-1 with S = |a| + |b| - |c| - |d|. Both
  // pairs have the parity of |a|+|b|+|c|+|d| in the first form and the
  // opposite parity in the second.
  if (((ones + r) & 1) == 0)
    return {edge_at(stars[0], stars[1], 0, stars[2], 0), edge_at(stars[0], stars[1], 1, stars[2], 1)};
  return {edge_at(stars[1], stars[0], 1, stars[2], 0), edge_at(stars[1], stars[0], 0, stars[2], 1)};
}

} // namespace qfree
