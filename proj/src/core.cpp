//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include "qfree/core.hpp"

#include <algorithm>
#include <bit>

namespace qfree {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension)
    throw Error("dimension " + std::to_string(n) + " outside [1, " +
                std::to_string(kMaxDimension) + "]");
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint32_t deposit_bits(std::uint32_t bits, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    if (bits & 1U)
      out |= m & -m;
    bits >>= 1;
  }
  return out;
}

std::uint32_t extract_bits(std::uint32_t word, std::uint32_t mask) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1, ++k)
    if (word & (m & -m))
      out |= std::uint32_t{1} << k;
  return out;
}

std::uint32_t insert_coord(std::uint32_t word, int n, int coord, unsigned bit) {
  // result has n+1 coordinates; coordinate `coord` sits at bit (n+1-coord)
  const int b = n + 1 - coord;
  const std::uint32_t low = word & ((std::uint32_t{1} << b) - 1);
  const std::uint32_t high = word >> b;
  return (high << (b + 1)) | (static_cast<std::uint32_t>(bit & 1U) << b) | low;
}

std::uint32_t delete_coord(std::uint32_t word, int n, int coord) {
  const int b = n - coord;
  const std::uint32_t low = word & ((std::uint32_t{1} << b) - 1);
  const std::uint32_t high = word >> (b + 1);
  return (high << b) | low;
}

std::string format_vertex(const Vertex &v) {
  std::string s(static_cast<std::size_t>(v.n), '0');
  for (int c = 1; c <= v.n; ++c)
    if (v.bits & coord_bit(v.n, c))
      s[static_cast<std::size_t>(c - 1)] = '1';
  return s;
}

std::uint32_t EdgeRef::lower() const {
  return insert_coord(fixed_bits, n - 1, star_pos, 0);
}

char EdgeRef::coord_char(int coord) const {
  if (coord == star_pos)
    return '*';
  return (lower() & coord_bit(n, coord)) ? '1' : '0';
}

EdgeRef parse_edge(std::string_view text) {
  auto fail = [&](const char *why) {
    return ParseError("malformed edge token '" + std::string(text) + "': " + why);
  };
  if (text.size() < 3 || text.front() != '[' || text.back() != ']')
    throw fail("expected '[' ... ']'");
  const std::string_view body = text.substr(1, text.size() - 2);
  const int n = static_cast<int>(body.size());
  if (n > kMaxDimension)
    throw fail("dimension too large");
  EdgeRef e;
  e.n = n;
  int stars = 0;
  std::uint32_t fixed = 0;
  for (int i = 0; i < n; ++i) {
    const char ch = body[static_cast<std::size_t>(i)];
    if (ch == '*') {
      ++stars;
      e.star_pos = i + 1;
    } else if (ch == '0' || ch == '1') {
      fixed = (fixed << 1) | static_cast<std::uint32_t>(ch - '0');
    } else {
      throw fail("characters must be 0, 1 or *");
    }
  }
  if (stars != 1)
    throw fail("exactly one '*' required");
  e.fixed_bits = fixed;
  return e;
}

std::string format_edge(const EdgeRef &e) {
  std::string s = "[";
  for (int c = 1; c <= e.n; ++c)
    s += e.coord_char(c);
  s += ']';
  return s;
}

EdgeRef edge_from_vertex(int n, std::uint32_t lower, int star_pos) {
  return EdgeRef{n, star_pos, delete_coord(lower, n, star_pos)};
}

EdgeIndex edge_count(int n) {
  return static_cast<EdgeIndex>(n) << (n - 1);
}

EdgeIndex edge_index(const EdgeRef &e) {
  return (static_cast<EdgeIndex>(e.star_pos - 1) << (e.n - 1)) + e.fixed_bits;
}

EdgeRef edge_from_index(int n, EdgeIndex i) {
  check_dimension(n);
  if (i >= edge_count(n))
    throw Error("edge index " + std::to_string(i) + " out of range for Q" + std::to_string(n));
  const EdgeIndex per_class = EdgeIndex{1} << (n - 1);
  return EdgeRef{n, static_cast<int>(i / per_class) + 1,
                 static_cast<std::uint32_t>(i % per_class)};
}

int edge_p_value(const EdgeRef &e) {
  const std::uint32_t v = e.lower();
  const int b = e.n - e.star_pos;
  const int after = std::popcount(v & ((std::uint32_t{1} << b) - 1));
  const int before = std::popcount(v >> (b + 1));
  return before - after;
}

std::uint32_t Subcube::base() const {
  const std::uint32_t all = n == 32 ? ~0U : ((std::uint32_t{1} << n) - 1);
  return deposit_bits(fixed_bits, all & ~star_mask);
}

std::vector<int> Subcube::stars() const {
  std::vector<int> out;
  for (int c = 1; c <= n; ++c)
    if (star_mask & coord_bit(n, c))
      out.push_back(c);
  return out;
}

bool Subcube::contains(const EdgeRef &e) const {
  if (e.n != n || !(star_mask & coord_bit(n, e.star_pos)))
    return false;
  return (e.lower() & ~star_mask) == base();
}

Subcube make_subcube(int n, const std::vector<int> &stars, std::uint32_t fixed_bits) {
  check_dimension(n);
  Subcube s{n, static_cast<int>(stars.size()), 0, fixed_bits};
  for (int c : stars) {
    if (c < 1 || c > n || (s.star_mask & coord_bit(n, c)))
      throw Error("invalid subcube star coordinate " + std::to_string(c));
    s.star_mask |= coord_bit(n, c);
  }
  if (s.d < n && fixed_bits >> (n - s.d) != 0)
    throw Error("subcube fixed bits out of range");
  return s;
}

std::string format_subcube(const Subcube &s) {
  std::string out = "[";
  const std::uint32_t b = s.base();
  for (int c = 1; c <= s.n; ++c) {
    const std::uint32_t bit = coord_bit(s.n, c);
    out += (s.star_mask & bit) ? '*' : ((b & bit) ? '1' : '0');
  }
  out += ']';
  return out;
}

std::vector<std::uint32_t> star_combinations(int n, int d) {
  std::vector<std::uint32_t> out;
  if (d < 0 || d > n)
    return out;
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    std::uint32_t mask = 0;
    for (int c : idx)
      mask |= coord_bit(n, c);
    out.push_back(mask);
    int i = d - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - d + i + 1)
      --i;
    if (i < 0)
      break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::uint64_t subcube_count(int n, int d) {
  if (d < 0 || d > n)
    return 0;
  return binomial(n, d) << (n - d);
}

SubcubeRange::SubcubeRange(int n, int d) : n_(n), d_(d), combos_(star_combinations(n, d)) {
  check_dimension(n);
}

Subcube SubcubeRange::operator[](std::uint64_t i) const {
  const int free_bits = n_ - d_;
  return Subcube{n_, d_, combos_[static_cast<std::size_t>(i >> free_bits)],
                 static_cast<std::uint32_t>(i & ((std::uint64_t{1} << free_bits) - 1))};
}

std::uint64_t SubcubeRange::index_of(const Subcube &s) const {
  const auto it = std::lower_bound(combos_.begin(), combos_.end(), s.star_mask,
                                   [](std::uint32_t a, std::uint32_t b) { return a > b; });
  if (it == combos_.end() || *it != s.star_mask)
    throw Error("subcube not in range");
  return (static_cast<std::uint64_t>(it - combos_.begin()) << (n_ - d_)) | s.fixed_bits;
}

std::vector<Subcube> enumerate_subcubes(int n, int d) {
  std::vector<Subcube> out;
  if (d < 0 || d > n)
    return out;
  const SubcubeRange range(n, d);
  out.reserve(static_cast<std::size_t>(range.size()));
  for (std::uint64_t i = 0; i < range.size(); ++i)
    out.push_back(range[i]);
  return out;
}

namespace {

template <typename Fn> void for_each_subcube_edge(const Subcube &s, Fn &&fn) {
  const std::uint32_t base = s.base();
  for (int c = 1; c <= s.n; ++c) {
    const std::uint32_t bit = coord_bit(s.n, c);
    if (!(s.star_mask & bit))
      continue;
    const std::uint32_t others = s.star_mask & ~bit;
    const std::uint32_t count = std::uint32_t{1} << (s.d - 1);
    for (std::uint32_t a = 0; a < count; ++a)
      fn(base | deposit_bits(a, others), c);
  }
}

} // namespace

std::vector<EdgeRef> subcube_edges(const Subcube &s) {
  std::vector<EdgeRef> out;
  if (s.d < 1)
    return out;
  out.reserve(static_cast<std::size_t>(s.d) << (s.d - 1));
  for_each_subcube_edge(s, [&](std::uint32_t v, int c) { out.push_back(edge_from_vertex(s.n, v, c)); });
  return out;
}

void subcube_edge_indices(const Subcube &s, std::vector<EdgeIndex> &out) {
  out.clear();
  if (s.d < 1)
    return;
  for_each_subcube_edge(s, [&](std::uint32_t v, int c) { out.push_back(edge_index_at(s.n, v, c)); });
}

SubcubeIncidence::SubcubeIncidence(int n, int d) : n_(n), d_(d) {
  check_dimension(n);
  if (d < 1 || d > n)
    throw Error("incidence needs 1 <= d <= n");
  if (n > 20)
    throw Error("incidence table too large for n > 20");
  const SubcubeRange range(n, d);
  subcube_count_ = static_cast<std::size_t>(range.size());
  edges_per_ = static_cast<std::size_t>(d) << (d - 1);
  per_edge_ = static_cast<std::size_t>(binomial(n - 1, d - 1));
  const auto edges = static_cast<std::size_t>(edge_count(n));
  subcube_edges_.resize(subcube_count_ * edges_per_);
  edge_subcubes_.resize(edges * per_edge_);
  std::vector<std::size_t> fill(edges, 0);
  std::vector<EdgeIndex> scratch;
  for (std::size_t i = 0; i < subcube_count_; ++i) {
    subcube_edge_indices(range[i], scratch);
    for (std::size_t j = 0; j < edges_per_; ++j) {
      const auto e = static_cast<std::size_t>(scratch[j]);
      subcube_edges_[i * edges_per_ + j] = static_cast<std::uint32_t>(e);
      edge_subcubes_[e * per_edge_ + fill[e]++] = static_cast<std::uint32_t>(i);
    }
  }
}

} // namespace qfree
