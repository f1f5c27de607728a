//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfree {

// Largest hypercube dimension accepted anywhere in the library. Vertex words
// fit in 32 bits; edge indices and all counters are 64-bit.
inline constexpr int kMaxDimension = 30;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

using EdgeIndex = std::uint64_t;

// Coordinates are numbered 1..n from the left of a bracket token. Inside a
// vertex word coordinate i lives at bit (n - i), so "[0110]" reads as the
// binary number 0110.
constexpr std::uint32_t coord_bit(int n, int coord) {
  return std::uint32_t{1} << (n - coord);
}

void check_dimension(int n);

std::uint64_t binomial(int n, int k);

// Scatter the low bits of `bits` into the set positions of `mask`
// (lowest mask bit first).
std::uint32_t deposit_bits(std::uint32_t bits, std::uint32_t mask);
// Gather the bits of `word` at the set positions of `mask` into a dense value.
std::uint32_t extract_bits(std::uint32_t word, std::uint32_t mask);

// Insert `bit` as coordinate `coord` of an (n+1)-bit word built from the
// n-bit word `word`.
std::uint32_t insert_coord(std::uint32_t word, int n, int coord, unsigned bit);
// Delete coordinate `coord` from an n-bit word.
std::uint32_t delete_coord(std::uint32_t word, int n, int coord);

struct Vertex {
  int n = 0;
  std::uint32_t bits = 0;

  unsigned parity() const { return static_cast<unsigned>(__builtin_popcount(bits)) & 1U; }
  friend bool operator==(const Vertex &, const Vertex &) = default;
};

std::string format_vertex(const Vertex &v);

/// One edge of Q_n in star notation.
///
/// `fixed_bits` holds the n-1 non-star coordinates read left to right as a
/// binary number.
struct EdgeRef {
  int n = 0;
  int star_pos = 1;
  std::uint32_t fixed_bits = 0;

  // Endpoint with 0 at the star coordinate.
  std::uint32_t lower() const;
  std::uint32_t upper() const { return lower() | coord_bit(n, star_pos); }
  // Character ('0' or '1') at coordinate `coord`; the star coordinate is '*'.
  char coord_char(int coord) const;

  friend bool operator==(const EdgeRef &, const EdgeRef &) = default;
};

EdgeRef parse_edge(std::string_view text);
std::string format_edge(const EdgeRef &e);

// Build an edge from its lower endpoint and the star coordinate.
EdgeRef edge_from_vertex(int n, std::uint32_t lower, int star_pos);

EdgeIndex edge_count(int n);
EdgeIndex edge_index(const EdgeRef &e);
EdgeRef edge_from_index(int n, EdgeIndex i);

// Index of the edge leaving `vertex` along coordinate `star_pos`, whichever
// endpoint `vertex` is.
inline EdgeIndex edge_index_at(int n, std::uint32_t vertex, int star_pos) {
  const int b = n - star_pos;
  const std::uint32_t low = vertex & ((std::uint32_t{1} << b) - 1);
  const std::uint32_t high = vertex >> (b + 1);
  return (static_cast<EdgeIndex>(star_pos - 1) << (n - 1)) | (high << b) | low;
}

/// (#ones left of the star) - (#ones right of the star).
int edge_p_value(const EdgeRef &e);

/// A d-dimensional subcube of Q_n: the vertices that agree with `fixed_bits`
/// on the n-d coordinates outside `star_mask`.
struct Subcube {
  int n = 0;
  int d = 0;
  std::uint32_t star_mask = 0;  // vertex-bit positions of the free coordinates
  std::uint32_t fixed_bits = 0; // non-star coordinates, left to right

  std::uint32_t base() const;
  std::vector<int> stars() const;
  bool contains(const EdgeRef &e) const;

  friend bool operator==(const Subcube &, const Subcube &) = default;
};

Subcube make_subcube(int n, const std::vector<int> &stars, std::uint32_t fixed_bits);
std::string format_subcube(const Subcube &s);

// Star masks of all d-subsets of coordinates 1..n in lexicographic order of
// the coordinate tuples.
std::vector<std::uint32_t> star_combinations(int n, int d);

std::uint64_t subcube_count(int n, int d);
std::vector<Subcube> enumerate_subcubes(int n, int d);

/// Random-access view over the canonical subcube order: stars in
/// lexicographic combination order, then fixed bits ascending.
class SubcubeRange {
public:
  SubcubeRange(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  std::uint64_t size() const { return combos_.size() << (n_ - d_); }
  Subcube operator[](std::uint64_t i) const;
  std::uint64_t index_of(const Subcube &s) const;

private:
  int n_;
  int d_;
  std::vector<std::uint32_t> combos_;
};

std::vector<EdgeRef> subcube_edges(const Subcube &s);
// Same edges as indices, in the order of subcube_edges.
void subcube_edge_indices(const Subcube &s, std::vector<EdgeIndex> &out);

/// Edge/subcube incidence for one (n, d): which edges each subcube holds
/// and which subcubes hold each edge.
class SubcubeIncidence {
public:
  SubcubeIncidence(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t subcube_count() const { return subcube_count_; }
  std::size_t edges_per_subcube() const { return edges_per_; }
  std::size_t subcubes_per_edge() const { return per_edge_; }

  const std::uint32_t *edges_of(std::size_t subcube) const {
    return subcube_edges_.data() + subcube * edges_per_;
  }
  const std::uint32_t *subcubes_of(EdgeIndex edge) const {
    return edge_subcubes_.data() + edge * per_edge_;
  }

private:
  int n_;
  int d_;
  std::size_t subcube_count_;
  std::size_t edges_per_;
  std::size_t per_edge_;
  std::vector<std::uint32_t> subcube_edges_;
  std::vector<std::uint32_t> edge_subcubes_;
};

} // namespace qfree
