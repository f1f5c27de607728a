//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfree/core.hpp"

namespace qfree {

enum class ListMode { present, omitted };

ListMode parse_list_mode(std::string_view text);
const char *to_string(ListMode mode);

/// A spanning subgraph of Q_n stored as a membership bit per edge index.
class CubeSubgraph {
public:
  CubeSubgraph() = default;
  // Empty (no edges) or complete Q_n.
  CubeSubgraph(int n, bool full);

  static CubeSubgraph empty(int n) { return CubeSubgraph(n, false); }
  static CubeSubgraph full(int n) { return CubeSubgraph(n, true); }

  int n() const { return n_; }
  EdgeIndex total() const { return edge_count(n_); }
  EdgeIndex present_count() const;
  EdgeIndex omitted_count() const { return total() - present_count(); }
  // Present edges with star coordinate `direction`.
  EdgeIndex class_present(int direction) const;

  bool has(EdgeIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  bool has(const EdgeRef &e) const { return has(edge_index(e)); }
  void set(EdgeIndex i, bool on);
  void add(EdgeIndex i) { set(i, true); }
  void remove(EdgeIndex i) { set(i, false); }

  std::vector<EdgeIndex> present_edges() const;
  std::vector<EdgeIndex> omitted_edges() const;

  const std::vector<std::uint64_t> &words() const { return words_; }

  friend bool operator==(const CubeSubgraph &, const CubeSubgraph &) = default;
  // Canonical order: compare omitted-edge index lists lexicographically.
  friend bool canonical_less(const CubeSubgraph &a, const CubeSubgraph &b);

private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

CubeSubgraph from_edge_list(int n, const std::vector<EdgeRef> &edges, ListMode mode);

/// Parsed edge-list file: bracket tokens separated by commas or whitespace,
/// '#' comment lines, optional leading "n=<dim>" line.
struct EdgeList {
  int n = 0;
  std::vector<EdgeRef> edges;
};

EdgeList parse_edge_list(std::string_view text);
EdgeList read_edge_list_file(const std::string &path);
std::string format_edge_list(int n, const std::vector<EdgeRef> &edges);
std::string format_subgraph(const CubeSubgraph &g, ListMode mode);

struct FreenessResult {
  bool free = true;
  std::optional<Subcube> witness;
};

// Subcube verification splits the canonical enumeration into contiguous
// ranges, one per worker. workers == 0 means hardware concurrency.
FreenessResult is_free(const CubeSubgraph &g, int d, unsigned workers = 1);
std::vector<Subcube> violations(const CubeSubgraph &g, int d, unsigned workers = 1);
bool subcube_full(const CubeSubgraph &g, const Subcube &s);

struct ClassStats {
  std::vector<EdgeIndex> present;
  std::vector<EdgeIndex> omitted;
  int best_direction = 1; // argmax present, lowest direction on ties
};

ClassStats parallel_class_stats(const CubeSubgraph &g);

struct SplitResult {
  int direction = 1;
  CubeSubgraph half0;
  CubeSubgraph half1;
  std::vector<std::uint32_t> crossing; // ascending fixed-bit words
};

SplitResult split_by_direction(const CubeSubgraph &g, int direction);
CubeSubgraph recombine(const SplitResult &split);

struct MaximalityResult {
  bool maximal = true;
  std::vector<EdgeIndex> addable;
};

MaximalityResult is_maximal(const CubeSubgraph &g, int d);

// Adds omitted edges in `order` (ascending index when empty) whenever the
// addition keeps the graph d-free.
CubeSubgraph greedy_complete(const CubeSubgraph &g, int d, const std::vector<EdgeIndex> &order = {});
std::vector<EdgeIndex> shuffled_edge_order(int n, std::uint64_t seed);

/// Omitted-edge counts per d-subcube, kept in sync with edge edits. A graph
/// is d-free iff no count is zero; an omitted edge is addable iff none of its
/// subcubes has count one.
class SubcubeDeficit {
public:
  SubcubeDeficit(const SubcubeIncidence &inc, const CubeSubgraph &g);

  bool addable(EdgeIndex e) const;
  void on_add(EdgeIndex e);
  void on_remove(EdgeIndex e);
  std::size_t full_subcubes() const { return full_; }
  const std::vector<std::uint16_t> &counts() const { return counts_; }

private:
  const SubcubeIncidence *inc_;
  std::vector<std::uint16_t> counts_;
  std::size_t full_ = 0;
};

unsigned resolve_workers(unsigned workers);

} // namespace qfree
