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
#include "qfree/subgraph.hpp"

namespace qfree {

// a: cross edges follow the base graph's split class; e / o: cross edges
// on the even / odd vertex class of the copies.
enum class AeoColor : std::uint8_t { a = 0, e = 1, o = 2 };

char to_char(AeoColor c);

struct ColoringStats {
  int m = 0;
  std::int64_t count_a = 0;
  std::int64_t count_e = 0;
  std::int64_t count_o = 0;

  std::int64_t non_a() const { return count_e + count_o; }
  friend bool operator==(const ColoringStats &, const ColoringStats &) = default;
};

class AeoColoring {
public:
  AeoColoring() = default;
  explicit AeoColoring(int m); // everything colored a

  int m() const { return m_; }
  AeoColor at(EdgeIndex i) const { return colors_[static_cast<std::size_t>(i)]; }
  AeoColor at(const EdgeRef &e) const { return at(edge_index(e)); }
  void set(EdgeIndex i, AeoColor c) { colors_[static_cast<std::size_t>(i)] = c; }
  void set(const EdgeRef &e, AeoColor c);

  ColoringStats stats() const;
  std::vector<EdgeIndex> edges_with(AeoColor c) const;
  // Subgraph of Q_m formed by the a-colored edges.
  CubeSubgraph a_subgraph() const;

  friend bool operator==(const AeoColoring &, const AeoColoring &) = default;

private:
  int m_ = 0;
  std::vector<AeoColor> colors_;
};

std::vector<std::string> builtin_coloring_names();
AeoColoring builtin_coloring(std::string_view name);

// File form: optional "m=<dim>" line, then "e:" and "o:" sections of bracket
// tokens. Unlisted edges are a.
AeoColoring parse_coloring(std::string_view text);
AeoColoring read_coloring_file(const std::string &path);
std::string format_coloring(const AeoColoring &c);

enum class ColoringTarget { c4, q3 };

ColoringTarget parse_coloring_target(std::string_view text);
const char *to_string(ColoringTarget t);

struct ColoringViolation {
  Subcube where;
  // 1: Q3 lacking an e-edge or an o-edge. 2: Q2 without any e/o edge.
  // 0: C4 target, Q2 lacking an e-edge or an o-edge.
  int condition = 0;
  friend bool operator==(const ColoringViolation &, const ColoringViolation &) = default;
};

struct ColoringReport {
  bool ok = true;
  std::vector<ColoringViolation> violations;
};

ColoringReport validate(const AeoColoring &c, ColoringTarget target);

struct SplitOutcome {
  std::optional<AeoColoring> coloring;
  std::optional<Subcube> witness; // full Q3 that blocks any split
  std::string failure;
  std::uint64_t nodes = 0;
};

/// Colour the edges of `h` with a and split its non-edges into e and o so
/// that every Q3 of Q_m receives at least one e-edge and one o-edge.
/// Backtracking over non-edges in ascending index, trying e before o.
SplitOutcome split_nonedges_to_eo(const CubeSubgraph &h);

} // namespace qfree
