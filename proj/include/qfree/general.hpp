//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qfree/subgraph.hpp"

namespace qfree {

// Residue of p(e) modulo 4, normalised to 0..3.
int p_residue(const EdgeRef &e);

struct ResidueClass {
  int n = 0;
  int r = 0;
  std::vector<EdgeIndex> members; // ascending edge index
};

ResidueClass residue_class(int n, int r);

// Class sizes for r = 0..3 from a closed-form count; no edge enumeration.
std::array<std::uint64_t, 4> residue_class_sizes(int n);

struct CoveringResult {
  bool covered = true;
  std::optional<Subcube> uncovered;
};

// Every Q3 of Q_n contains an edge of residue r.
CoveringResult covering_check(int n, int r, unsigned workers = 1);

// r in 0..3, or nullopt for the smallest class (lowest r on ties).
CubeSubgraph general_construction(int n, std::optional<int> r = std::nullopt);
int smallest_residue(int n);

// Two edges of the Q3 `s` whose p-values differ by 2 and share the parity of
// r, so one of them has residue r.
std::pair<EdgeRef, EdgeRef> case_witness(const Subcube &s, int r);

} // namespace qfree
