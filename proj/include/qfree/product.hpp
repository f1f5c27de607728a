//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>

#include "qfree/coloring.hpp"
#include "qfree/subgraph.hpp"

namespace qfree {

/// Inputs of the product of a split base graph on Q_k with an aeo-colored
/// Q_m. The result lives on Q_{k+m-1}: coordinates 1..k-1 are the base
/// coordinates with `direction` deleted, k..k+m-1 are the coordinates of Q_m.
struct ProductSpec {
  CubeSubgraph base;
  int direction = 0; // 0 picks the parallel class with the most present edges
  AeoColoring coloring;
  unsigned parity_convention = 0; // vertex class of Q_{k-1} carrying e cross edges
  ColoringTarget target = ColoringTarget::q3;
};

CubeSubgraph build_product(const ProductSpec &spec);

// Resolved split direction for `spec` (the argmax class when direction == 0).
int product_direction(const ProductSpec &spec);

/// 2^(m-1) (e_k - p_k) + count_a p_k + (count_e + count_o) 2^(k-2).
std::int64_t predicted_edge_count(std::int64_t e_k, std::int64_t p_k, const ColoringStats &stats, int k);

} // namespace qfree
