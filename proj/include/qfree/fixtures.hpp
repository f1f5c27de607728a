//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qfree/subgraph.hpp"

namespace qfree {

// Omitted edges of the 392-edge Q3-free subgraph of Q7, in published order.
const std::vector<std::string_view> &g7_omitted_tokens();
CubeSubgraph g7_fixture();

// Named graphs accepted wherever a graph file is expected:
//   @g7       the Q7 fixture above
//   @g4, @g5  minimum-omission Q3-free graphs found by exact search
//   @full:N   complete Q_N
//   @empty:N  edgeless Q_N
bool is_named_graph(std::string_view name);
CubeSubgraph named_graph(std::string_view name);
std::vector<std::string> named_graph_list();

} // namespace qfree
