//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include "qfree/fixtures.hpp"

#include "qfree/search.hpp"

namespace qfree {

const std::vector<std::string_view> &g7_omitted_tokens() {
  static const std::vector<std::string_view> tokens = {
      "[*000000]", "[000*010]", "[0000*11]", "[*000011]", "[000*101]", "[*000101]",
      "[*000110]", "[0001*00]", "[*001001]", "[*001010]", "[*001100]", "[*001111]",
      "[001000*]", "[0*10001]", "[0*10010]", "[00101*0]", "[0*10100]", "[0*10111]",
      "[0*11000]", "[00110*1]", "[0*11011]", "[0*11101]", "[001111*]", "[0*11110]",
      "[010000*]", "[01001*0]", "[01010*1]", "[010111*]", "[011*010]", "[0110*11]",
      "[011*101]", "[0111*00]", "[100000*]", "[10001*0]", "[10010*1]", "[100111*]",
      "[101*010]", "[1010*11]", "[101*101]", "[1011*00]", "[11*0001]", "[110*010]",
      "[11*0010]", "[1100*11]", "[11*0100]", "[110*101]", "[11*0111]", "[1101*00]",
      "[11*1000]", "[11*1011]", "[11*1101]", "[11*1110]", "[111000*]", "[11101*0]",
      "[11110*1]", "[111111*]",
  };
  return tokens;
}

CubeSubgraph g7_fixture() {
  std::vector<EdgeRef> edges;
  for (std::string_view t : g7_omitted_tokens())
    edges.push_back(parse_edge(t));
  return from_edge_list(7, edges, ListMode::omitted);
}

namespace {

int suffix_dimension(std::string_view name, std::string_view prefix) {
  const std::string digits(name.substr(prefix.size()));
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(digits, &used);
  } catch (const std::exception &) {
    throw Error("bad dimension in '" + std::string(name) + "'");
  }
  if (used != digits.size())
    throw Error("bad dimension in '" + std::string(name) + "'");
  check_dimension(n);
  return n;
}

} // namespace

bool is_named_graph(std::string_view name) { return !name.empty() && name.front() == '@'; }

CubeSubgraph named_graph(std::string_view name) {
  if (name == "@g7")
    return g7_fixture();
  if (name == "@g4" || name == "@g5") {
    SearchConfig cfg;
    cfg.worker_count = 1;
    const SearchResult r = exact_min_hitting(name == "@g4" ? 4 : 5, 3, cfg);
    if (!r.optimal)
      throw Error("exact search did not finish for " + std::string(name));
    return r.best;
  }
  if (name.starts_with("@full:"))
    return CubeSubgraph::full(suffix_dimension(name, "@full:"));
  if (name.starts_with("@empty:"))
    return CubeSubgraph::empty(suffix_dimension(name, "@empty:"));
  throw Error("unknown named graph '" + std::string(name) + "'");
}

std::vector<std::string> named_graph_list() { return {"@g7", "@g4", "@g5", "@full:N", "@empty:N"}; }

} // namespace qfree
