//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qfree/fixtures.hpp"
#include "qfree/search.hpp"
#include "qfree/subgraph.hpp"

using namespace qfree;

namespace {

CubeSubgraph q3_minus(std::initializer_list<const char *> tokens) {
  std::vector<EdgeRef> edges;
  for (const char *t : tokens)
    edges.push_back(parse_edge(t));
  return from_edge_list(3, edges, ListMode::omitted);
}

// Largest Q3-free subgraph of Q3 by trying all 2^12 edge sets.
int brute_max_q3_free_q3() {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << 12); ++mask) {
    CubeSubgraph g(3, false);
    for (EdgeIndex i = 0; i < 12; ++i)
      if ((mask >> i) & 1U)
        g.add(i);
    if (oracle::brute_free(g, 3))
      best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

} // namespace

TEST_CASE("from_edge_list examples") {
  const CubeSubgraph g7 = g7_fixture();
  CHECK(g7_omitted_tokens().size() == 56);
  CHECK(g7.present_count() == 392);
  CHECK(g7.total() == 448);

  const CubeSubgraph q3 = from_edge_list(3, {}, ListMode::omitted);
  CHECK(q3.present_count() == 12);

  SearchConfig cfg;
  const auto g4 = exact_min_hitting(4, 3, cfg);
  const auto omitted = g4.best.omitted_edges();
  std::vector<EdgeRef> refs;
  for (EdgeIndex e : omitted)
    refs.push_back(edge_from_index(4, e));
  CHECK(refs.size() == 3);
  CHECK(from_edge_list(4, refs, ListMode::omitted).present_count() == 29);
  CHECK(from_edge_list(4, refs, ListMode::present).present_count() == 3);
}

TEST_CASE("from_edge_list rejects duplicates and dimension mismatches") {
  CHECK_THROWS_AS(from_edge_list(3, {parse_edge("[00*]"), parse_edge("[00*]")}, ListMode::present), Error);
  CHECK_THROWS_AS(from_edge_list(3, {parse_edge("[0*]")}, ListMode::omitted), Error);
}

TEST_CASE("edge list text format") {
  const EdgeList a = parse_edge_list("# comment\nn=3\n[00*],[*11]  [1*0]\n");
  CHECK(a.n == 3);
  CHECK(a.edges.size() == 3);
  CHECK(parse_edge_list("n=4\n").n == 4);
  CHECK(parse_edge_list("n=4\n").edges.empty());
  CHECK_THROWS_AS(parse_edge_list("[00*] [0*]"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n=3\n[0*10]"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("[0*1*]"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);

  const CubeSubgraph g7 = g7_fixture();
  const EdgeList round = parse_edge_list(format_subgraph(g7, ListMode::omitted));
  CHECK(from_edge_list(round.n, round.edges, ListMode::omitted) == g7);
  const EdgeList round2 = parse_edge_list(format_subgraph(g7, ListMode::present));
  CHECK(from_edge_list(round2.n, round2.edges, ListMode::present) == g7);
}

TEST_CASE("is_free examples") {
  const auto full = is_free(CubeSubgraph::full(3), 3);
  CHECK_FALSE(full.free);
  REQUIRE(full.witness);
  CHECK(format_subcube(*full.witness) == "[***]");
  CHECK(is_free(g7_fixture(), 3).free);
  CHECK(is_free(q3_minus({"[00*]", "[*11]", "[1*0]"}), 3).free);
  CHECK(is_free(CubeSubgraph::full(2), 3).free); // no Q3 in Q2
}

TEST_CASE("violations examples") {
  CHECK(violations(CubeSubgraph::full(4), 3).size() == 8);
  CHECK(violations(g7_fixture(), 3).empty());
  CHECK(violations(CubeSubgraph::full(4), 2).size() == 24);
}

TEST_CASE("is_free agrees with the brute-force oracle on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 3;
    const int d = 2 + trial % 2;
    const CubeSubgraph g = oracle::random_graph(n, 0.85, rng);
    const auto r = is_free(g, d);
    CHECK(r.free == oracle::brute_free(g, d));
    CHECK(violations(g, d).size() == oracle::brute_full_count(g, d));
    if (!r.free) {
      CHECK(subcube_full(g, *r.witness));
      CHECK(*r.witness == violations(g, d).front());
    }
  }
}

TEST_CASE("parallel_class_stats examples") {
  const ClassStats g7 = parallel_class_stats(g7_fixture());
  CHECK(g7.omitted == std::vector<EdgeIndex>(7, 8));
  CHECK(g7.best_direction == 1);

  // token count by star position, straight from the text
  std::vector<int> by_star(8, 0);
  for (const auto tok : g7_omitted_tokens())
    by_star[tok.find('*')] += 1;
  for (int c = 1; c <= 7; ++c)
    CHECK(by_star[c] == 8);

  const ClassStats full = parallel_class_stats(CubeSubgraph::full(5));
  CHECK(full.present == std::vector<EdgeIndex>(5, 16));

  const ClassStats g5 = parallel_class_stats(named_graph("@g5"));
  CHECK(g5.present[g5.best_direction - 1] == 16);
  CHECK(g5.omitted[g5.best_direction - 1] == 0);
}

TEST_CASE("split_by_direction examples") {
  const SplitResult a = split_by_direction(CubeSubgraph::full(2), 1);
  CHECK(a.half0.present_count() == 1);
  CHECK(a.half1.present_count() == 1);
  CHECK(a.crossing.size() == 2);

  const CubeSubgraph g5 = named_graph("@g5");
  const SplitResult b = split_by_direction(g5, parallel_class_stats(g5).best_direction);
  CHECK(b.crossing.size() == 16);

  const CubeSubgraph g7 = g7_fixture();
  for (int dir = 1; dir <= 7; ++dir) {
    const SplitResult s = split_by_direction(g7, dir);
    CHECK(s.crossing.size() == 56);
    CHECK(recombine(s) == g7);
  }
}

TEST_CASE("split halves keep coordinate order with the split coordinate deleted") {
  const CubeSubgraph g = from_edge_list(4, {parse_edge("[1*01]"), parse_edge("[0*10]")}, ListMode::present);
  const SplitResult s = split_by_direction(g, 3);
  // [1*01] has 0 at coordinate 3 -> half0 edge [1*1]; [0*10] has 1 -> half1 edge [0*0]
  CHECK(s.half0.present_count() == 1);
  CHECK(s.half0.has(parse_edge("[1*1]")));
  CHECK(s.half1.has(parse_edge("[0*0]")));
  CHECK(s.crossing.empty());
}

TEST_CASE("is_maximal examples") {
  const auto one = is_maximal(q3_minus({"[00*]"}), 3);
  CHECK(one.maximal);
  const auto three = is_maximal(q3_minus({"[00*]", "[*11]", "[1*0]"}), 3);
  CHECK_FALSE(three.maximal);
  CHECK(three.addable.size() == 3);
  CHECK(is_maximal(g7_fixture(), 3).maximal);
  CHECK_THROWS_AS(is_maximal(CubeSubgraph::full(3), 3), Error);
}

TEST_CASE("greedy_complete examples") {
  const CubeSubgraph g7 = g7_fixture();
  CHECK(greedy_complete(g7, 3) == g7);

  const CubeSubgraph three = q3_minus({"[00*]", "[*11]", "[1*0]"});
  const CubeSubgraph done = greedy_complete(three, 3);
  CHECK(done.present_count() == three.present_count() + 2);

  const CubeSubgraph from_empty = greedy_complete(CubeSubgraph::empty(3), 3);
  CHECK(brute_max_q3_free_q3() == 11);
  CHECK(from_empty.present_count() == 11);
  CHECK(is_maximal(from_empty, 3).maximal);
  CHECK_THROWS_AS(greedy_complete(CubeSubgraph::full(3), 3), Error);
}

TEST_CASE("greedy_complete honours a custom order deterministically") {
  const auto order = shuffled_edge_order(5, 42);
  CHECK(order.size() == 80);
  CHECK(order == shuffled_edge_order(5, 42));
  CHECK(order != shuffled_edge_order(5, 43));
  const CubeSubgraph a = greedy_complete(CubeSubgraph::empty(5), 3, order);
  CHECK(a == greedy_complete(CubeSubgraph::empty(5), 3, order));
  CHECK(is_free(a, 3).free);
  CHECK(is_maximal(a, 3).maximal);
}

TEST_CASE("SubcubeDeficit tracks full subcubes and addability") {
  const SubcubeIncidence inc(4, 3);
  CubeSubgraph g = CubeSubgraph::full(4);
  SubcubeDeficit def(inc, g);
  CHECK(def.full_subcubes() == 8);
  const EdgeIndex e = edge_index(parse_edge("[00*0]"));
  g.remove(e);
  def.on_remove(e);
  CHECK(def.full_subcubes() == 5);
  CHECK(def.addable(e) == false);
  def.on_add(e);
  CHECK(def.full_subcubes() == 8);
}

TEST_CASE("parallel verification equals serial verification") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const CubeSubgraph g = oracle::random_graph(7, 0.9, rng);
    for (unsigned w : {2U, 3U, 8U}) {
      const auto a = is_free(g, 3, 1), b = is_free(g, 3, w);
      CHECK(a.free == b.free);
      CHECK(a.witness == b.witness);
      CHECK(violations(g, 3, 1) == violations(g, 3, w));
    }
  }
}

TEST_CASE("list mode parsing") {
  CHECK(parse_list_mode("present") == ListMode::present);
  CHECK(parse_list_mode("omitted") == ListMode::omitted);
  CHECK_THROWS_AS(parse_list_mode("both"), Error);
  CHECK(std::string(to_string(ListMode::omitted)) == "omitted");
}

TEST_CASE("shipped G7 file matches the fixture") {
  const EdgeList list = read_edge_list_file(std::string(QFREE_DATA_DIR) + "/g7_omitted.txt");
  CHECK(from_edge_list(list.n, list.edges, ListMode::omitted) == g7_fixture());
}
