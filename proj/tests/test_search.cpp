//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include "oracles.hpp"
#include "qfree/fixtures.hpp"
#include "qfree/search.hpp"

using namespace qfree;

namespace {

// Smallest hitting set by plain enumeration of subsets in size order.
std::size_t brute_min_hitting(const HittingProblem &p) {
  const std::size_t n = p.element_count;
  for (std::size_t size = 0; size <= n; ++size)
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size)
        continue;
      bool ok = true;
      for (const auto &set : p.sets) {
        bool hit = false;
        for (auto x : set)
          hit = hit || ((mask >> x) & 1U);
        ok = ok && hit;
      }
      if (ok)
        return size;
    }
  return n + 1;
}

} // namespace

TEST_CASE("exact optima for n = 3, 4, 5") {
  SearchConfig cfg;
  for (auto [n, want] : {std::pair{3, 1}, std::pair{4, 3}, std::pair{5, 8}}) {
    const SearchResult r = exact_min_hitting(n, 3, cfg);
    CAPTURE(n);
    CHECK(r.optimal);
    CHECK(r.best.omitted_count() == static_cast<EdgeIndex>(want));
    CHECK(oracle::brute_free(r.best, 3));
  }
  const SearchResult g5 = exact_min_hitting(5, 3, cfg);
  CHECK(g5.best.present_count() == 72);
  const ClassStats s = parallel_class_stats(g5.best);
  CHECK(s.present[s.best_direction - 1] == 16);
}

TEST_CASE("exact search also handles d = 2") {
  SearchConfig cfg;
  // the largest C4-free subgraph of Q3 has 9 edges
  const SearchResult r = exact_min_hitting(3, 2, cfg);
  CHECK(r.optimal);
  CHECK(r.best.present_count() == 9);
  CHECK(oracle::brute_free(r.best, 2));
}

TEST_CASE("exact search is independent of the worker count") {
  SearchConfig one;
  const SearchResult a = exact_min_hitting(5, 3, one);
  for (unsigned w : {2U, 3U, 4U}) {
    SearchConfig cfg;
    cfg.worker_count = w;
    const SearchResult b = exact_min_hitting(5, 3, cfg);
    CHECK(b.optimal);
    CHECK(b.best == a.best);
  }
}

TEST_CASE("node limit leaves n = 6 unproven") {
  SearchConfig cfg;
  cfg.node_limit = 20000;
  const SearchResult r = exact_min_hitting(6, 3, cfg);
  CHECK_FALSE(r.optimal);
  CHECK(r.node_limit_hit);
  CHECK(is_free(r.best, 3).free);
  CHECK(r.best.omitted_count() >= 22);
}

TEST_CASE("solve_min_hitting matches brute force on small set systems") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    HittingProblem p;
    p.element_count = 4 + rng() % 9;
    const std::size_t sets = 1 + rng() % 10;
    for (std::size_t i = 0; i < sets; ++i) {
      std::vector<std::uint32_t> s;
      for (std::uint32_t x = 0; x < p.element_count; ++x)
        if (rng() % 3 == 0)
          s.push_back(x);
      if (s.empty())
        s.push_back(static_cast<std::uint32_t>(rng() % p.element_count));
      p.sets.push_back(s);
    }
    SearchConfig cfg;
    cfg.worker_count = 1 + trial % 3;
    const HittingSolution sol = solve_min_hitting(p, p.element_count + 1, cfg);
    REQUIRE(sol.found);
    CHECK(sol.exhausted);
    CHECK(sol.chosen.size() == brute_min_hitting(p));
    for (const auto &set : p.sets) {
      bool hit = false;
      for (auto x : set)
        hit = hit || std::binary_search(sol.chosen.begin(), sol.chosen.end(), x);
      CHECK(hit);
    }
  }
}

TEST_CASE("perturb G7 with pairs finds nothing") {
  SearchConfig cfg;
  cfg.remove_t = 2;
  const CubeSubgraph g7 = g7_fixture();
  const SearchResult r = perturb(g7, 3, cfg);
  CHECK(r.best == g7);
  CHECK(r.optimal);
  CHECK(r.improvements == 0);
}

TEST_CASE("perturb with t = 0 completes a non-maximal graph") {
  SearchConfig cfg;
  cfg.remove_t = 0;
  CubeSubgraph g = CubeSubgraph::full(4);
  for (const char *t : {"[00*0]", "[*111]", "[1*00]", "[01*1]", "[110*]"})
    g.remove(edge_index(parse_edge(t)));
  REQUIRE(is_free(g, 3).free);
  const SearchResult r = perturb(g, 3, cfg);
  CHECK(r.best.present_count() > g.present_count());
  CHECK(is_free(r.best, 3).free);
  CHECK(is_maximal(r.best, 3).maximal);
}

TEST_CASE("perturb improves a poor maximal graph and never shrinks") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 6; ++trial) {
    const CubeSubgraph start =
        greedy_complete(oracle::random_free_graph(5, 3, 0.7, rng), 3, shuffled_edge_order(5, trial));
    SearchConfig cfg;
    cfg.remove_t = 1;
    const SearchResult r = perturb(start, 3, cfg);
    CHECK(r.best.present_count() >= start.present_count());
    CHECK(is_free(r.best, 3).free);
    CHECK(r.best.present_count() <= 72);
  }
}

TEST_CASE("perturb is deterministic and worker independent") {
  std::mt19937_64 rng(21);
  const CubeSubgraph start = greedy_complete(oracle::random_free_graph(6, 3, 0.6, rng), 3, shuffled_edge_order(6, 9));
  SearchConfig cfg;
  cfg.remove_t = 1;
  cfg.rng_seed = 5;
  const SearchResult a = perturb(start, 3, cfg);
  CHECK(perturb(start, 3, cfg).best == a.best);
  for (unsigned w : {2U, 4U}) {
    cfg.worker_count = w;
    const SearchResult b = perturb(start, 3, cfg);
    CHECK(b.best == a.best);
    CHECK(b.improvements == a.improvements);
  }
}

TEST_CASE("sampled perturbation and greedy re-add") {
  SearchConfig cfg;
  cfg.remove_t = 3;
  cfg.sample = 200;
  cfg.readd = ReaddMode::greedy;
  cfg.rng_seed = 1;
  const CubeSubgraph g7 = g7_fixture();
  const SearchResult r = perturb(g7, 3, cfg);
  CHECK(r.best.present_count() >= 392);
  CHECK_FALSE(r.optimal);
  CHECK(is_free(r.best, 3).free);
}

TEST_CASE("perturb rejects a graph that is not free") {
  SearchConfig cfg;
  CHECK_THROWS_AS(perturb(CubeSubgraph::full(3), 3, cfg), Error);
}
