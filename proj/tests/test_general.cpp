//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qfree/general.hpp"

using namespace qfree;

namespace {

int euclid_mod4(int p) { return ((p % 4) + 4) % 4; }

std::array<std::uint64_t, 4> sizes_by_strings(int n) {
  std::array<std::uint64_t, 4> out{};
  for (const auto &s : oracle::all_edge_strings(n))
    out[euclid_mod4(oracle::p_from_string(s))] += 1;
  return out;
}

} // namespace

TEST_CASE("residue classes of Q3") {
  CHECK(sizes_by_strings(3) == std::array<std::uint64_t, 4>{4, 3, 2, 3});
  CHECK(residue_class_sizes(3) == std::array<std::uint64_t, 4>{4, 3, 2, 3});
  std::set<std::string> two;
  for (EdgeIndex e : residue_class(3, 2).members)
    two.insert(format_edge(edge_from_index(3, e)));
  CHECK(two == std::set<std::string>{"[*11]", "[11*]"});
  CHECK(p_residue(parse_edge("[0*10100]")) == 2);
  CHECK(p_residue(parse_edge("[1*0]")) == 1);
}

TEST_CASE("residue classes partition the edges") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    std::vector<int> owner(static_cast<std::size_t>(edge_count(n)), -1);
    std::uint64_t sum = 0;
    const auto sizes = residue_class_sizes(n);
    for (int r = 0; r < 4; ++r) {
      const ResidueClass rc = residue_class(n, r);
      CHECK(rc.members.size() == sizes[r]);
      sum += rc.members.size();
      for (EdgeIndex e : rc.members) {
        CHECK(owner[e] == -1);
        owner[e] = r;
      }
    }
    CHECK(sum == edge_count(n));
    if (n <= 9)
      CHECK(sizes == sizes_by_strings(n));
  }
  CHECK_THROWS_AS(residue_class(3, 4), Error);
}

TEST_CASE("every residue class covers every Q3") {
  for (int n = 3; n <= 9; ++n)
    for (int r = 0; r < 4; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      const CoveringResult res = covering_check(n, r, 2);
      CHECK(res.covered);
      CHECK_FALSE(res.uncovered);
    }
}

TEST_CASE("general_construction examples") {
  const CubeSubgraph best3 = general_construction(3);
  CHECK(best3.present_count() == 10);
  CHECK_FALSE(best3.has(parse_edge("[*11]")));
  CHECK_FALSE(best3.has(parse_edge("[11*]")));
  CHECK(oracle::brute_free(best3, 3));
  CHECK(smallest_residue(3) == 2);

  const CubeSubgraph g7 = general_construction(7, 0);
  CHECK(g7.omitted_count() == residue_class_sizes(7)[0]);
  CHECK(oracle::brute_free(g7, 3));
  CHECK_THROWS_AS(general_construction(2), Error);
}

TEST_CASE("Qn minus any residue class is Q3-free") {
  for (int n = 3; n <= 8; ++n)
    for (int r = 0; r < 4; ++r)
      CHECK(is_free(general_construction(n, r), 3).free);
}

TEST_CASE("smallest class is at most a quarter of the edges") {
  for (int n = 1; n <= 20; ++n) {
    const auto sizes = residue_class_sizes(n);
    std::uint64_t sum = 0;
    for (auto s : sizes)
      sum += s;
    CHECK(sum == edge_count(n));
    CHECK(sizes[smallest_residue(n)] <= edge_count(n) / 4);
    for (int r = 0; r < smallest_residue(n); ++r)
      CHECK(sizes[r] > sizes[smallest_residue(n)]);
  }
}

TEST_CASE("case_witness on the whole cube") {
  const Subcube q3 = enumerate_subcubes(3, 3).front();
  const auto [a, b] = case_witness(q3, 0);
  CHECK(format_edge(a) == "[*00]");
  CHECK(format_edge(b) == "[*11]");
  CHECK(edge_p_value(a) == 0);
  CHECK(edge_p_value(b) == -2);
}

TEST_CASE("case_witness pairs on random subcubes of Q10") {
  std::mt19937_64 rng(99);
  const SubcubeRange range(10, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    const Subcube s = range[rng() % range.size()];
    const int r = static_cast<int>(rng() % 4);
    const auto [a, b] = case_witness(s, r);
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(std::abs(edge_p_value(a) - edge_p_value(b)) == 2);
    CHECK((p_residue(a) == r || p_residue(b) == r));
  }
}
