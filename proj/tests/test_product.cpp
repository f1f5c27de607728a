//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include "oracles.hpp"
#include "qfree/fixtures.hpp"
#include "qfree/product.hpp"

using namespace qfree;

namespace {

ProductSpec make_spec(const CubeSubgraph &base, const char *coloring, int direction = 0) {
  ProductSpec spec;
  spec.base = base;
  spec.coloring = builtin_coloring(coloring);
  spec.direction = direction;
  return spec;
}

std::int64_t predicted_for(const ProductSpec &spec) {
  const int dir = product_direction(spec);
  return predicted_edge_count(static_cast<std::int64_t>(spec.base.present_count()),
                              static_cast<std::int64_t>(spec.base.class_present(dir)),
                              spec.coloring.stats(), spec.base.n());
}

// Edge of the output read straight from the layout rule, using strings.
// Output token = base token with coordinate `dir` deleted, then the Q_m part.
bool oracle_has(const ProductSpec &spec, int dir, const std::string &out_token) {
  const int k = spec.base.n();
  const std::string body = out_token.substr(1, out_token.size() - 2);
  const std::string v = body.substr(0, k - 1);
  const std::string u = body.substr(k - 1);
  auto ones = [](const std::string &s) {
    int c = 0;
    for (char ch : s)
      c += ch == '1';
    return c;
  };
  if (v.find('*') != std::string::npos) {
    const char bit = ones(u) % 2 ? '1' : '0';
    std::string base = v;
    base.insert(base.begin() + (dir - 1), bit);
    return spec.base.has(parse_edge("[" + base + "]"));
  }
  const AeoColor c = spec.coloring.at(parse_edge("[" + u + "]"));
  if (c == AeoColor::a) {
    std::string base = v;
    base.insert(base.begin() + (dir - 1), '*');
    return spec.base.has(parse_edge("[" + base + "]"));
  }
  const unsigned pv = static_cast<unsigned>(ones(v) % 2);
  return c == AeoColor::e ? pv == spec.parity_convention : pv != spec.parity_convention;
}

} // namespace

TEST_CASE("full Q2 with q3_aeo gives 29 edges of Q4") {
  const ProductSpec spec = make_spec(CubeSubgraph::full(2), "q3_aeo", 1);
  const CubeSubgraph g = build_product(spec);
  CHECK(g.n() == 4);
  CHECK(g.present_count() == 29);
  CHECK(g.omitted_count() == 3);
  CHECK(predicted_for(spec) == 29);
  CHECK(4 * (4 - 2) + 9 * 2 + 3 * 1 == 29);
  CHECK(oracle::brute_free(g, 3));
}

TEST_CASE("G5 with q3_aeo gives 392 edges of Q7") {
  const ProductSpec spec = make_spec(named_graph("@g5"), "q3_aeo");
  const CubeSubgraph g = build_product(spec);
  CHECK(g.n() == 7);
  CHECK(g.present_count() == 392);
  CHECK(is_free(g, 3).free);
}

TEST_CASE("G4 with q4_aeo omits 56 edges of Q7") {
  const CubeSubgraph g4 = named_graph("@g4");
  const ProductSpec spec = make_spec(g4, "q4_aeo");
  CHECK(g4.class_present(product_direction(spec)) == 8);
  const CubeSubgraph g = build_product(spec);
  CHECK(g.omitted_count() == 56);
  CHECK(is_free(g, 3).free);
}

TEST_CASE("predicted_edge_count closed form") {
  const ColoringStats q3 = builtin_coloring("q3_aeo").stats();
  CHECK(predicted_edge_count(72, 16, q3, 5) == 392);
  CHECK(predicted_edge_count(170, 29, q3, 6) == 873);
  for (const auto &name : builtin_coloring_names()) {
    const ColoringStats s = builtin_coloring(name).stats();
    for (int k = 2; k <= 10; ++k)
      CHECK(predicted_edge_count(0, 0, s, k) == s.non_a() * (std::int64_t{1} << (k - 2)));
  }
}

TEST_CASE("product edges follow the layout rule") {
  for (const char *coloring : {"q3_aeo", "q4_aeo"})
    for (unsigned parity : {0U, 1U})
      for (int dir = 1; dir <= 4; ++dir) {
        ProductSpec spec = make_spec(named_graph("@g4"), coloring, dir);
        spec.parity_convention = parity;
        const CubeSubgraph g = build_product(spec);
        for (const auto &tok : oracle::all_edge_strings(g.n()))
          CHECK(g.has(parse_edge(tok)) == oracle_has(spec, dir, tok));
      }
}

TEST_CASE("parity flip changes edges but not count or freeness") {
  for (const char *coloring : {"q3_aeo", "q4_aeo"}) {
    ProductSpec spec = make_spec(named_graph("@g4"), coloring);
    const CubeSubgraph a = build_product(spec);
    spec.parity_convention = 1;
    const CubeSubgraph b = build_product(spec);
    CHECK(a != b);
    CHECK(a.present_count() == b.present_count());
    CHECK(is_free(a, 3).free);
    CHECK(is_free(b, 3).free);
  }
}

TEST_CASE("direction 0 picks the fullest parallel class") {
  const CubeSubgraph g5 = named_graph("@g5");
  const ProductSpec spec = make_spec(g5, "q3_aeo");
  CHECK(product_direction(spec) == parallel_class_stats(g5).best_direction);
  CHECK(product_direction(make_spec(g5, "q3_aeo", 2)) == 2);
}

TEST_CASE("build_product rejects bad inputs") {
  AeoColoring bad = builtin_coloring("q3_aeo");
  bad.set(parse_edge("[1*0]"), AeoColor::e);
  ProductSpec spec = make_spec(CubeSubgraph::full(3), "q3_aeo");
  spec.coloring = bad;
  CHECK_THROWS_AS(build_product(spec), Error);
  try {
    build_product(spec);
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("[***]") != std::string::npos);
  }
  CHECK_THROWS_AS(build_product(make_spec(CubeSubgraph::full(1), "q3_aeo")), Error);
  CHECK_THROWS_AS(build_product(make_spec(CubeSubgraph::full(3), "q3_aeo", 4)), Error);
}

TEST_CASE("C4 target product of a C4-free base is C4-free") {
  AeoColoring c4(2);
  c4.set(parse_edge("[*1]"), AeoColor::e);
  c4.set(parse_edge("[0*]"), AeoColor::o);
  ProductSpec spec;
  spec.base = greedy_complete(CubeSubgraph::empty(4), 2);
  spec.coloring = c4;
  spec.target = ColoringTarget::c4;
  const CubeSubgraph g = build_product(spec);
  CHECK(g.n() == 5);
  CHECK(is_free(g, 2).free);
  CHECK(g.present_count() == static_cast<EdgeIndex>(predicted_for(spec)));
}
