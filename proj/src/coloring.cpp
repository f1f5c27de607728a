//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include "qfree/coloring.hpp"

#include <fstream>
#include <sstream>

namespace qfree {

char to_char(AeoColor c) {
  switch (c) {
  case AeoColor::a:
    return 'a';
  case AeoColor::e:
    return 'e';
  case AeoColor::o:
    return 'o';
  }
  return '?';
}

AeoColoring::AeoColoring(int m) : m_(m) {
  check_dimension(m);
  colors_.assign(static_cast<std::size_t>(edge_count(m)), AeoColor::a);
}

void AeoColoring::set(const EdgeRef &e, AeoColor c) {
  if (e.n != m_)
    throw Error("edge " + format_edge(e) + " is not an edge of Q" + std::to_string(m_));
  set(edge_index(e), c);
}

ColoringStats AeoColoring::stats() const {
  ColoringStats s{m_, 0, 0, 0};
  for (AeoColor c : colors_) {
    if (c == AeoColor::a)
      ++s.count_a;
    else if (c == AeoColor::e)
      ++s.count_e;
    else
      ++s.count_o;
  }
  return s;
}

std::vector<EdgeIndex> AeoColoring::edges_with(AeoColor c) const {
  std::vector<EdgeIndex> out;
  for (std::size_t i = 0; i < colors_.size(); ++i)
    if (colors_[i] == c)
      out.push_back(i);
  return out;
}

CubeSubgraph AeoColoring::a_subgraph() const {
  CubeSubgraph g(m_, false);
  for (std::size_t i = 0; i < colors_.size(); ++i)
    if (colors_[i] == AeoColor::a)
      g.add(i);
  return g;
}

namespace {

struct BuiltinColoring {
  const char *name;
  int m;
  std::vector<const char *> e_edges;
  std::vector<const char *> o_edges;
};

const std::vector<BuiltinColoring> &builtins() {
  static const std::vector<BuiltinColoring> table = {
      {"c4_simple", 2, {"[*1]"}, {}},
      {"q3_aeo", 3, {"[00*]", "[*11]"}, {"[1*0]"}},
      {"q4_aeo",
       4,
       {"[*000]", "[*111]", "[1*01]", "[0*10]"},
       {"[00*1]", "[11*0]", "[101*]", "[010*]"}},
      {"q5_aeo",
       5,
       {"[*0001]", "[*1000]", "[*0111]", "[*1110]", "[1010*]", "[1101*]", "[0*101]", "[0*010]",
        "[10*10]", "[11*01]", "[001*0]", "[010*1]"},
       {"[*0100]", "[*0010]", "[*1101]", "[*1011]", "[0000*]", "[0111*]", "[1*000]", "[1*111]",
        "[00*11]", "[01*00]", "[111*0]", "[100*1]"}},
  };
  return table;
}

} // namespace

std::vector<std::string> builtin_coloring_names() {
  std::vector<std::string> out;
  for (const auto &b : builtins())
    out.emplace_back(b.name);
  return out;
}

AeoColoring builtin_coloring(std::string_view name) {
  for (const auto &b : builtins()) {
    if (name != b.name)
      continue;
    AeoColoring c(b.m);
    for (const char *t : b.e_edges)
      c.set(parse_edge(t), AeoColor::e);
    for (const char *t : b.o_edges)
      c.set(parse_edge(t), AeoColor::o);
    return c;
  }
  throw Error("unknown coloring '" + std::string(name) + "'");
}

AeoColoring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int m = 0;
  std::optional<AeoColor> section;
  std::vector<std::pair<EdgeRef, AeoColor>> entries;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string tok;
    bool comment = false;
    while (!comment && std::getline(words, tok, ',')) {
      std::istringstream parts(tok);
      std::string w;
      while (parts >> w) {
        if (w[0] == '#') {
          comment = true;
          break;
        }
        if (w.rfind("m=", 0) == 0) {
          if (m != 0 || !entries.empty())
            throw ParseError("'m=' header must come first");
          try {
            m = std::stoi(w.substr(2));
          } catch (const std::exception &) {
            throw ParseError("bad dimension header '" + w + "'");
          }
          check_dimension(m);
        } else if (w == "e:") {
          section = AeoColor::e;
        } else if (w == "o:") {
          section = AeoColor::o;
        } else {
          if (!section)
            throw ParseError("edge token '" + w + "' outside an 'e:' or 'o:' section");
          entries.emplace_back(parse_edge(w), *section);
        }
      }
    }
  }
  if (m == 0) {
    if (entries.empty())
      throw ParseError("coloring has neither an m=<dim> header nor any edges");
    m = entries.front().first.n;
  }
  AeoColoring c(m);
  std::vector<bool> seen(static_cast<std::size_t>(edge_count(m)), false);
  for (const auto &[e, col] : entries) {
    if (e.n != m)
      throw ParseError("edge " + format_edge(e) + " does not match dimension " + std::to_string(m));
    const auto i = static_cast<std::size_t>(edge_index(e));
    if (seen[i])
      throw ParseError("edge " + format_edge(e) + " listed twice");
    seen[i] = true;
    c.set(e, col);
  }
  return c;
}

AeoColoring read_coloring_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_coloring(ss.str());
}

std::string format_coloring(const AeoColoring &c) {
  std::string out = "m=" + std::to_string(c.m()) + "\n";
  for (AeoColor col : {AeoColor::e, AeoColor::o}) {
    out += col == AeoColor::e ? "e:\n" : "o:\n";
    const auto edges = c.edges_with(col);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      out += format_edge(edge_from_index(c.m(), edges[i]));
      out += (i + 1 == edges.size() || i % 6 == 5) ? "\n" : " ";
    }
  }
  return out;
}

ColoringTarget parse_coloring_target(std::string_view text) {
  if (text == "c4" || text == "q2")
    return ColoringTarget::c4;
  if (text == "q3")
    return ColoringTarget::q3;
  throw Error("unknown coloring target '" + std::string(text) + "' (c4|q3)");
}

const char *to_string(ColoringTarget t) {
  return t == ColoringTarget::c4 ? "c4" : "q3";
}

namespace {

struct ColorTally {
  bool e = false;
  bool o = false;
};

ColorTally tally(const AeoColoring &c, const Subcube &s, std::vector<EdgeIndex> &scratch) {
  subcube_edge_indices(s, scratch);
  ColorTally t;
  for (EdgeIndex i : scratch) {
    t.e |= c.at(i) == AeoColor::e;
    t.o |= c.at(i) == AeoColor::o;
  }
  return t;
}

} // namespace

ColoringReport validate(const AeoColoring &c, ColoringTarget target) {
  ColoringReport r;
  std::vector<EdgeIndex> scratch;
  const int m = c.m();
  if (target == ColoringTarget::q3) {
    for (const Subcube &s : enumerate_subcubes(m, 3)) {
      const ColorTally t = tally(c, s, scratch);
      if (!(t.e && t.o))
        r.violations.push_back({s, 1});
    }
    for (const Subcube &s : enumerate_subcubes(m, 2)) {
      const ColorTally t = tally(c, s, scratch);
      if (!(t.e || t.o))
        r.violations.push_back({s, 2});
    }
  } else {
    for (const Subcube &s : enumerate_subcubes(m, 2)) {
      const ColorTally t = tally(c, s, scratch);
      if (!(t.e && t.o))
        r.violations.push_back({s, 0});
    }
  }
  r.ok = r.violations.empty();
  return r;
}

namespace {

class EoSplitter {
public:
  explicit EoSplitter(const CubeSubgraph &h) : h_(h), inc_(h.n(), 3), coloring_(h.n()) {
    for (EdgeIndex e = 0; e < h.total(); ++e)
      if (!h.has(e))
        vars_.push_back(e);
  }

  bool run() { return assign(0); }
  const AeoColoring &coloring() const { return coloring_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  // A Q3 fails once every non-edge in it is assigned and all carry the same
  // color (or it has fewer than two non-edges).
  bool consistent(EdgeIndex e) const {
    const std::uint32_t *subs = inc_.subcubes_of(e);
    for (std::size_t j = 0; j < inc_.subcubes_per_edge(); ++j) {
      const std::uint32_t *edges = inc_.edges_of(subs[j]);
      bool e_seen = false, o_seen = false, open = false;
      for (std::size_t k = 0; k < inc_.edges_per_subcube(); ++k) {
        const EdgeIndex x = edges[k];
        if (h_.has(x))
          continue;
        const AeoColor c = coloring_.at(x);
        if (c == AeoColor::a)
          open = true;
        e_seen |= c == AeoColor::e;
        o_seen |= c == AeoColor::o;
      }
      if (!open && !(e_seen && o_seen))
        return false;
    }
    return true;
  }

  bool assign(std::size_t k) {
    ++nodes_;
    if (k == vars_.size())
      return true;
    const EdgeIndex e = vars_[k];
    for (AeoColor c : {AeoColor::e, AeoColor::o}) {
      coloring_.set(e, c);
      if (consistent(e) && assign(k + 1))
        return true;
    }
    coloring_.set(e, AeoColor::a);
    return false;
  }

  const CubeSubgraph &h_;
  SubcubeIncidence inc_;
  AeoColoring coloring_;
  std::vector<EdgeIndex> vars_;
  std::uint64_t nodes_ = 0;
};

} // namespace

SplitOutcome split_nonedges_to_eo(const CubeSubgraph &h) {
  SplitOutcome out;
  const auto full = is_free(h, 3);
  if (!full.free) {
    out.witness = full.witness;
    out.failure = "subgraph contains a full Q3 " + format_subcube(*full.witness);
    return out;
  }
  const auto c4 = is_free(h, 2);
  if (!c4.free) {
    out.witness = c4.witness;
    out.failure = "subgraph is not C4-free (full Q2 " + format_subcube(*c4.witness) + ")";
    return out;
  }
  if (h.n() < 3) {
    // no Q3 to satisfy
    AeoColoring c(h.n());
    for (EdgeIndex e : h.omitted_edges())
      c.set(e, AeoColor::e);
    out.coloring = c;
    return out;
  }
  EoSplitter splitter(h);
  const bool ok = splitter.run();
  out.nodes = splitter.nodes();
  if (ok)
    out.coloring = splitter.coloring();
  else
    out.failure = "no valid split";
  return out;
}

} // namespace qfree
