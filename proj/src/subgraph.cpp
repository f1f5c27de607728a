//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include "qfree/subgraph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "parallel.hpp"

namespace qfree {

ListMode parse_list_mode(std::string_view text) {
  if (text == "present")
    return ListMode::present;
  if (text == "omitted")
    return ListMode::omitted;
  throw Error("unknown list mode '" + std::string(text) + "' (present|omitted)");
}

const char *to_string(ListMode mode) {
  return mode == ListMode::present ? "present" : "omitted";
}

unsigned resolve_workers(unsigned workers) {
  if (workers != 0)
    return workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

CubeSubgraph::CubeSubgraph(int n, bool full) : n_(n) {
  check_dimension(n);
  const EdgeIndex bits = edge_count(n);
  words_.assign(static_cast<std::size_t>((bits + 63) / 64), full ? ~std::uint64_t{0} : 0);
  if (full && bits % 64 != 0)
    words_.back() = (std::uint64_t{1} << (bits % 64)) - 1;
}

EdgeIndex CubeSubgraph::present_count() const {
  EdgeIndex c = 0;
  for (std::uint64_t w : words_)
    c += static_cast<EdgeIndex>(std::popcount(w));
  return c;
}

EdgeIndex CubeSubgraph::class_present(int direction) const {
  const EdgeIndex per = EdgeIndex{1} << (n_ - 1);
  const EdgeIndex begin = static_cast<EdgeIndex>(direction - 1) * per;
  EdgeIndex c = 0;
  if (per >= 64) {
    for (EdgeIndex w = begin / 64; w < (begin + per) / 64; ++w)
      c += static_cast<EdgeIndex>(std::popcount(words_[w]));
    return c;
  }
  for (EdgeIndex i = begin; i < begin + per; ++i)
    c += has(i) ? 1 : 0;
  return c;
}

void CubeSubgraph::set(EdgeIndex i, bool on) {
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (on)
    words_[i >> 6] |= bit;
  else
    words_[i >> 6] &= ~bit;
}

std::vector<EdgeIndex> CubeSubgraph::present_edges() const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex i = 0; i < total(); ++i)
    if (has(i))
      out.push_back(i);
  return out;
}

std::vector<EdgeIndex> CubeSubgraph::omitted_edges() const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex i = 0; i < total(); ++i)
    if (!has(i))
      out.push_back(i);
  return out;
}

bool canonical_less(const CubeSubgraph &a, const CubeSubgraph &b) {
  if (a.n_ != b.n_)
    return a.n_ < b.n_;
  const auto oa = a.omitted_edges();
  const auto ob = b.omitted_edges();
  return std::lexicographical_compare(oa.begin(), oa.end(), ob.begin(), ob.end());
}

CubeSubgraph from_edge_list(int n, const std::vector<EdgeRef> &edges, ListMode mode) {
  CubeSubgraph g(n, mode == ListMode::omitted);
  CubeSubgraph seen(n, false);
  for (const EdgeRef &e : edges) {
    if (e.n != n)
      throw Error("edge " + format_edge(e) + " has dimension " + std::to_string(e.n) +
                  ", expected " + std::to_string(n));
    const EdgeIndex i = edge_index(e);
    if (seen.has(i))
      throw Error("duplicate edge " + format_edge(e));
    seen.add(i);
    g.set(i, mode == ListMode::present);
  }
  return g;
}

EdgeList parse_edge_list(std::string_view text) {
  EdgeList out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first_content = true;
  int header_n = 0;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos)
      continue;
    if (line[start] == '#')
      continue;
    if (first_content && line.compare(start, 2, "n=") == 0) {
      first_content = false;
      try {
        std::size_t used = 0;
        header_n = std::stoi(line.substr(start + 2), &used);
      } catch (const std::exception &) {
        throw ParseError("bad dimension header '" + line + "'");
      }
      check_dimension(header_n);
      continue;
    }
    first_content = false;
    std::string token;
    auto flush = [&] {
      if (!token.empty()) {
        out.edges.push_back(parse_edge(token));
        token.clear();
      }
    };
    for (char ch : line.substr(start)) {
      if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r')
        flush();
      else
        token += ch;
    }
    flush();
  }
  if (header_n != 0) {
    out.n = header_n;
  } else {
    if (out.edges.empty())
      throw ParseError("empty edge list without an n=<dim> header");
    out.n = out.edges.front().n;
  }
  for (const EdgeRef &e : out.edges)
    if (e.n != out.n)
      throw ParseError("edge " + format_edge(e) + " does not match dimension " + std::to_string(out.n));
  return out;
}

EdgeList read_edge_list_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_edge_list(ss.str());
}

std::string format_edge_list(int n, const std::vector<EdgeRef> &edges) {
  std::string out = "n=" + std::to_string(n) + "\n";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += format_edge(edges[i]);
    if (i + 1 < edges.size())
      out += (i % 6 == 5) ? ",\n" : ",";
  }
  if (!edges.empty())
    out += "\n";
  return out;
}

std::string format_subgraph(const CubeSubgraph &g, ListMode mode) {
  const auto idx = mode == ListMode::present ? g.present_edges() : g.omitted_edges();
  std::vector<EdgeRef> edges;
  edges.reserve(idx.size());
  for (EdgeIndex i : idx)
    edges.push_back(edge_from_index(g.n(), i));
  return format_edge_list(g.n(), edges);
}

bool subcube_full(const CubeSubgraph &g, const Subcube &s) {
  std::vector<EdgeIndex> scratch;
  subcube_edge_indices(s, scratch);
  return std::all_of(scratch.begin(), scratch.end(), [&](EdgeIndex i) { return g.has(i); });
}

namespace {

// Smallest canonical index of a full subcube in [begin, end), or `end`.
std::uint64_t first_full(const CubeSubgraph &g, const SubcubeRange &range, std::uint64_t begin,
                         std::uint64_t end, const std::atomic<std::uint64_t> *cutoff) {
  std::vector<EdgeIndex> scratch;
  for (std::uint64_t i = begin; i < end; ++i) {
    if (cutoff != nullptr && (i & 255) == 0 && cutoff->load(std::memory_order_relaxed) < i)
      return end;
    subcube_edge_indices(range[i], scratch);
    if (std::all_of(scratch.begin(), scratch.end(), [&](EdgeIndex e) { return g.has(e); }))
      return i;
  }
  return end;
}

} // namespace

FreenessResult is_free(const CubeSubgraph &g, int d, unsigned workers) {
  if (d < 1)
    throw Error("forbidden subcube dimension must be >= 1");
  if (d > g.n())
    return {};
  const SubcubeRange range(g.n(), d);
  const std::uint64_t total = range.size();
  std::atomic<std::uint64_t> best{total};
  detail::run_ranges(total, resolve_workers(workers), [&](std::uint64_t b, std::uint64_t e, unsigned) {
    const std::uint64_t hit = first_full(g, range, b, e, &best);
    if (hit < e) {
      std::uint64_t cur = best.load();
      while (hit < cur && !best.compare_exchange_weak(cur, hit)) {
      }
    }
  });
  FreenessResult r;
  if (best.load() < total) {
    r.free = false;
    r.witness = range[best.load()];
  }
  return r;
}

std::vector<Subcube> violations(const CubeSubgraph &g, int d, unsigned workers) {
  if (d < 1 || d > g.n())
    return {};
  const SubcubeRange range(g.n(), d);
  const unsigned w = resolve_workers(workers);
  std::vector<std::vector<std::uint64_t>> parts(w);
  detail::run_ranges(range.size(), w, [&](std::uint64_t b, std::uint64_t e, unsigned k) {
    std::uint64_t i = b;
    while (i < e) {
      i = first_full(g, range, i, e, nullptr);
      if (i < e)
        parts[k].push_back(i++);
    }
  });
  std::vector<Subcube> out;
  for (const auto &p : parts)
    for (std::uint64_t i : p)
      out.push_back(range[i]);
  return out;
}

ClassStats parallel_class_stats(const CubeSubgraph &g) {
  ClassStats s;
  const EdgeIndex per = EdgeIndex{1} << (g.n() - 1);
  EdgeIndex best = 0;
  for (int dir = 1; dir <= g.n(); ++dir) {
    const EdgeIndex p = g.class_present(dir);
    s.present.push_back(p);
    s.omitted.push_back(per - p);
    if (dir == 1 || p > best) {
      best = p;
      s.best_direction = dir;
    }
  }
  return s;
}

SplitResult split_by_direction(const CubeSubgraph &g, int direction) {
  const int n = g.n();
  if (n < 2)
    throw Error("split needs n >= 2");
  if (direction < 1 || direction > n)
    throw Error("split direction " + std::to_string(direction) + " out of range");
  SplitResult r{direction, CubeSubgraph(n - 1, false), CubeSubgraph(n - 1, false), {}};
  for (EdgeIndex i = 0; i < g.total(); ++i) {
    if (!g.has(i))
      continue;
    const EdgeRef e = edge_from_index(n, i);
    if (e.star_pos == direction) {
      r.crossing.push_back(e.fixed_bits);
      continue;
    }
    const std::uint32_t v = e.lower();
    const unsigned side = (v & coord_bit(n, direction)) ? 1 : 0;
    const std::uint32_t w = delete_coord(v, n, direction);
    const int star = e.star_pos < direction ? e.star_pos : e.star_pos - 1;
    (side == 0 ? r.half0 : r.half1).add(edge_index_at(n - 1, w, star));
  }
  return r;
}

CubeSubgraph recombine(const SplitResult &split) {
  const int m = split.half0.n();
  const int n = m + 1;
  CubeSubgraph g(n, false);
  for (int side = 0; side < 2; ++side) {
    const CubeSubgraph &h = side == 0 ? split.half0 : split.half1;
    for (EdgeIndex i = 0; i < h.total(); ++i) {
      if (!h.has(i))
        continue;
      const EdgeRef e = edge_from_index(m, i);
      const std::uint32_t v = insert_coord(e.lower(), m, split.direction, static_cast<unsigned>(side));
      const int star = e.star_pos < split.direction ? e.star_pos : e.star_pos + 1;
      g.add(edge_index_at(n, v, star));
    }
  }
  for (std::uint32_t w : split.crossing)
    g.add(edge_index(EdgeRef{n, split.direction, w}));
  return g;
}

SubcubeDeficit::SubcubeDeficit(const SubcubeIncidence &inc, const CubeSubgraph &g)
    : inc_(&inc), counts_(inc.subcube_count(), 0) {
  if (g.n() != inc.n())
    throw Error("incidence dimension mismatch");
  for (std::size_t s = 0; s < counts_.size(); ++s) {
    const std::uint32_t *edges = inc.edges_of(s);
    std::uint16_t c = 0;
    for (std::size_t j = 0; j < inc.edges_per_subcube(); ++j)
      c += g.has(edges[j]) ? 0 : 1;
    counts_[s] = c;
    full_ += c == 0 ? 1 : 0;
  }
}

bool SubcubeDeficit::addable(EdgeIndex e) const {
  const std::uint32_t *subs = inc_->subcubes_of(e);
  for (std::size_t j = 0; j < inc_->subcubes_per_edge(); ++j)
    if (counts_[subs[j]] == 1)
      return false;
  return true;
}

void SubcubeDeficit::on_add(EdgeIndex e) {
  const std::uint32_t *subs = inc_->subcubes_of(e);
  for (std::size_t j = 0; j < inc_->subcubes_per_edge(); ++j)
    if (--counts_[subs[j]] == 0)
      ++full_;
}

void SubcubeDeficit::on_remove(EdgeIndex e) {
  const std::uint32_t *subs = inc_->subcubes_of(e);
  for (std::size_t j = 0; j < inc_->subcubes_per_edge(); ++j)
    if (counts_[subs[j]]++ == 0)
      --full_;
}

namespace {

void require_free(const CubeSubgraph &g, int d, const char *what) {
  const auto r = is_free(g, d);
  if (!r.free)
    throw Error(std::string(what) + ": input is not Q" + std::to_string(d) + "-free (full subcube " +
                format_subcube(*r.witness) + ")");
}

} // namespace

MaximalityResult is_maximal(const CubeSubgraph &g, int d) {
  require_free(g, d, "is_maximal");
  MaximalityResult r;
  if (d > g.n()) {
    r.addable = g.omitted_edges();
    r.maximal = r.addable.empty();
    return r;
  }
  const SubcubeIncidence inc(g.n(), d);
  const SubcubeDeficit deficit(inc, g);
  for (EdgeIndex e = 0; e < g.total(); ++e)
    if (!g.has(e) && deficit.addable(e))
      r.addable.push_back(e);
  r.maximal = r.addable.empty();
  return r;
}

CubeSubgraph greedy_complete(const CubeSubgraph &g, int d, const std::vector<EdgeIndex> &order) {
  require_free(g, d, "greedy_complete");
  CubeSubgraph out = g;
  std::vector<EdgeIndex> seq = order;
  if (seq.empty()) {
    seq.resize(static_cast<std::size_t>(g.total()));
    std::iota(seq.begin(), seq.end(), EdgeIndex{0});
  }
  if (d > g.n()) {
    for (EdgeIndex e : seq)
      out.add(e);
    return out;
  }
  const SubcubeIncidence inc(g.n(), d);
  SubcubeDeficit deficit(inc, out);
  for (EdgeIndex e : seq) {
    if (e >= out.total())
      throw Error("edge order contains an out-of-range index");
    if (!out.has(e) && deficit.addable(e)) {
      out.add(e);
      deficit.on_add(e);
    }
  }
  return out;
}

std::vector<EdgeIndex> shuffled_edge_order(int n, std::uint64_t seed) {
  std::vector<EdgeIndex> seq(static_cast<std::size_t>(edge_count(n)));
  std::iota(seq.begin(), seq.end(), EdgeIndex{0});
  std::mt19937_64 rng(seed);
  std::shuffle(seq.begin(), seq.end(), rng);
  return seq;
}

} // namespace qfree
