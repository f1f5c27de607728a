//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include "qfree/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace qfree {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void atomic_min(std::atomic<std::uint64_t> &a, std::uint64_t v) {
  std::uint64_t cur = a.load();
  while (v < cur && !a.compare_exchange_weak(cur, v)) {
  }
}

// ---------------------------------------------------------------------------
// Hitting-set branch and bound

struct Limits {
  std::uint64_t node_limit = 0;
  double time_budget = 0.0;
  Clock::time_point start = Clock::now();
};

struct SharedSearch {
  // (size << 32) | subtree of the incumbent; lexicographic minimum wins.
  std::atomic<std::uint64_t> incumbent;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> node_limit_hit{false};
  std::atomic<bool> time_limit_hit{false};
  std::mutex report_mutex;
  Limits limits;
};

std::uint64_t pack(std::size_t size, std::size_t subtree) {
  return (static_cast<std::uint64_t>(size) << 32) | static_cast<std::uint64_t>(subtree);
}

struct FrontierNode {
  std::vector<std::uint32_t> chosen;
  std::vector<std::uint32_t> excluded;
};

class HittingWorker {
public:
  HittingWorker(const HittingProblem &p, const std::vector<std::vector<std::uint32_t>> &elem_sets,
                SharedSearch &shared)
      : p_(p), elem_sets_(elem_sets), shared_(shared), hit_(p.sets.size(), 0),
        avail_(p.sets.size(), 0), excluded_(p.element_count, 0), used_(p.element_count, 0),
        uncovered_(p.sets.size()) {
    for (std::size_t s = 0; s < p.sets.size(); ++s)
      avail_[s] = static_cast<int>(p.sets[s].size());
  }

  void load(const FrontierNode &node) {
    for (std::uint32_t e : node.excluded)
      exclude(e);
    for (std::uint32_t e : node.chosen)
      choose(e);
  }

  void unload(const FrontierNode &node) {
    for (auto it = node.chosen.rbegin(); it != node.chosen.rend(); ++it)
      unchoose(*it);
    for (std::uint32_t e : node.excluded)
      include(e);
  }

  // Depth-first search of the current subtree.
  void search(std::size_t subtree) {
    subtree_ = subtree;
    best_.clear();
    dfs();
  }

  // Expand to `depth` and collect the open nodes in depth-first order.
  void collect(int depth, std::vector<FrontierNode> &out) {
    if (uncovered_ == 0 || depth == 0) {
      out.push_back({stack_, excluded_list_});
      return;
    }
    const std::size_t lb = stack_.size() + lower_bound();
    if (lb == kInfeasible || lb >= (shared_.incumbent.load() >> 32))
      return;
    const std::size_t s = pick_set();
    std::vector<std::uint32_t> local;
    for (std::uint32_t e : p_.sets[s]) {
      if (excluded_[e])
        continue;
      choose(e);
      collect(depth - 1, out);
      unchoose(e);
      exclude(e);
      excluded_list_.push_back(e);
      local.push_back(e);
    }
    for (std::uint32_t e : local) {
      include(e);
      excluded_list_.pop_back();
    }
  }

  const std::vector<std::uint32_t> &best() const { return best_; }

private:
  static constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max();

  void choose(std::uint32_t e) {
    stack_.push_back(e);
    for (std::uint32_t s : elem_sets_[e])
      if (hit_[s]++ == 0)
        --uncovered_;
  }

  void unchoose(std::uint32_t e) {
    stack_.pop_back();
    for (std::uint32_t s : elem_sets_[e])
      if (--hit_[s] == 0)
        ++uncovered_;
  }

  void exclude(std::uint32_t e) {
    excluded_[e] = 1;
    for (std::uint32_t s : elem_sets_[e])
      --avail_[s];
  }

  void include(std::uint32_t e) {
    excluded_[e] = 0;
    for (std::uint32_t s : elem_sets_[e])
      ++avail_[s];
  }

  std::size_t pick_set() const {
    std::size_t best = 0;
    int best_avail = std::numeric_limits<int>::max();
    for (std::size_t s = 0; s < p_.sets.size(); ++s)
      if (hit_[s] == 0 && avail_[s] < best_avail) {
        best_avail = avail_[s];
        best = s;
      }
    return best;
  }

  // Extra elements needed to cover the uncovered sets, or kInfeasible.
  std::size_t lower_bound() {
    if (uncovered_ == 0)
      return 0;
    std::size_t packing = 0;
    touched_.clear();
    for (std::size_t s = 0; s < p_.sets.size(); ++s) {
      if (hit_[s] != 0)
        continue;
      if (avail_[s] == 0) {
        for (std::uint32_t e : touched_)
          used_[e] = 0;
        return kInfeasible;
      }
      bool disjoint = true;
      for (std::uint32_t e : p_.sets[s])
        if (!excluded_[e] && used_[e]) {
          disjoint = false;
          break;
        }
      if (!disjoint)
        continue;
      ++packing;
      for (std::uint32_t e : p_.sets[s])
        if (!excluded_[e]) {
          used_[e] = 1;
          touched_.push_back(e);
        }
    }
    for (std::uint32_t e : touched_)
      used_[e] = 0;
    std::size_t max_deg = 0;
    for (std::size_t e = 0; e < p_.element_count; ++e) {
      if (excluded_[e])
        continue;
      std::size_t deg = 0;
      for (std::uint32_t s : elem_sets_[e])
        deg += hit_[s] == 0 ? 1 : 0;
      max_deg = std::max(max_deg, deg);
    }
    const std::size_t ratio = (uncovered_ + max_deg - 1) / max_deg;
    return std::max(packing, ratio);
  }

  bool tick() {
    if (shared_.stop.load(std::memory_order_relaxed))
      return false;
    const std::uint64_t n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (shared_.limits.node_limit != 0 && n > shared_.limits.node_limit) {
      shared_.node_limit_hit = true;
      shared_.stop = true;
      return false;
    }
    if (shared_.limits.time_budget > 0 && (n & 1023) == 0 &&
        seconds_since(shared_.limits.start) > shared_.limits.time_budget) {
      shared_.time_limit_hit = true;
      shared_.stop = true;
      return false;
    }
    return true;
  }

  bool pruned(std::size_t lb) const {
    const std::uint64_t inc = shared_.incumbent.load(std::memory_order_relaxed);
    const std::size_t size = inc >> 32;
    const std::size_t owner = inc & 0xffffffffU;
    return lb > size || (lb == size && owner <= subtree_);
  }

  void dfs() {
    if (!tick())
      return;
    if (uncovered_ == 0) {
      const std::uint64_t mine = pack(stack_.size(), subtree_);
      std::uint64_t cur = shared_.incumbent.load();
      if (mine < cur) {
        best_ = stack_;
        std::sort(best_.begin(), best_.end());
        atomic_min(shared_.incumbent, mine);
        if (on_improve_ != nullptr && *on_improve_) {
          std::lock_guard lock(shared_.report_mutex);
          (*on_improve_)(best_);
        }
      }
      return;
    }
    const std::size_t extra = lower_bound();
    if (extra == kInfeasible || pruned(stack_.size() + extra))
      return;
    const std::size_t s = pick_set();
    std::vector<std::uint32_t> local;
    for (std::uint32_t e : p_.sets[s]) {
      if (excluded_[e])
        continue;
      choose(e);
      dfs();
      unchoose(e);
      exclude(e);
      local.push_back(e);
      if (shared_.stop.load(std::memory_order_relaxed))
        break;
    }
    for (std::uint32_t e : local)
      include(e);
  }

public:
  const std::function<void(const std::vector<std::uint32_t> &)> *on_improve_ = nullptr;

private:
  const HittingProblem &p_;
  const std::vector<std::vector<std::uint32_t>> &elem_sets_;
  SharedSearch &shared_;
  std::vector<int> hit_;
  std::vector<int> avail_;
  std::vector<char> excluded_;
  std::vector<char> used_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> stack_;
  std::vector<std::uint32_t> excluded_list_;
  std::vector<std::uint32_t> best_;
  std::size_t uncovered_;
  std::size_t subtree_ = 0;
};

} // namespace

HittingSolution solve_min_hitting(const HittingProblem &problem, std::size_t upper_bound,
                                  const SearchConfig &cfg,
                                  const std::function<void(const std::vector<std::uint32_t> &)> &on_improve) {
  std::vector<std::vector<std::uint32_t>> elem_sets(problem.element_count);
  for (std::size_t s = 0; s < problem.sets.size(); ++s)
    for (std::uint32_t e : problem.sets[s]) {
      if (e >= problem.element_count)
        throw Error("hitting set element out of range");
      elem_sets[e].push_back(static_cast<std::uint32_t>(s));
    }

  SharedSearch shared;
  shared.incumbent = pack(std::min<std::size_t>(upper_bound, 0xffffffffU), 0);
  shared.limits.node_limit = cfg.node_limit;
  shared.limits.time_budget = cfg.time_budget;

  const unsigned workers = resolve_workers(cfg.worker_count);
  std::vector<FrontierNode> frontier;
  if (workers == 1) {
    frontier.push_back({});
  } else {
    HittingWorker root(problem, elem_sets, shared);
    for (int depth = 1; depth <= 6; ++depth) {
      frontier.clear();
      root.collect(depth, frontier);
      if (frontier.size() >= 4 * static_cast<std::size_t>(workers))
        break;
    }
  }

  std::vector<std::vector<std::uint32_t>> results(frontier.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    HittingWorker w(problem, elem_sets, shared);
    w.on_improve_ = &on_improve;
    for (std::size_t i = next++; i < frontier.size(); i = next++) {
      if (shared.stop.load())
        break;
      w.load(frontier[i]);
      w.search(i);
      w.unload(frontier[i]);
      results[i] = w.best();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < std::min<std::size_t>(workers, frontier.size()); ++k)
      pool.emplace_back(run);
    run();
  }

  HittingSolution out;
  const std::uint64_t inc = shared.incumbent.load();
  out.nodes = shared.nodes.load();
  out.node_limit_hit = shared.node_limit_hit.load();
  out.time_limit_hit = shared.time_limit_hit.load();
  out.exhausted = !shared.stop.load();
  if ((inc >> 32) < upper_bound) {
    out.found = true;
    out.chosen = results[inc & 0xffffffffU];
  }
  return out;
}

SearchResult exact_min_hitting(int n, int d, const SearchConfig &cfg) {
  constexpr std::uint64_t kGreedySeeds = 64;
  const auto t0 = Clock::now();
  check_dimension(n);
  if (d < 1 || d > n)
    throw Error("exact_min_hitting needs 1 <= d <= n");
  if (n > 12)
    throw Error("exact_min_hitting is limited to n <= 12");
  HittingProblem problem;
  problem.element_count = static_cast<std::size_t>(edge_count(n));
  std::vector<EdgeIndex> scratch;
  for (const Subcube &s : enumerate_subcubes(n, d)) {
    subcube_edge_indices(s, scratch);
    problem.sets.emplace_back(scratch.begin(), scratch.end());
  }
  auto complement = [n](const std::vector<std::uint32_t> &chosen) {
    CubeSubgraph g(n, true);
    for (std::uint32_t e : chosen)
      g.remove(e);
    return g;
  };
  std::function<void(const std::vector<std::uint32_t> &)> report;
  if (cfg.on_incumbent)
    report = [&](const std::vector<std::uint32_t> &chosen) { cfg.on_incumbent(complement(chosen)); };
  // Greedy completions from shuffled orders give the starting incumbent; the
  // search only reports strictly smaller hitting sets.
  CubeSubgraph seed = greedy_complete(CubeSubgraph(n, false), d);
  for (std::uint64_t k = 0; k < kGreedySeeds; ++k) {
    CubeSubgraph g = greedy_complete(CubeSubgraph(n, false), d, shuffled_edge_order(n, cfg.rng_seed + k));
    if (g.omitted_count() < seed.omitted_count())
      seed = std::move(g);
  }
  const auto seed_size = static_cast<std::size_t>(seed.omitted_count());
  const HittingSolution sol = solve_min_hitting(problem, seed_size, cfg, report);

  SearchResult r;
  r.best = sol.found ? complement(sol.chosen) : seed;
  r.optimal = sol.exhausted;
  r.nodes_explored = sol.nodes;
  r.node_limit_hit = sol.node_limit_hit;
  r.time_limit_hit = sol.time_limit_hit;
  r.rounds = 1;
  r.elapsed = seconds_since(t0);
  return r;
}

// ---------------------------------------------------------------------------
// Perturbation

namespace {

class Extender {
public:
  Extender(SubcubeDeficit &deficit, CubeSubgraph &g, std::uint64_t node_limit)
      : deficit_(deficit), g_(g), node_limit_(node_limit) {}

  // Largest set of candidates that can be added together; first in
  // include-first order among the largest.
  std::vector<EdgeIndex> run(const std::vector<EdgeIndex> &candidates) {
    cand_ = &candidates;
    best_.clear();
    best_size_ = -1;
    nodes_ = 0;
    dfs(0);
    return best_;
  }

private:
  void dfs(std::size_t pos) {
    if (node_limit_ != 0 && ++nodes_ > node_limit_)
      return;
    const auto &c = *cand_;
    std::size_t first = c.size();
    long addable = 0;
    for (std::size_t i = pos; i < c.size(); ++i)
      if (!g_.has(c[i]) && deficit_.addable(c[i])) {
        if (first == c.size())
          first = i;
        ++addable;
      }
    const long added = static_cast<long>(chosen_.size());
    if (added + addable <= best_size_)
      return;
    if (addable == 0) {
      best_size_ = added;
      best_ = chosen_;
      return;
    }
    const EdgeIndex e = c[first];
    g_.add(e);
    deficit_.on_add(e);
    chosen_.push_back(e);
    dfs(first + 1);
    chosen_.pop_back();
    deficit_.on_remove(e);
    g_.remove(e);
    dfs(first + 1);
  }

  SubcubeDeficit &deficit_;
  CubeSubgraph &g_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  const std::vector<EdgeIndex> *cand_ = nullptr;
  std::vector<EdgeIndex> chosen_;
  std::vector<EdgeIndex> best_;
  long best_size_ = -1;
};

// Lexicographic unranking of t-subsets of {0..size-1}.
std::vector<std::size_t> unrank_subset(std::uint64_t rank, std::size_t size, int t) {
  std::vector<std::size_t> out;
  std::size_t x = 0;
  for (int j = 0; j < t; ++j) {
    while (true) {
      const std::uint64_t below =
          binomial(static_cast<int>(size - x - 1), t - j - 1); // subsets starting with x
      if (rank < below)
        break;
      rank -= below;
      ++x;
    }
    out.push_back(x++);
  }
  return out;
}

bool next_subset(std::vector<std::size_t> &s, std::size_t size) {
  const int t = static_cast<int>(s.size());
  int i = t - 1;
  while (i >= 0 && s[static_cast<std::size_t>(i)] == size - static_cast<std::size_t>(t - i))
    --i;
  if (i < 0)
    return false;
  ++s[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < t; ++j)
    s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

} // namespace

SearchResult perturb(const CubeSubgraph &g, int d, const SearchConfig &cfg) {
  const auto t0 = Clock::now();
  if (cfg.remove_t < 0)
    throw Error("perturbation depth must be >= 0");
  if (d < 1 || d > g.n())
    throw Error("perturb needs 1 <= d <= n");
  {
    const auto f = is_free(g, d);
    if (!f.free)
      throw Error("perturb: input is not Q" + std::to_string(d) + "-free (full subcube " +
                  format_subcube(*f.witness) + ")");
  }
  const SubcubeIncidence inc(g.n(), d);
  const unsigned workers = resolve_workers(cfg.worker_count);
  const int t = cfg.remove_t;

  SearchResult result;
  result.best = g;
  std::uint64_t nodes = 0;
  std::atomic<bool> timed_out{false};

  while (true) {
    ++result.rounds;
    const CubeSubgraph current = result.best;
    const EdgeIndex current_count = current.present_count();
    const std::vector<EdgeIndex> present = current.present_edges();
    const std::vector<EdgeIndex> omitted = current.omitted_edges();
    const SubcubeDeficit base_deficit(inc, current);

    std::vector<std::vector<std::size_t>> sampled;
    std::uint64_t count = 0;
    if (cfg.sample != 0 && t > 0) {
      std::mt19937_64 rng(cfg.rng_seed + static_cast<std::uint64_t>(result.rounds));
      const std::size_t limit = present.size();
      for (std::uint64_t i = 0; i < cfg.sample && static_cast<std::size_t>(t) <= limit; ++i) {
        std::set<std::size_t> pick;
        std::uniform_int_distribution<std::size_t> dist(0, limit - 1);
        while (pick.size() < static_cast<std::size_t>(t))
          pick.insert(dist(rng));
        sampled.emplace_back(pick.begin(), pick.end());
      }
      count = sampled.size();
    } else {
      count = static_cast<std::size_t>(t) <= present.size() ? binomial(static_cast<int>(present.size()), t) : 0;
      if (t == 0)
        count = 1;
    }
    bool truncated = false;
    if (cfg.node_limit != 0) {
      const std::uint64_t left = cfg.node_limit > nodes ? cfg.node_limit - nodes : 0;
      if (count > left) {
        count = left;
        truncated = true;
      }
    }

    std::atomic<std::uint64_t> best_rank{count};
    std::atomic<std::uint64_t> next_chunk{0};
    std::mutex found_mutex;
    std::map<std::uint64_t, CubeSubgraph> found;
    constexpr std::uint64_t chunk = 256;

    auto evaluate = [&](const std::vector<std::size_t> &subset, SubcubeDeficit &deficit, CubeSubgraph &work)
        -> std::optional<CubeSubgraph> {
      std::vector<EdgeIndex> candidates = omitted;
      for (std::size_t k : subset) {
        work.remove(present[k]);
        deficit.on_remove(present[k]);
        candidates.push_back(present[k]);
      }
      std::sort(candidates.begin(), candidates.end());
      std::optional<CubeSubgraph> improved;
      if (cfg.readd == ReaddMode::exact) {
        Extender ext(deficit, work, cfg.extension_node_limit);
        const auto add = ext.run(candidates);
        if (work.present_count() + add.size() > current_count) {
          CubeSubgraph next = work;
          for (EdgeIndex e : add)
            next.add(e);
          improved = greedy_complete(next, d);
        }
      } else {
        CubeSubgraph next = work;
        SubcubeDeficit local = deficit;
        for (EdgeIndex e : candidates)
          if (!next.has(e) && local.addable(e)) {
            next.add(e);
            local.on_add(e);
          }
        if (next.present_count() > current_count)
          improved = std::move(next);
      }
      for (std::size_t k : subset) {
        work.add(present[k]);
        deficit.on_add(present[k]);
      }
      return improved;
    };

    auto run = [&] {
      SubcubeDeficit deficit = base_deficit;
      CubeSubgraph work = current;
      while (true) {
        const std::uint64_t begin = next_chunk.fetch_add(chunk);
        if (begin >= count || begin > best_rank.load() || timed_out.load())
          return;
        const std::uint64_t end = std::min(count, begin + chunk);
        std::vector<std::size_t> subset =
            sampled.empty() ? unrank_subset(begin, present.size(), t) : std::vector<std::size_t>{};
        for (std::uint64_t r = begin; r < end; ++r) {
          if (r > best_rank.load(std::memory_order_relaxed))
            return;
          if (!sampled.empty())
            subset = sampled[r];
          else if (r != begin)
            next_subset(subset, present.size());
          if (auto better = evaluate(subset, deficit, work)) {
            {
              std::lock_guard lock(found_mutex);
              found.emplace(r, std::move(*better));
            }
            atomic_min(best_rank, r);
            return;
          }
        }
        if (cfg.time_budget > 0 && seconds_since(t0) > cfg.time_budget)
          timed_out = true;
      }
    };
    {
      std::vector<std::jthread> pool;
      for (unsigned k = 1; k < workers; ++k)
        pool.emplace_back(run);
      run();
    }

    if (!found.empty()) {
      const auto &[rank, graph] = *found.begin();
      nodes += rank + 1;
      result.best = graph;
      ++result.improvements;
      if (cfg.on_incumbent)
        cfg.on_incumbent(result.best);
      if (timed_out) {
        result.time_limit_hit = true;
        break;
      }
      if (cfg.node_limit != 0 && nodes >= cfg.node_limit) {
        result.node_limit_hit = true;
        break;
      }
      continue;
    }
    nodes += count;
    result.node_limit_hit = truncated;
    result.time_limit_hit = timed_out.load();
    result.optimal = !truncated && !timed_out.load() && sampled.empty();
    break;
  }
  result.nodes_explored = nodes;
  result.elapsed = seconds_since(t0);
  return result;
}

} // namespace qfree
