//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfree/coloring.hpp"
#include "qfree/fixtures.hpp"
#include "qfree/general.hpp"
#include "qfree/product.hpp"
#include "qfree/recurrence.hpp"
#include "qfree/search.hpp"
#include "qfree/subgraph.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qfree;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

struct Globals {
  std::string format = "human";
  unsigned workers = 0;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Human form prints the same document, one "key: value" per line.
void print_human(const json &j, const std::string &indent = "") {
  for (const auto &[key, value] : j.items()) {
    if (value.is_object()) {
      std::cout << indent << key << ":\n";
      print_human(value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::cout << indent << key << ":\n";
      for (const auto &row : value) {
        std::cout << indent << "  -";
        for (const auto &[k, v] : row.items())
          std::cout << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
        std::cout << '\n';
      }
    } else if (value.is_string()) {
      std::cout << indent << key << ": " << value.get<std::string>() << '\n';
    } else {
      std::cout << indent << key << ": " << value.dump() << '\n';
    }
  }
}

void emit(const Globals &g, const json &report) {
  if (g.format == "machine")
    std::cout << report.dump(2) << '\n';
  else
    print_human(report);
}

int forbid_dimension(const std::string &text) {
  if (text == "q2" || text == "c4")
    return 2;
  if (text == "q3")
    return 3;
  if (text.rfind("qd=", 0) == 0) {
    try {
      const int d = std::stoi(text.substr(3));
      if (d >= 1)
        return d;
    } catch (const std::exception &) {
    }
  }
  throw Error("unknown --forbid value '" + text + "' (q2|q3|qd=<d>)");
}

CubeSubgraph load_graph(const std::string &source, const std::string &mode) {
  if (is_named_graph(source))
    return named_graph(source);
  const EdgeList list = read_edge_list_file(source);
  return from_edge_list(list.n, list.edges, parse_list_mode(mode));
}

AeoColoring load_coloring(const std::string &source) {
  for (const auto &name : builtin_coloring_names())
    if (name == source)
      return builtin_coloring(source);
  return read_coloring_file(source);
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream f(path);
  if (!f)
    throw Error("cannot write '" + path + "'");
  f << content;
}

json class_stats_json(const CubeSubgraph &g) {
  const ClassStats s = parallel_class_stats(g);
  return json{{"present", s.present}, {"omitted", s.omitted}, {"best_direction", s.best_direction}};
}

json stats_json(const ColoringStats &s) {
  return json{{"m", s.m}, {"a", s.count_a}, {"e", s.count_e}, {"o", s.count_o}};
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::string mode = "present";
  std::string forbid = "q3";
};

int cmd_verify(const Globals &g, const VerifyArgs &a) {
  const auto t0 = Clock::now();
  const CubeSubgraph graph = load_graph(a.file, a.mode);
  const int d = forbid_dimension(a.forbid);
  const FreenessResult r = is_free(graph, d, g.workers);
  json report{{"command", "verify"},
              {"input", a.file},
              {"mode", is_named_graph(a.file) ? "named" : a.mode},
              {"n", graph.n()},
              {"present", graph.present_count()},
              {"omitted", graph.omitted_count()},
              {"forbidden_dimension", d},
              {"subcubes_checked", subcube_count(graph.n(), d)},
              {"free", r.free},
              {"witness", r.witness ? json(format_subcube(*r.witness)) : json(nullptr)},
              {"classes", class_stats_json(graph)},
              {"elapsed_seconds", seconds_since(t0)}};
  emit(g, report);
  return r.free ? kExitOk : kExitNegative;
}

// --- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string base;
  std::string mode = "present";
  std::string direction = "auto";
  std::string coloring = "q3_aeo";
  std::string target = "q3";
  unsigned parity = 0;
  std::string out;
};

int cmd_construct(const Globals &g, const ConstructArgs &a) {
  const auto t0 = Clock::now();
  ProductSpec spec;
  spec.base = load_graph(a.base, a.mode);
  spec.coloring = load_coloring(a.coloring);
  spec.parity_convention = a.parity;
  spec.target = parse_coloring_target(a.target);
  if (a.direction != "auto") {
    try {
      spec.direction = std::stoi(a.direction);
    } catch (const std::exception &) {
      throw Error("bad --direction '" + a.direction + "'");
    }
    if (spec.direction < 1)
      throw Error("bad --direction '" + a.direction + "'");
  }
  const int d = spec.target == ColoringTarget::q3 ? 3 : 2;
  const int k = spec.base.n();
  const int dir = product_direction(spec);
  const auto e_k = static_cast<std::int64_t>(spec.base.present_count());
  const auto p_k = static_cast<std::int64_t>(spec.base.class_present(dir));
  const ColoringStats stats = spec.coloring.stats();
  const std::int64_t predicted = predicted_edge_count(e_k, p_k, stats, k);
  const CubeSubgraph product = build_product(spec);
  const FreenessResult fr = is_free(product, d, g.workers);
  const auto actual = static_cast<std::int64_t>(product.present_count());
  if (!a.out.empty())
    write_file(a.out, format_subgraph(product, ListMode::present));
  json report{{"command", "construct"},
              {"base", a.base},
              {"k", k},
              {"base_free", is_free(spec.base, d, g.workers).free},
              {"direction", dir},
              {"e_k", e_k},
              {"p_k", p_k},
              {"coloring", a.coloring},
              {"coloring_stats", stats_json(stats)},
              {"parity_convention", a.parity},
              {"n", product.n()},
              {"predicted_present", predicted},
              {"present", actual},
              {"omitted", product.omitted_count()},
              {"counts_match", predicted == actual},
              {"forbidden_dimension", d},
              {"free", fr.free},
              {"witness", fr.witness ? json(format_subcube(*fr.witness)) : json(nullptr)},
              {"out", a.out.empty() ? json(nullptr) : json(a.out)},
              {"elapsed_seconds", seconds_since(t0)}};
  emit(g, report);
  return (fr.free && predicted == actual) ? kExitOk : kExitNegative;
}

// --- recur ------------------------------------------------------------------

struct RecurArgs {
  std::string seeds = "7:56,8:128,9:352";
  std::string coloring = "q4_aeo";
  int k_max = 27;
  std::string edges_step;   // "e,p,k"
  std::string omitted_step; // "c,q,k"
};

std::vector<std::int64_t> parse_triple(const std::string &text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception &) {
      throw Error("expected three comma-separated integers, got '" + text + "'");
    }
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  if (out.size() != 3)
    throw Error("expected three comma-separated integers, got '" + text + "'");
  return out;
}

int cmd_recur(const Globals &g, const RecurArgs &a) {
  const AeoColoring coloring = load_coloring(a.coloring);
  const ColoringStats stats = coloring.stats();
  json report{{"command", "recur"}, {"coloring", a.coloring}, {"coloring_stats", stats_json(stats)}};
  if (!a.edges_step.empty()) {
    const auto v = parse_triple(a.edges_step);
    const int k = static_cast<int>(v[2]);
    report["step"] = json{{"form", "edges"}, {"e_k", v[0]}, {"p_k", v[1]}, {"k", k},
                          {"next_k", k + stats.m - 1}, {"value", step_edges(v[0], v[1], stats, k)}};
    emit(g, report);
    return kExitOk;
  }
  if (!a.omitted_step.empty()) {
    const auto v = parse_triple(a.omitted_step);
    const int k = static_cast<int>(v[2]);
    report["step"] = json{{"form", "omitted"}, {"c_k", v[0]}, {"q_k", v[1]}, {"k", k},
                          {"next_k", k + stats.m - 1}, {"value", step_omitted(v[0], v[1], stats, k)}};
    emit(g, report);
    return kExitOk;
  }
  const auto rows = bound_table(parse_seeds(a.seeds), stats, a.k_max);
  if (g.format == "machine") {
    json table = json::array();
    for (const auto &r : rows)
      table.push_back(json{{"k", r.k},
                           {"lb", r.lower_bound ? json(*r.lower_bound) : json(nullptr)},
                           {"ub", r.upper_bound},
                           {"seeded", r.seeded},
                           {"lb_ratio", r.lb_ratio ? json(format_ratio(*r.lb_ratio)) : json(nullptr)},
                           {"ub_ratio", format_ratio(r.ub_ratio)}});
    report["seeds"] = a.seeds;
    report["rows"] = table;
    std::cout << report.dump(2) << '\n';
    return kExitOk;
  }
  std::printf("%4s %14s %14s %9s %9s\n", "k", "LB", "UB", "LB/e", "UB/e");
  for (const auto &r : rows) {
    const std::string lb = r.lower_bound ? std::to_string(*r.lower_bound) : "-";
    const std::string lbr = r.lb_ratio ? format_ratio(*r.lb_ratio) : "-";
    std::printf("%4d %14s %14lld %9s %9s%s\n", r.k, lb.c_str(), static_cast<long long>(r.upper_bound),
                lbr.c_str(), format_ratio(r.ub_ratio).c_str(), r.seeded ? "  (seed)" : "");
  }
  return kExitOk;
}

// --- general ----------------------------------------------------------------

struct GeneralArgs {
  int n = 0;
  std::string residue = "best";
  std::string out;
};

int cmd_general(const Globals &g, const GeneralArgs &a) {
  const auto t0 = Clock::now();
  std::optional<int> r;
  if (a.residue != "best") {
    if (a.residue.size() != 1 || a.residue[0] < '0' || a.residue[0] > '3')
      throw Error("--residue must be 0..3 or best");
    r = a.residue[0] - '0';
  }
  const CubeSubgraph graph = general_construction(a.n, r);
  const int used = r ? *r : smallest_residue(a.n);
  const auto sizes = residue_class_sizes(a.n);
  if (!a.out.empty())
    write_file(a.out, format_subgraph(graph, ListMode::omitted));
  json report{{"command", "general"},
              {"n", a.n},
              {"residue", used},
              {"class_sizes", sizes},
              {"covering", true},
              {"present", graph.present_count()},
              {"omitted", graph.omitted_count()},
              {"omitted_fraction", static_cast<double>(graph.omitted_count()) / static_cast<double>(graph.total())},
              {"free", true},
              {"out", a.out.empty() ? json(nullptr) : json(a.out)},
              {"elapsed_seconds", seconds_since(t0)}};
  emit(g, report);
  return kExitOk;
}

// --- search -----------------------------------------------------------------

struct SearchArgs {
  int n = 5;
  int d = 3;
  std::string file;
  std::string mode = "present";
  int t = 2;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  std::uint64_t node_limit = 0;
  double time_budget = 0.0;
  std::string readd = "exact";
  std::string checkpoint;
  std::string out;
  bool require_improvement = false;
};

json search_json(const SearchResult &r) {
  return json{{"present", r.best.present_count()},
              {"omitted", r.best.omitted_count()},
              {"optimal", r.optimal},
              {"nodes_explored", r.nodes_explored},
              {"node_limit_hit", r.node_limit_hit},
              {"time_limit_hit", r.time_limit_hit},
              {"rounds", r.rounds},
              {"improvements", r.improvements},
              {"elapsed_seconds", r.elapsed}};
}

SearchConfig make_config(const Globals &g, const SearchArgs &a) {
  SearchConfig cfg;
  cfg.worker_count = g.workers;
  cfg.rng_seed = a.seed;
  cfg.node_limit = a.node_limit;
  cfg.time_budget = a.time_budget;
  cfg.remove_t = a.t;
  cfg.sample = a.sample;
  if (a.readd == "exact")
    cfg.readd = ReaddMode::exact;
  else if (a.readd == "greedy")
    cfg.readd = ReaddMode::greedy;
  else
    throw Error("--readd must be exact or greedy");
  if (!a.checkpoint.empty()) {
    const std::string path = a.checkpoint;
    cfg.on_incumbent = [path](const CubeSubgraph &best) { write_file(path, format_subgraph(best, ListMode::omitted)); };
  }
  return cfg;
}

int cmd_search_exact(const Globals &g, SearchArgs a) {
  if (a.node_limit == 0)
    a.node_limit = kDefaultExactNodeLimit;
  const SearchConfig cfg = make_config(g, a);
  const SearchResult r = exact_min_hitting(a.n, a.d, cfg);
  if (!a.out.empty())
    write_file(a.out, format_subgraph(r.best, ListMode::omitted));
  json report{{"command", "search exact"}, {"n", a.n}, {"d", a.d}, {"node_limit", a.node_limit}};
  report["result"] = search_json(r);
  report["classes"] = class_stats_json(r.best);
  report["free"] = is_free(r.best, a.d).free;
  emit(g, report);
  return kExitOk;
}

int cmd_search_perturb(const Globals &g, const SearchArgs &a) {
  const CubeSubgraph input = load_graph(a.file, a.mode);
  const SearchConfig cfg = make_config(g, a);
  const SearchResult r = perturb(input, a.d, cfg);
  if (!a.out.empty())
    write_file(a.out, format_subgraph(r.best, ListMode::omitted));
  const bool improved = r.best.present_count() > input.present_count();
  json report{{"command", "search perturb"},
              {"input", a.file},
              {"d", a.d},
              {"t", a.t},
              {"sample", a.sample},
              {"input_present", input.present_count()},
              {"improved", improved},
              {"unchanged", r.best == input}};
  report["result"] = search_json(r);
  report["free"] = is_free(r.best, a.d).free;
  emit(g, report);
  return (a.require_improvement && !improved) ? kExitNegative : kExitOk;
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string file;
  std::string mode = "present";
  std::string forbid = "q3";
};

int cmd_analyze(const Globals &g, const AnalyzeArgs &a) {
  const CubeSubgraph graph = load_graph(a.file, a.mode);
  const int d = forbid_dimension(a.forbid);
  const FreenessResult fr = is_free(graph, d, g.workers);
  json report{{"command", "analyze"},
              {"input", a.file},
              {"n", graph.n()},
              {"present", graph.present_count()},
              {"omitted", graph.omitted_count()},
              {"forbidden_dimension", d},
              {"free", fr.free}};
  report["classes"] = class_stats_json(graph);
  if (fr.free) {
    const MaximalityResult mr = is_maximal(graph, d);
    report["maximal"] = mr.maximal;
    report["addable_edges"] = mr.addable.size();
  } else {
    report["maximal"] = nullptr;
    report["witness"] = format_subcube(*fr.witness);
  }
  if (graph.n() >= 2) {
    const int dir = parallel_class_stats(graph).best_direction;
    const SplitResult split = split_by_direction(graph, dir);
    report["split"] = json{{"direction", dir},
                           {"half0_present", split.half0.present_count()},
                           {"half1_present", split.half1.present_count()},
                           {"crossing", split.crossing.size()}};
  }
  // omitted edges by lower-endpoint parity and by p(e) mod 4
  std::array<std::uint64_t, 2> parity{};
  std::array<std::uint64_t, 4> residue{};
  std::map<int, std::uint64_t> p_hist;
  for (EdgeIndex i : graph.omitted_edges()) {
    const EdgeRef e = edge_from_index(graph.n(), i);
    ++parity[static_cast<std::size_t>(Vertex{graph.n(), e.lower()}.parity())];
    ++residue[static_cast<std::size_t>(p_residue(e))];
    ++p_hist[edge_p_value(e)];
  }
  report["omitted_by_lower_parity"] = parity;
  report["omitted_by_p_mod4"] = residue;
  json hist = json::object();
  for (const auto &[p, c] : p_hist)
    hist[std::to_string(p)] = c;
  report["omitted_p_histogram"] = hist;
  emit(g, report);
  return kExitOk;
}

// --- coloring ---------------------------------------------------------------

struct ColoringArgs {
  std::string source;
  std::string target = "q3";
  std::string mode = "present";
  std::string out;
};

json violations_json(const ColoringReport &r) {
  json arr = json::array();
  for (const auto &v : r.violations)
    arr.push_back(json{{"subcube", format_subcube(v.where)}, {"condition", v.condition}});
  return arr;
}

int cmd_coloring_list(const Globals &g) {
  json list = json::array();
  for (const auto &name : builtin_coloring_names()) {
    const AeoColoring c = builtin_coloring(name);
    list.push_back(json{{"name", name}, {"m", c.m()}, {"a", c.stats().count_a}, {"e", c.stats().count_e},
                        {"o", c.stats().count_o}});
  }
  emit(g, json{{"command", "coloring list"}, {"colorings", list}});
  return kExitOk;
}

int cmd_coloring_validate(const Globals &g, const ColoringArgs &a) {
  const AeoColoring c = load_coloring(a.source);
  const ColoringTarget target = parse_coloring_target(a.target);
  const ColoringReport r = validate(c, target);
  emit(g, json{{"command", "coloring validate"},
               {"coloring", a.source},
               {"target", to_string(target)},
               {"stats", stats_json(c.stats())},
               {"valid", r.ok},
               {"violations", violations_json(r)}});
  return r.ok ? kExitOk : kExitNegative;
}

int cmd_coloring_split(const Globals &g, const ColoringArgs &a) {
  const CubeSubgraph h = load_graph(a.source, a.mode);
  const SplitOutcome s = split_nonedges_to_eo(h);
  json report{{"command", "coloring split"}, {"input", a.source}, {"m", h.n()}, {"a_edges", h.present_count()}};
  report["success"] = s.coloring.has_value();
  report["nodes"] = s.nodes;
  if (s.coloring) {
    const ColoringReport check = validate(*s.coloring, ColoringTarget::q3);
    report["stats"] = stats_json(s.coloring->stats());
    report["valid"] = check.ok;
    if (!a.out.empty())
      write_file(a.out, format_coloring(*s.coloring));
  } else {
    report["failure"] = s.failure;
    report["witness"] = s.witness ? json(format_subcube(*s.witness)) : json(nullptr);
  }
  report["out"] = a.out.empty() ? json(nullptr) : json(a.out);
  emit(g, report);
  return s.coloring ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Constructions, verification and search for Q3-free subgraphs of the hypercube"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--format", globals.format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.add_option("--workers", globals.workers, "Worker threads (0 = all cores)")->capture_default_str();

  VerifyArgs verify;
  auto *verify_cmd = app.add_subcommand("verify", "Check a graph for a forbidden subcube");
  verify_cmd->fallthrough();
  verify_cmd->add_option("file", verify.file, "Edge-list file or @name")->required();
  verify_cmd->add_option("--mode", verify.mode, "present|omitted")->capture_default_str();
  verify_cmd->add_option("--forbid", verify.forbid, "q2|q3|qd=<d>")->capture_default_str();

  ConstructArgs construct;
  auto *construct_cmd = app.add_subcommand("construct", "Product of a base graph with an aeo-colored cube");
  construct_cmd->fallthrough();
  construct_cmd->add_option("base", construct.base, "Base edge-list file or @name")->required();
  construct_cmd->add_option("--mode", construct.mode, "present|omitted")->capture_default_str();
  construct_cmd->add_option("--direction", construct.direction, "auto or 1..k")->capture_default_str();
  construct_cmd->add_option("--coloring", construct.coloring, "Builtin name or coloring file")->capture_default_str();
  construct_cmd->add_option("--target", construct.target, "q3|c4")->capture_default_str();
  construct_cmd->add_option("--parity", construct.parity, "Vertex class carrying e edges")
      ->check(CLI::Range(0, 1))
      ->capture_default_str();
  construct_cmd->add_option("--out", construct.out, "Write the product (present edges)");

  RecurArgs recur;
  auto *recur_cmd = app.add_subcommand("recur", "Recurrence steps and the bound table");
  recur_cmd->fallthrough();
  recur_cmd->add_option("--seeds", recur.seeds, "k:c pairs")->capture_default_str();
  recur_cmd->add_option("--coloring", recur.coloring, "Coloring driving the step")->capture_default_str();
  recur_cmd->add_option("--kmax", recur.k_max, "Last table row")->capture_default_str();
  recur_cmd->add_option("--edges", recur.edges_step, "Single present-edge step e,p,k");
  recur_cmd->add_option("--omitted", recur.omitted_step, "Single omitted-edge step c,q,k");

  GeneralArgs general;
  auto *general_cmd = app.add_subcommand("general", "Q_n minus a residue class of p(e) mod 4");
  general_cmd->fallthrough();
  general_cmd->add_option("n", general.n, "Dimension")->required()->check(CLI::Range(3, 20));
  general_cmd->add_option("--residue", general.residue, "0..3 or best")->capture_default_str();
  general_cmd->add_option("--out", general.out, "Write the omitted edges");

  SearchArgs search;
  auto *search_cmd = app.add_subcommand("search", "Exact and local search");
  search_cmd->require_subcommand(1);
  search_cmd->fallthrough();
  auto add_common = [&](CLI::App *cmd) {
    cmd->fallthrough();
    cmd->add_option("--d", search.d, "Forbidden subcube dimension")->capture_default_str();
    cmd->add_option("--node-limit", search.node_limit, "Node budget (0 = default/none)");
    cmd->add_option("--time", search.time_budget, "Soft wall-clock budget in seconds");
    cmd->add_option("--seed", search.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--checkpoint", search.checkpoint, "Write each incumbent here");
    cmd->add_option("--out", search.out, "Write the final graph (omitted edges)");
  };
  auto *exact_cmd = search_cmd->add_subcommand("exact", "Minimum omitted-edge set by branch and bound");
  add_common(exact_cmd);
  exact_cmd->add_option("--n", search.n, "Dimension")->capture_default_str()->check(CLI::Range(1, 12));
  auto *perturb_cmd = search_cmd->add_subcommand("perturb", "Remove t edges, re-add, keep improvements");
  add_common(perturb_cmd);
  perturb_cmd->add_option("file", search.file, "Edge-list file or @name")->required();
  perturb_cmd->add_option("--mode", search.mode, "present|omitted")->capture_default_str();
  perturb_cmd->add_option("--t", search.t, "Edges removed per move")->capture_default_str();
  perturb_cmd->add_option("--sample", search.sample, "Random subsets per round (0 = all)")->capture_default_str();
  perturb_cmd->add_option("--readd", search.readd, "exact|greedy")->capture_default_str();
  perturb_cmd->add_flag("--require-improvement", search.require_improvement, "Exit 1 when nothing improves");

  AnalyzeArgs analyze;
  auto *analyze_cmd = app.add_subcommand("analyze", "Class statistics, maximality and p(e) histogram");
  analyze_cmd->fallthrough();
  analyze_cmd->add_option("file", analyze.file, "Edge-list file or @name")->required();
  analyze_cmd->add_option("--mode", analyze.mode, "present|omitted")->capture_default_str();
  analyze_cmd->add_option("--forbid", analyze.forbid, "q2|q3|qd=<d>")->capture_default_str();

  ColoringArgs coloring;
  auto *coloring_cmd = app.add_subcommand("coloring", "aeo-colorings");
  coloring_cmd->require_subcommand(1);
  coloring_cmd->fallthrough();
  auto *list_cmd = coloring_cmd->add_subcommand("list", "Builtin colorings");
  list_cmd->fallthrough();
  auto *validate_cmd = coloring_cmd->add_subcommand("validate", "Check the aeo conditions");
  validate_cmd->fallthrough();
  validate_cmd->add_option("coloring", coloring.source, "Builtin name or file")->required();
  validate_cmd->add_option("--target", coloring.target, "q3|c4")->capture_default_str();
  auto *split_cmd = coloring_cmd->add_subcommand("split", "Split the non-edges of a C4-free graph into e/o");
  split_cmd->fallthrough();
  split_cmd->add_option("file", coloring.source, "Edge-list file or @name")->required();
  split_cmd->add_option("--mode", coloring.mode, "present|omitted")->capture_default_str();
  split_cmd->add_option("--out", coloring.out, "Write the coloring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*verify_cmd)
      return cmd_verify(globals, verify);
    if (*construct_cmd)
      return cmd_construct(globals, construct);
    if (*recur_cmd)
      return cmd_recur(globals, recur);
    if (*general_cmd)
      return cmd_general(globals, general);
    if (*exact_cmd)
      return cmd_search_exact(globals, search);
    if (*perturb_cmd)
      return cmd_search_perturb(globals, search);
    if (*analyze_cmd)
      return cmd_analyze(globals, analyze);
    if (*list_cmd)
      return cmd_coloring_list(globals);
    if (*validate_cmd)
      return cmd_coloring_validate(globals, coloring);
    if (*split_cmd)
      return cmd_coloring_split(globals, coloring);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
