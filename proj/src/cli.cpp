#include "twr/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "twr/chain.hpp"
#include "twr/classes.hpp"
#include "twr/oracle.hpp"
#include "twr/problems.hpp"
#include "twr/reduction.hpp"
#include "twr/separation.hpp"
#include "twr/solver.hpp"
#include "twr/treedecomp.hpp"

namespace twr {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string graph_path;
  int s = 0, t = 0;
  std::string cut, uncut, terminals, allowed;
  int k = 0;
  std::string cls = "edgeless";
  std::string td_out;
  std::uint64_t seed = 1;
  int trials = 20;
  int max_n = 9;
  std::vector<std::string> suites;
  bool timing = false;
  std::set<std::string> given;  // flags present on the command line
};

struct CommandInfo {
  std::vector<std::string> required;
  std::vector<std::string> optional;
  std::string help;
};

const std::map<std::string, CommandInfo>& commands() {
  static const std::map<std::string, CommandInfo> table = {
      {"minsep", {{"graph", "s", "t"}, {"k"}, "minimum s-t vertex separator"}},
      {"chain", {{"graph", "s", "t"}, {}, "nested chain of minimum separators"}},
      {"cover", {{"graph", "s", "t", "k"}, {}, "cover set of small minimal separators"}},
      {"reduce", {{"graph", "k"}, {"s", "t", "terminals", "td-out"}, "bounded-treewidth replacement graph"}},
      {"decompose", {{"graph"}, {"td-out"}, "tree decomposition"}},
      {"gmincut", {{"graph", "s", "t", "k"}, {"class"}, "separator inducing a graph in a class"}},
      {"multicut", {{"graph", "cut", "k"}, {"uncut", "class"}, "multicut with uncut pairs"}},
      {"stable-cut", {{"graph", "s", "t", "k"}, {}, "independent s-t separator"}},
      {"eivc", {{"graph", "s", "t", "k"}, {}, "edge-induced vertex cut"}},
      {"oct", {{"graph", "k"}, {}, "minimum odd cycle transversal"}},
      {"stable-bip", {{"graph", "k"}, {}, "independent odd cycle transversal"}},
      {"exact-stable-bip", {{"graph", "k"}, {"allowed"}, "independent odd cycle transversal of size exactly k"}},
      {"exact-c", {{"graph", "s", "t", "k"}, {}, "union of minimal separators of size at most k"}},
      {"selfcheck", {{}, {"trials", "seed", "k", "max-n", "suite"}, "cross-check fast paths against brute force"}},
  };
  return table;
}

std::string usage() {
  std::ostringstream out;
  out << "usage: twr <command> [flags]\n\ncommands:\n";
  for (const auto& [name, info] : commands()) {
    out << "  " << name;
    for (const auto& f : info.required) out << " --" << f << " <..>";
    for (const auto& f : info.optional) out << " [--" << f << " <..>]";
    out << "\n      " << info.help << "\n";
  }
  out << "\nVertex ids are 1-based. Add --timing to include time_ms in stats.\n";
  return out.str();
}

Options parse_options(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing command");
  Options o;
  o.command = args[0];
  auto info = commands().find(o.command);
  if (info == commands().end()) throw UsageError("unknown command '" + o.command + "'");

  CLI::App app{"twr " + o.command};
  app.set_help_flag();
  std::map<std::string, CLI::Option*> opts;
  opts["graph"] = app.add_option("--graph", o.graph_path);
  opts["s"] = app.add_option("--s", o.s);
  opts["t"] = app.add_option("--t", o.t);
  opts["cut"] = app.add_option("--cut", o.cut);
  opts["uncut"] = app.add_option("--uncut", o.uncut);
  opts["terminals"] = app.add_option("--terminals", o.terminals);
  opts["allowed"] = app.add_option("--allowed", o.allowed);
  opts["k"] = app.add_option("--k", o.k);
  opts["class"] = app.add_option("--class", o.cls);
  opts["td-out"] = app.add_option("--td-out", o.td_out);
  opts["seed"] = app.add_option("--seed", o.seed);
  opts["trials"] = app.add_option("--trials", o.trials);
  opts["max-n"] = app.add_option("--max-n", o.max_n);
  opts["suite"] = app.add_option("--suite", o.suites)->delimiter(',');
  app.add_flag("--timing", o.timing);

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (const auto& [name, opt] : opts)
    if (opt->count() > 0) o.given.insert(name);

  std::set<std::string> allowed(info->second.required.begin(), info->second.required.end());
  allowed.insert(info->second.optional.begin(), info->second.optional.end());
  for (const auto& name : o.given)
    if (!allowed.count(name))
      throw UsageError("--" + name + " is not accepted by '" + o.command + "'");
  for (const auto& name : info->second.required)
    if (!o.given.count(name)) throw UsageError("'" + o.command + "' needs --" + name);
  if (o.given.count("k") && o.k < 0) throw UsageError("--k must be non-negative");
  return o;
}

Vertex vertex_arg(const Graph& g, int one_based, const std::string& what) {
  if (one_based < 1 || one_based > g.num_vertices())
    throw UsageError(what + " " + std::to_string(one_based) + " is not a vertex");
  return one_based - 1;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

int to_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw UsageError("bad " + what + " '" + text + "'");
}

VertexSet vertex_list(const Graph& g, const std::string& text, const std::string& what) {
  std::vector<Vertex> out;
  for (const auto& item : split(text, ',')) out.push_back(vertex_arg(g, to_int(item, what), what));
  return VertexSet(std::move(out));
}

std::vector<TerminalPair> pair_list(const Graph& g, const std::string& text,
                                    const std::string& what) {
  std::vector<TerminalPair> out;
  for (const auto& item : split(text, ',')) {
    auto parts = split(item, ':');
    if (parts.size() != 2) throw UsageError("bad " + what + " pair '" + item + "'");
    out.emplace_back(vertex_arg(g, to_int(parts[0], what), what),
                     vertex_arg(g, to_int(parts[1], what), what));
  }
  return out;
}

Json ids(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

Json edge_ids(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back(Json::array({u + 1, v + 1}));
  return out;
}

Json optional_int(std::int64_t value, bool present) { return present ? Json(value) : Json(); }

struct Stats {
  PipelineReport pipeline;
  bool has_ell = false, has_cover = false, has_width = false, has_dp = false;

  void from(const PipelineReport& r) {
    pipeline = r;
    has_ell = r.ell >= 0;
    has_cover = r.cover_size > 0;
    has_width = r.width >= 0;
    has_dp = r.dp.total_states > 0;
  }

  Json to_json() const {
    Json j;
    j["ell"] = optional_int(pipeline.ell, has_ell);
    j["excess"] = optional_int(pipeline.excess, has_ell);
    j["cover_size"] = optional_int(pipeline.cover_size, has_cover);
    j["width"] = optional_int(pipeline.width, has_width);
    j["width_bound"] = optional_int(pipeline.width_bound, has_cover);
    j["dp_states"] = optional_int(pipeline.dp.total_states, has_dp);
    return j;
  }
};

std::string yes_no(bool yes) { return yes ? "YES" : "NO"; }

void write_td(const Options& o, const TreeDecomposition& td, int n) {
  if (o.td_out.empty()) return;
  std::ofstream f(o.td_out);
  if (!f) throw UsageError("cannot write '" + o.td_out + "'");
  f << format_td(td, n);
}

// Fails loudly if a witness does not hold up on the input instance.
void check_witness(const oracle::ProblemSpec& spec, const oracle::ProblemAnswer& ans) {
  if (!oracle::answer_is_valid(spec, ans))
    throw std::logic_error("witness failed re-verification for " + oracle::to_string(spec.kind));
}

Json run(const Options& o, Stats& stats, std::string& summary) {
  Json j;
  j["command"] = o.command;
  if (o.command == "selfcheck") {
    oracle::CheckConfig config;
    config.trials = o.trials;
    config.seed = o.seed;
    config.suites = o.suites;
    config.max_n = o.max_n;
    if (o.given.count("k")) config.max_k = o.k;
    if (config.trials < 0 || config.max_n < 1 || config.max_n > config.cap)
      throw UsageError("--trials must be >= 0 and --max-n within 1.." +
                       std::to_string(config.cap));
    for (const auto& s : config.suites) {
      auto names = oracle::suite_names();
      if (std::find(names.begin(), names.end(), s) == names.end())
        throw UsageError("unknown suite '" + s + "'");
    }
    oracle::CheckReport report = oracle::cross_check(config);
    Json r = Json::parse(oracle::report_json(report, o.timing));
    j["answer"] = report.passed() ? "PASS" : "FAIL";
    j["seed"] = o.seed;
    for (auto it = r.begin(); it != r.end(); ++it) j[it.key()] = it.value();
    summary = "selfcheck: " + std::to_string(report.trials) + " trials, " +
              std::to_string(report.mismatches.size()) + " mismatches";
    return j;
  }

  const Graph g = read_graph_file(o.graph_path);
  const Vertex s = o.given.count("s") ? vertex_arg(g, o.s, "--s") : -1;
  const Vertex t = o.given.count("t") ? vertex_arg(g, o.t, "--t") : -1;
  if (s >= 0 && s == t) throw UsageError("--s and --t must differ");
  auto needs_apart = [&]() {
    if (g.has_edge(s, t)) throw UsageError("--s and --t are adjacent");
  };

  if (o.command == "minsep") {
    SeparatorResult r =
        min_vertex_separator(g, {s}, {t}, o.given.count("k") ? std::optional<int>(o.k) : std::nullopt);
    const char* status = r.status == SeparatorStatus::kFinite     ? "YES"
                         : r.status == SeparatorStatus::kInfinite ? "INFINITE"
                                                                  : "EXCEEDS_CAP";
    j["answer"] = status;
    j["witness"] = ids(r.witness);
    j["size"] = r.finite() ? Json(r.size) : Json();
    if (r.finite()) {
      stats.pipeline.ell = r.size;
      stats.has_ell = true;
    }
    summary = std::string("minsep: ") + status + (r.finite() ? " " + to_string(r.witness) : "");
  } else if (o.command == "chain") {
    needs_apart();
    SeparatorChain chain = build_chain(g, s, t);
    j["answer"] = "YES";
    j["ell"] = chain.ell;
    j["q"] = chain.q();
    Json sets = Json::array(), seps = Json::array();
    for (int i = 1; i <= chain.q(); ++i) {
      sets.push_back(ids(chain.set(i)));
      seps.push_back(ids(chain.separator(i)));
    }
    j["sets"] = sets;
    j["separators"] = seps;
    stats.pipeline.ell = chain.ell;
    stats.pipeline.excess = 0;
    stats.has_ell = true;
    summary = "chain: ell=" + std::to_string(chain.ell) + " q=" + std::to_string(chain.q());
  } else if (o.command == "cover") {
    CoverStats cs;
    VertexSet c = cover_set(g, s, t, o.k, &cs);
    SeparatorResult sep = min_vertex_separator(g, {s}, {t});
    j["answer"] = "YES";
    j["witness"] = ids(c);
    j["cover_size"] = c.size();
    j["calls"] = cs.calls;
    j["max_depth"] = cs.max_depth;
    stats.pipeline.cover_size = static_cast<int>(c.size());
    stats.has_cover = true;
    if (sep.finite()) {
      stats.pipeline.ell = sep.size;
      stats.pipeline.excess = o.k - sep.size;
      stats.has_ell = true;
      if (sep.size >= 1 && o.k >= sep.size)
        stats.pipeline.width_bound = tw_bound(sep.size, o.k - sep.size).g_value;
    }
    summary = "cover: " + std::to_string(c.size()) + " vertices " + to_string(c);
  } else if (o.command == "reduce") {
    VertexSet terms;
    if (o.given.count("terminals")) {
      if (s >= 0 || t >= 0) throw UsageError("use either --terminals or --s/--t");
      terms = vertex_list(g, o.terminals, "--terminals");
    } else {
      if (s < 0 || t < 0) throw UsageError("'reduce' needs --terminals or both --s and --t");
      terms = {s, t};
    }
    if (terms.size() < 2) throw UsageError("at least two terminals are required");
    ReducedInstance red = reduce_instance(g, terms, o.k);
    TreeDecomposition td = decompose(red.gstar);
    write_td(o, td, red.gstar.num_vertices());
    j["answer"] = "YES";
    j["cover"] = ids(red.cover);
    j["vertices"] = red.gstar.num_vertices();
    j["edges"] = edge_ids(red.gstar.edges());
    Json origin = Json::array();
    for (Vertex v : red.origin) origin.push_back(v == kGadget ? Json() : Json(v + 1));
    j["origin"] = origin;
    j["undeletable"] = ids(red.undeletable);
    stats.pipeline.cover_size = static_cast<int>(red.cover.size());
    stats.pipeline.width = td.width();
    stats.pipeline.width_bound = red.width_bound;
    stats.has_cover = stats.has_width = true;
    summary = "reduce: cover " + std::to_string(red.cover.size()) + ", reduced graph " +
              std::to_string(red.gstar.num_vertices()) + " vertices, width " +
              std::to_string(td.width());
  } else if (o.command == "decompose") {
    TreeDecomposition td = decompose(g);
    write_td(o, td, g.num_vertices());
    j["answer"] = "YES";
    j["width"] = td.width();
    j["num_bags"] = td.num_bags();
    Json bags = Json::array();
    for (const auto& b : td.bags) bags.push_back(ids(b));
    j["bags"] = bags;
    stats.pipeline.width = td.width();
    stats.has_width = true;
    summary = "decompose: width " + std::to_string(td.width());
  } else if (o.command == "gmincut" || o.command == "stable-cut") {
    HereditaryClass cls =
        o.command == "stable-cut" ? classes::edgeless() : parse_class_selector(o.cls);
    PipelineReport rep;
    auto w = g_mincut(g, s, t, o.k, cls, &rep);
    stats.from(rep);
    oracle::ProblemSpec spec{oracle::ProblemKind::kGMincut, g, s, t, o.k, {}, cls, {}};
    oracle::ProblemAnswer ans{w.has_value(), w ? w->deletion_set : VertexSet{}, {}};
    check_witness(spec, ans);
    j["answer"] = yes_no(ans.yes);
    j["witness"] = ids(ans.witness);
    j["class"] = cls.name;
    summary = o.command + ": " + yes_no(ans.yes) + (ans.yes ? " " + to_string(ans.witness) : "");
  } else if (o.command == "multicut") {
    HereditaryClass cls = parse_class_selector(o.given.count("class") ? o.cls : "any");
    CutConstraints cons{pair_list(g, o.cut, "--cut"), pair_list(g, o.uncut, "--uncut")};
    if (cons.cut_pairs.empty()) throw UsageError("--cut needs at least one pair");
    PipelineReport rep;
    auto w = g_multicut_uncut(g, cons, o.k, cls, &rep);
    stats.from(rep);
    oracle::ProblemSpec spec{oracle::ProblemKind::kMulticutUncut, g, -1, -1, o.k, cons, cls, {}};
    oracle::ProblemAnswer ans{w.has_value(), w ? w->deletion_set : VertexSet{}, {}};
    check_witness(spec, ans);
    j["answer"] = yes_no(ans.yes);
    j["witness"] = ids(ans.witness);
    j["class"] = cls.name;
    j["notes"] = Json::array(
        {"cut and uncut constraints are evaluated independently; uncut pairs with equal "
         "endpoints are always satisfied"});
    summary = "multicut: " + yes_no(ans.yes) + (ans.yes ? " " + to_string(ans.witness) : "");
  } else if (o.command == "eivc") {
    auto w = edge_induced_vertex_cut(g, s, t, o.k);
    SeparatorResult sep = min_vertex_separator(g, {s}, {t});
    if (sep.finite()) {
      stats.pipeline.ell = sep.size;
      stats.pipeline.excess = 2 * o.k - sep.size;
      stats.has_ell = true;
    }
    oracle::ProblemSpec spec{oracle::ProblemKind::kEdgeInducedCut, g, s, t, o.k, {}, classes::any_graph(), {}};
    oracle::ProblemAnswer ans{w.has_value(), w ? w->deleted : VertexSet{},
                              w ? w->edges : std::vector<Edge>{}};
    check_witness(spec, ans);
    j["answer"] = yes_no(ans.yes);
    j["witness"] = ids(ans.witness);
    j["edges"] = edge_ids(ans.edges);
    j["notes"] = Json::array(
        {"the endpoints of the chosen edges, excluding s and t, form the s-t separator; "
         "chosen edges may touch s or t"});
    summary = "eivc: " + yes_no(ans.yes) + (ans.yes ? " " + std::to_string(ans.edges.size()) + " edges" : "");
  } else if (o.command == "oct" || o.command == "stable-bip" || o.command == "exact-stable-bip") {
    oracle::ProblemSpec spec;
    spec.graph = g;
    spec.k = o.k;
    std::optional<VertexSet> w;
    if (o.command == "oct") {
      spec.kind = oracle::ProblemKind::kOddCycleTransversal;
      w = odd_cycle_transversal(g, o.k);
    } else if (o.command == "stable-bip") {
      spec.kind = oracle::ProblemKind::kStableBipartization;
      w = stable_bipartization(g, o.k);
    } else {
      spec.kind = oracle::ProblemKind::kExactStableBipartization;
      if (o.given.count("allowed")) spec.allowed = vertex_list(g, o.allowed, "--allowed");
      w = exact_stable_bipartization(g, o.k, spec.allowed);
    }
    oracle::ProblemAnswer ans{w.has_value(), w ? *w : VertexSet{}, {}};
    check_witness(spec, ans);
    j["answer"] = yes_no(ans.yes);
    j["witness"] = ids(ans.witness);
    if (spec.allowed) j["allowed"] = ids(*spec.allowed);
    summary = o.command + ": " + yes_no(ans.yes) + (ans.yes ? " " + to_string(ans.witness) : "");
  } else if (o.command == "exact-c") {
    needs_apart();
    VertexSet c = exact_separator_union(g, s, t, o.k);
    SeparatorResult sep = min_vertex_separator(g, {s}, {t});
    if (sep.finite()) {
      stats.pipeline.ell = sep.size;
      stats.pipeline.excess = o.k - sep.size;
      stats.has_ell = true;
    }
    j["answer"] = yes_no(!c.empty());
    j["witness"] = ids(c);
    summary = "exact-c: " + to_string(c);
  }
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && (args[0] == "--help" || args[0] == "-h" || args[0] == "help")) {
    out << usage();
    return kExitOk;
  }
  try {
    Options o = parse_options(args);
    Stats stats;
    std::string summary;
    const auto start = std::chrono::steady_clock::now();
    Json j = run(o, stats, summary);
    if (o.command != "selfcheck") {
      Json st = stats.to_json();
      if (o.timing)
        st["time_ms"] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      j["stats"] = st;
    }
    out << j.dump(2) << "\n";
    err << summary << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << usage();
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace twr
