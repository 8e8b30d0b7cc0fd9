#include "cli.hpp"

#include "render.hpp"

#include <ekr/counting.hpp>
#include <ekr/errors.hpp>
#include <ekr/extremal.hpp>
#include <ekr/gammagraph.hpp>
#include <ekr/parallel.hpp>
#include <ekr/spreadcheck.hpp>
#include <ekr/tree_io.hpp>
#include <ekr/treecore.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace ekr::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::uint64_t seed = 0;
  int enum_cap = kDefaultEnumerationCap;
  int ie_cap = kDefaultIeCap;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t graph_cap = kDefaultGraphBuildCap;
  std::string format = "json";
  std::string shape = "path";
  unsigned workers = default_workers();
  bool reproducible = false;
  bool timestamp = false;
};

// Per-command arguments; only the invoked subcommand fills them.
struct Args {
  int n = 0;
  int t = -1;
  int l = 0;
  int m = 0;
  int j = 0;
  int j_max = 0;
  int budget = -1;
  std::string edges;
  std::string file;
  std::string graph;
  std::string r;
  std::string p;
  std::string x;
  std::string dependency;
  std::string kind;
  std::string spec;
  std::string dump;
  bool full = false;
  bool witness = false;
};

template <typename T>
void env_override(const char* name, T& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  const std::string_view text(raw);
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value <= 0) {
    throw InvalidInput(std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
  target = value;
}

void validate(const RunConfig& c) {
  if (c.enum_cap <= 0 || c.ie_cap <= 0 || c.node_budget == 0 || c.graph_cap == 0) {
    throw InvalidInput("caps and budgets must be positive");
  }
  if (c.workers == 0) throw InvalidInput("--workers must be positive");
  parse_format(c.format);
  parse_component_shape(c.shape);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find(sep, start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string item(text.substr(start, stop - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
    start = stop + 1;
  }
  return out;
}

std::vector<Edge> edge_arg(const Args& a) {
  if (!a.edges.empty() && !a.file.empty()) throw InvalidInput("give --edges or --file, not both");
  if (!a.file.empty()) return read_edge_list_file(a.file);
  return parse_inline_edges(a.edges);
}

Forest forest_arg(const Args& a) { return Forest(a.n, edge_arg(a)); }

SimpleGraph graph_arg(const std::string& spec) {
  if (auto g = SimpleGraph::from_alias(spec)) return *g;
  const auto edges = read_edge_list_file(spec);
  int n = 1;
  for (const Edge& e : edges) n = std::max(n, e.v);
  return SimpleGraph(n, edges);
}

Json tree_list(const std::vector<LabeledTree>& trees) {
  Json out = Json::array();
  for (const auto& tree : trees) out.push_back(edges_to_json(tree.edges()));
  return out;
}

Json cmd_enumerate(const Args& a, const RunConfig& c) {
  Json rows = Json::array();
  enumerate_trees(
      a.n,
      [&](TreeIndex index, const LabeledTree& tree) {
        Json row;
        row["index"] = index.value;
        row["prufer"] = code_at(a.n, index).code;
        row["edges"] = edges_to_json(tree.edges());
        rows.push_back(std::move(row));
      },
      c.enum_cap);
  Json doc;
  doc["n"] = a.n;
  doc["count"] = std::to_string(rows.size());
  doc["rows"] = std::move(rows);
  return doc;
}

Json count_doc(const BigCount& value) { return Json{{"count", to_decimal(value)}}; }

Json cmd_spread(const Args& a, const RunConfig&) {
  const Rational r = parse_rational(a.r);
  const int t = a.t < 0 ? 0 : a.t;
  const int budget = a.budget < 0 ? a.n - 1 : a.budget;
  const auto report = verify_rt_spread(a.n, r, t, budget);
  Json doc = to_json(report);
  if (a.witness && report.witness) {
    doc["witness_edge_list"] = {{"T", format_edge_list(report.witness->base.edges())},
                                {"U", format_edge_list(report.witness->extended.edges())}};
  }
  return doc;
}

Json cmd_gamma_build(const Args& a, const RunConfig& c) {
  const auto gamma = build_gamma(graph_arg(a.graph), a.t, c.graph_cap, c.workers);
  Json doc = gamma_summary(gamma, a.full);
  if (!a.dump.empty()) {
    std::ofstream out(a.dump, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + a.dump + "'");
    write_gamma_dump(gamma, out);
    doc["dump"] = a.dump;
  }
  return doc;
}

Json cmd_gamma_search(const Args& a, const RunConfig& c, bool independent) {
  const auto gamma = build_gamma(graph_arg(a.graph), a.t, c.graph_cap, c.workers);
  const auto result = independent ? max_independent_set(gamma, c.node_budget) : max_clique(gamma, c.node_budget);
  Json doc;
  doc["n"] = gamma.graph().n();
  doc["t"] = a.t;
  doc["vertex_count"] = gamma.vertex_count();
  doc["value"] = result.family.size();
  doc["optimal"] = result.optimal;
  doc["nodes"] = result.nodes;
  const auto members = result.family.members();
  doc["members"] = members;
  if (a.full) {
    Json trees = Json::array();
    for (auto v : members) trees.push_back(edges_to_json(gamma.tree(v).edges()));
    doc["trees"] = std::move(trees);
  }
  return doc;
}

Json cmd_gamma_packing(const Args& a, const RunConfig& c) {
  const auto result = packing_number(graph_arg(a.graph), c.node_budget);
  Json doc;
  doc["packing"] = result.value;
  doc["witness"] = tree_list(result.witness);
  doc["witness_complete"] = result.witness_complete;
  doc["partition"] = result.partition;
  doc["cross_edges"] = result.cross_edges;
  doc["nodes"] = result.nodes;
  return doc;
}

FamilySpec family_arg(const Args& a, const RunConfig& c) {
  if (!a.spec.empty()) {
    std::ifstream in(a.spec);
    if (!in) throw InvalidInput("cannot open family spec '" + a.spec + "'");
    Json value;
    try {
      value = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InvalidInput(std::string("family spec is not JSON: ") + e.what());
    }
    return family_spec_from_json(value);
  }
  if (a.kind == "trivial") return FamilySpec::trivial(forest_arg(a));
  if (a.kind == "stars-plus-edge") {
    const auto edges = edge_arg(a);
    if (edges.size() > 1) throw InvalidInput("stars-plus-edge takes at most one edge");
    return FamilySpec::stars_plus_edge(a.n, edges.empty() ? Edge(1, 2) : edges.front());
  }
  if (a.kind == "threshold") {
    auto f = forest_arg(a);
    const int size = static_cast<int>(f.size());
    if (a.m < 0 || a.m > size) throw InvalidInput("--m must lie in [0, |edges|]");
    // Two members share at least 2m - |F| edges of F.
    const int t = a.t >= 0 ? a.t : std::max(0, 2 * a.m - size);
    return FamilySpec::at_least(a.n, t, {f.edges().begin(), f.edges().end()}, a.m);
  }
  if (a.kind == "ntj") {
    if (a.t < 1 || a.j < 0 || a.t + 2 * a.j > a.n - 1) throw InvalidInput("ntj needs t >= 1, j >= 0, t + 2j <= n - 1");
    const auto f = balanced_forest(a.n, a.t + 2 * a.j, parse_component_shape(c.shape));
    return FamilySpec::at_least(a.n, a.t, {f.edges().begin(), f.edges().end()}, a.t + a.j);
  }
  throw InvalidInput("unknown family kind '" + a.kind + "' (trivial, stars-plus-edge, threshold, ntj) or give --spec");
}

Json family_header(const FamilySpec& spec) {
  Json doc = to_json(spec);
  doc.erase("members");
  return doc;
}

Json cmd_family_size(const Args& a, const RunConfig& c) {
  const auto spec = family_arg(a, c);
  Json doc = family_header(spec);
  doc["size"] = to_decimal(family_size(spec));
  return doc;
}

Json cmd_family_verify(const Args& a, const RunConfig& c) {
  const auto spec = family_arg(a, c);
  const TreeTable table(spec.n, c.enum_cap);
  const auto members = realize_family(spec, table);
  const BigCount formula = family_size(spec);
  Json doc = family_header(spec);
  doc["size_formula"] = to_decimal(formula);
  doc["size_enumerated"] = std::to_string(members.size());
  doc["sizes_agree"] = formula == members.size();
  doc["pairwise_t_intersecting"] = is_pairwise_t_intersecting(table, members, spec.t);
  return doc;
}

Json cmd_family_scan(const Args& a, const RunConfig& c) {
  const auto scan = conjecture_scan(a.n, a.t, a.j_max, parse_component_shape(c.shape), c.ie_cap);
  Json doc;
  doc["n"] = scan.n;
  doc["t"] = scan.t;
  doc["shape"] = c.shape;
  doc["best_j"] = scan.best_j;
  doc["trivial_wins"] = scan.trivial_wins ? Json(*scan.trivial_wins) : Json(nullptr);
  Json rows = Json::array();
  for (const auto& row : scan.rows) {
    rows.push_back({{"n", scan.n}, {"t", scan.t}, {"j", row.j}, {"size", to_decimal(row.size)},
                    {"winner", row.j == scan.best_j}});
  }
  doc["rows"] = std::move(rows);
  return doc;
}

Json cmd_llll_check(const Args& a) {
  std::vector<Rational> p;
  std::vector<Rational> x;
  std::vector<std::pair<std::size_t, std::size_t>> dependency;
  if (!a.p.empty() || !a.x.empty()) {
    for (const auto& item : split(a.p, ',')) p.push_back(parse_rational(item));
    for (const auto& item : split(a.x, ',')) x.push_back(parse_rational(item));
    for (const auto& item : split(a.dependency, ',')) {
      const auto ends = split(item, '-');
      if (ends.size() != 2) throw InvalidInput("dependency edges look like i-j, got '" + item + "'");
      try {
        dependency.emplace_back(std::stoul(ends[0]), std::stoul(ends[1]));
      } catch (const std::logic_error&) {
        throw InvalidInput("bad event index in '" + item + "'");
      }
    }
  } else {
    const auto f = forest_arg(a);
    p.assign(f.size(), Rational(2, a.n));
    x.assign(f.size(), Rational(4, a.n));
    dependency = line_graph_edges(f);
  }
  const auto verdict = llll_condition_check(p, x, dependency);
  Json doc;
  doc["events"] = p.size();
  doc["holds"] = verdict.holds;
  doc["failing_event"] = verdict.failing_event ? Json(*verdict.failing_event) : Json(nullptr);
  doc["lower_bound"] = to_string(verdict.lower_bound);
  return doc;
}

Json cmd_llll_notstar(const Args& a) {
  const auto v = lemma_notstar_check(a.n, forest_arg(a));
  Json doc;
  doc["n"] = v.n;
  doc["avoiding"] = to_decimal(v.avoiding);
  doc["rational_bound"] = to_string(v.rational_bound);
  doc["passes_rational"] = v.passes_rational;
  doc["llll_bound"] = to_string(v.llll_bound);
  doc["passes_llll"] = v.passes_llll;
  doc["e4_bound"] = v.e4_bound;
  doc["passes_e4"] = v.passes_e4;
  doc["llll_hypothesis"] = v.llll_hypothesis;
  return doc;
}

Json cmd_search_max(const Args& a, const RunConfig& c) {
  const auto result = brute_force_max_t_intersecting(a.n, a.t, c.node_budget);
  Json doc;
  doc["n"] = result.n;
  doc["t"] = result.t;
  doc["size"] = result.members.size();
  doc["optimal"] = result.optimal;
  doc["verified"] = result.verified;
  doc["nodes"] = result.nodes;
  doc["trivial_size"] = result.trivial_size ? Json(to_decimal(*result.trivial_size)) : Json(nullptr);
  doc["stars_plus_edge_size"] =
      result.stars_plus_edge_size ? Json(to_decimal(*result.stars_plus_edge_size)) : Json(nullptr);
  Json members = Json::array();
  for (auto index : result.members) {
    members.push_back(edges_to_json(prufer_decode(code_at(a.n, TreeIndex{index})).edges()));
  }
  doc["members"] = std::move(members);
  return doc;
}

Json cmd_sample(const Args& a, const RunConfig& c) {
  const auto tree = sample_uniform_tree(a.n, c.seed);
  Json doc;
  doc["n"] = a.n;
  doc["seed"] = c.seed;
  doc["prufer"] = prufer_encode(tree).code;
  doc["edges"] = edges_to_json(tree.edges());
  return doc;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

int fail(std::ostream& out, std::ostream& err, int code, Json error) {
  err << "ekr: " << error.value("message", std::string("error")) << '\n';
  out << Json{{"error", std::move(error)}}.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  Args a;
  try {
    env_override("EKR_ENUM_CAP", config.enum_cap);
    env_override("EKR_IE_CAP", config.ie_cap);
    env_override("EKR_NODE_BUDGET", config.node_budget);
    env_override("EKR_GRAPH_CAP", config.graph_cap);
  } catch (const InvalidInput& e) {
    return fail(out, err, kExitInvalid, {{"kind", "invalid_input"}, {"message", e.what()}});
  }

  CLI::App app{"Exact tools for intersecting families of labelled spanning trees", "ekr"};
  app.allow_extras();
  app.fallthrough();
  app.set_version_flag("--version", "ekr 0.1.0");
  app.add_option("--seed", config.seed, "Seed for sampling");
  app.add_option("--enum-cap", config.enum_cap, "Largest n for full tree enumeration (env EKR_ENUM_CAP)");
  app.add_option("--ie-cap", config.ie_cap, "Largest edge set for inclusion-exclusion (env EKR_IE_CAP)");
  app.add_option("--budget", config.node_budget, "Search node budget (env EKR_NODE_BUDGET)");
  app.add_option("--graph-cap", config.graph_cap, "Largest Γ vertex count (env EKR_GRAPH_CAP)");
  app.add_option("--format", config.format, "Output format: json, csv, text");
  app.add_option("--component-shape", config.shape, "Component shape for balanced forests: path, star, caterpillar");
  app.add_option("--workers", config.workers, "Worker threads");
  app.add_flag("--reproducible", config.reproducible, "Suppress the timestamp field");
  app.add_flag("--timestamp", config.timestamp, "Add a UTC timestamp field");

  auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", a.n, "Number of vertices")->required(); };
  auto edges_opt = [&](CLI::App* sub) {
    sub->add_option("--edges", a.edges, "Inline edges, e.g. 1-2,2-3");
    sub->add_option("--file", a.file, "Edge-list file");
  };
  auto graph_opt = [&](CLI::App* sub) {
    sub->add_option("--graph", a.graph, "Graph alias (K5, C6, P4) or edge-list file")->required();
  };

  std::map<CLI::App*, std::function<Json()>> leaves;

  auto* enumerate = app.add_subcommand("enumerate", "List every labelled tree on n vertices");
  n_opt(enumerate);
  leaves[enumerate] = [&] { return cmd_enumerate(a, config); };

  auto* count = app.add_subcommand("count", "Exact tree counts");
  auto* contain = count->add_subcommand("contain", "Trees containing a forest");
  n_opt(contain);
  edges_opt(contain);
  leaves[contain] = [&] { return count_doc(count_trees_containing(forest_arg(a))); };
  auto* matching = count->add_subcommand("matching", "Trees containing l disjoint edges");
  n_opt(matching);
  matching->add_option("--l", a.l, "Matching size")->required();
  leaves[matching] = [&] { return count_doc(count_matching_family(a.n, a.l)); };
  auto* at_least = count->add_subcommand("at-least", "Trees containing at least m edges of a set");
  n_opt(at_least);
  edges_opt(at_least);
  at_least->add_option("--m", a.m, "Threshold")->required();
  leaves[at_least] = [&] { return count_doc(count_at_least(a.n, edge_arg(a), a.m, config.ie_cap)); };

  auto* spread = app.add_subcommand("spread", "Spread checks");
  auto* spread_check = spread->add_subcommand("check", "Check (r,t)-spreadness of the uniform tree");
  n_opt(spread_check);
  spread_check->add_option("--r", a.r, "Ratio, e.g. 7/2")->required();
  spread_check->add_option("--t", a.t, "Largest |T| (default 0: plain r-spread)");
  spread_check->add_option("--edge-budget", a.budget, "Largest |U| (default n-1)");
  spread_check->add_flag("--witness", a.witness, "Also print the violating pair as edge lists");
  leaves[spread_check] = [&] { return cmd_spread(a, config); };

  auto* gamma = app.add_subcommand("gamma", "Disjointness graph of spanning trees");
  auto* gamma_build = gamma->add_subcommand("build", "Build Γ_t(G) and summarize it");
  graph_opt(gamma_build);
  gamma_build->add_option("--t", a.t, "Overlap threshold")->required();
  gamma_build->add_option("--dump", a.dump, "Write the adjacency matrix to this binary file");
  gamma_build->add_flag("--full", a.full, "Include vertices and edges");
  leaves[gamma_build] = [&] { return cmd_gamma_build(a, config); };
  auto* gamma_alpha = gamma->add_subcommand("alpha", "Maximum independent set of Γ_t(G)");
  graph_opt(gamma_alpha);
  gamma_alpha->add_option("--t", a.t, "Overlap threshold")->required();
  gamma_alpha->add_flag("--full", a.full, "Include member trees");
  leaves[gamma_alpha] = [&] { return cmd_gamma_search(a, config, true); };
  auto* gamma_omega = gamma->add_subcommand("omega", "Maximum clique of Γ_t(G)");
  graph_opt(gamma_omega);
  gamma_omega->add_option("--t", a.t, "Overlap threshold")->required();
  gamma_omega->add_flag("--full", a.full, "Include member trees");
  leaves[gamma_omega] = [&] { return cmd_gamma_search(a, config, false); };
  auto* gamma_packing = gamma->add_subcommand("packing", "Spanning-tree packing number with a witness");
  graph_opt(gamma_packing);
  leaves[gamma_packing] = [&] { return cmd_gamma_packing(a, config); };

  auto* family = app.add_subcommand("family", "Intersecting family constructions");
  auto family_opts = [&](CLI::App* sub) {
    sub->add_option("--kind", a.kind, "trivial, stars-plus-edge, threshold or ntj");
    sub->add_option("--spec", a.spec, "Family spec JSON file");
    sub->add_option("--n", a.n, "Number of vertices");
    sub->add_option("--t", a.t, "Intersection size");
    sub->add_option("--j", a.j, "Extra edges for ntj");
    sub->add_option("--m", a.m, "Threshold for threshold families");
    edges_opt(sub);
  };
  auto* family_size = family->add_subcommand("size", "Exact family size");
  family_opts(family_size);
  leaves[family_size] = [&] { return cmd_family_size(a, config); };
  auto* family_verify = family->add_subcommand("verify", "Realize a family and check it");
  family_opts(family_verify);
  leaves[family_verify] = [&] { return cmd_family_verify(a, config); };
  auto* family_scan = family->add_subcommand("scan", "Compare F_{n,t,j} over j");
  n_opt(family_scan);
  family_scan->add_option("--t", a.t, "Intersection size")->required();
  family_scan->add_option("--j-max", a.j_max, "Largest j")->required();
  leaves[family_scan] = [&] { return cmd_family_scan(a, config); };

  auto* dt = app.add_subcommand("dt", "Exact blocked minimum D_t");
  n_opt(dt);
  dt->add_option("--t", a.t, "Forest size")->required();
  leaves[dt] = [&] { return to_json(blocked_Dt(a.n, a.t, config.workers)); };

  auto* llll = app.add_subcommand("llll", "Local lemma checks");
  auto* llll_check = llll->add_subcommand("check", "Check the local lemma condition");
  llll_check->add_option("--p", a.p, "Event probabilities, comma separated");
  llll_check->add_option("--x", a.x, "Weights, comma separated");
  llll_check->add_option("--dependency", a.dependency, "Dependency edges i-j (0-based), comma separated");
  llll_check->add_option("--n", a.n, "Vertices, for the line-graph mode");
  edges_opt(llll_check);
  leaves[llll_check] = [&] { return cmd_llll_check(a); };
  auto* notstar = llll->add_subcommand("notstar", "Count trees avoiding a non-star-like forest");
  n_opt(notstar);
  edges_opt(notstar);
  leaves[notstar] = [&] { return cmd_llll_notstar(a); };

  auto* search = app.add_subcommand("search", "Exhaustive searches");
  auto* search_max = search->add_subcommand("max", "Largest t-intersecting family");
  n_opt(search_max);
  search_max->add_option("--t", a.t, "Intersection size")->required();
  leaves[search_max] = [&] { return cmd_search_max(a, config); };

  auto* sample = app.add_subcommand("sample", "Uniform random tree from --seed");
  n_opt(sample);
  leaves[sample] = [&] { return cmd_sample(a, config); };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    std::ostringstream text;
    app.exit(e, text, text);
    out << text.str();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(out, err, kExitInvalid, {{"kind", "usage"}, {"message", e.what()}});
  }

  const auto rest = app.remaining(true);
  if (!rest.empty()) {
    if (rest.front().empty() || rest.front().front() != '-') {
      return fail(out, err, kExitUnknownCommand,
                  {{"kind", "unknown_subcommand"}, {"message", "unknown subcommand '" + rest.front() + "'"}});
    }
    return fail(out, err, kExitInvalid, {{"kind", "usage"}, {"message", "unknown option '" + rest.front() + "'"}});
  }

  CLI::App* leaf = &app;
  while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
  auto action = leaves.find(leaf);
  if (action == leaves.end()) {
    return fail(out, err, kExitInvalid,
                {{"kind", "usage"}, {"message", "missing subcommand; run with --help"}});
  }

  try {
    validate(config);
    Json doc = action->second();
    if (config.timestamp && !config.reproducible) doc["timestamp"] = utc_now();
    render(doc, parse_format(config.format), out);
    return kExitOk;
  } catch (const CapExceeded& e) {
    return fail(out, err, kExitInvalid,
                {{"kind", "cap_exceeded"}, {"cap", e.cap()}, {"limit", e.limit()}, {"requested", e.requested()},
                 {"message", e.what()}});
  } catch (const InvalidInput& e) {
    return fail(out, err, kExitInvalid, {{"kind", "invalid_input"}, {"message", e.what()}});
  } catch (const std::exception& e) {
    return fail(out, err, 1, {{"kind", "internal"}, {"message", e.what()}});
  }
}

}  // namespace ekr::cli
