#include "cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "cascadia/analysis.hpp"
#include "cascadia/errors.hpp"
#include "cascadia/experiments.hpp"
#include "cascadia/graph.hpp"
#include "cascadia/parallel.hpp"
#include "cascadia/strategies.hpp"

#ifndef CASCADIA_VERSION
#define CASCADIA_VERSION "0.0.0"
#endif

namespace cascadia::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 1;

/// Bad flag values; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// I/O failures; reported with exit code 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError(std::string(what) + ": expected a non-negative integer, got '" +
                     std::string(text) + "'");
  }
  return value;
}

double parse_real(std::string_view text, std::string_view what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(text), &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": expected a number, got '" + std::string(text) + "'");
  }
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

/// "start:stop:step" (inclusive) or "a,b,c".
std::vector<std::size_t> parse_size_list(std::string_view text, std::string_view what) {
  std::vector<std::size_t> sizes;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError(std::string(what) + ": expected start:stop:step");
    const auto start = parse_u64(parts[0], what);
    const auto stop = parse_u64(parts[1], what);
    const auto step = parse_u64(parts[2], what);
    if (step == 0) throw UsageError(std::string(what) + ": step must be positive");
    for (auto s = start; s <= stop; s += step) sizes.push_back(s);
  } else {
    for (const auto& p : split(text, ',')) sizes.push_back(parse_u64(p, what));
  }
  if (sizes.empty()) throw UsageError(std::string(what) + ": empty list");
  for (auto s : sizes) {
    if (s == 0) throw UsageError(std::string(what) + ": sizes must be positive");
  }
  return sizes;
}

struct SeedChoice {
  std::uint64_t value = kDefaultSeed;
  bool from_entropy = false;
};

SeedChoice parse_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return {(std::uint64_t{rd()} << 32) | rd(), true};
  }
  return {parse_u64(text, "--seed"), false};
}

// ---------------------------------------------------------------------------
// Graph sources
// ---------------------------------------------------------------------------

constexpr std::string_view kValidSources = "ngon:N, tree:N, dense:N, edgelist:PATH";

Graph load_graph_source(const std::string& source, bool remap) {
  const auto colon = source.find(':');
  if (colon == std::string::npos) {
    throw UsageError("graph source '" + source + "' must be one of: " + std::string(kValidSources));
  }
  const std::string kind = source.substr(0, colon);
  const std::string arg = source.substr(colon + 1);
  if (kind == "edgelist") {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw IoError("cannot open edge list '" + arg + "'");
    try {
      return load_edge_list(in, EdgeListOptions{remap});
    } catch (const ParseError& e) {
      throw IoError(arg + ": " + e.what());
    }
  }
  const auto topology = parse_topology(kind);
  if (!topology) {
    throw UsageError("unknown topology '" + kind + "'; valid graph sources: " +
                     std::string(kValidSources));
  }
  const auto n = parse_u64(arg, "--graph");
  try {
    return generate_topology(*topology, n);
  } catch (const InvalidParameter& e) {
    throw UsageError(std::string("--graph: ") + e.what());
  }
}

Player parse_player(const std::string& spec, int id) {
  Player p;
  p.id = id;
  bool have_budget = false;
  bool have_score = false;
  for (const auto& field : split(spec, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw UsageError("--player: expected key=value, got '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "budget") {
      p.budget = parse_u64(value, "--player budget");
      have_budget = true;
    } else if (key == "score") {
      p.product_score = parse_real(value, "--player score");
      have_score = true;
    } else {
      throw UsageError("--player: unknown key '" + key + "' (expected budget, score)");
    }
  }
  if (!have_budget || !have_score) {
    throw UsageError("--player: both budget= and score= are required in '" + spec + "'");
  }
  if (!(p.product_score >= 0.0 && p.product_score <= 1.0)) {
    throw UsageError("--player: score must lie in [0, 1]");
  }
  return p;
}

StrategyKind parse_strategy_flag(const std::string& name, double dd_p) {
  if (!(dd_p > 0.0 && dd_p < 1.0)) throw UsageError("--dd-p must lie in (0, 1)");
  auto kind = parse_strategy(name, dd_p);
  if (!kind) {
    throw UsageError("unknown strategy '" + name +
                     "'; valid: random, highest-degree, single-discount, degree-discount");
  }
  return *kind;
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// The invocation with `--seed random` replaced by the resolved value, so
/// that replaying it reproduces the data.
std::vector<std::string> replayable_args(const std::vector<std::string>& args,
                                         std::uint64_t seed) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--seed" && i + 1 < args.size()) {
      out.push_back("--seed");
      out.push_back(std::to_string(seed));
      ++i;
    } else if (args[i].rfind("--seed=", 0) == 0) {
      out.push_back("--seed=" + std::to_string(seed));
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

void write_manifest(const fs::path& path, const std::string& subcommand,
                    const std::vector<std::string>& args, std::uint64_t seed, Json parameters,
                    const std::vector<fs::path>& outputs) {
  Json j;
  j["tool"] = "cascadia";
  j["version"] = CASCADIA_VERSION;
  j["subcommand"] = subcommand;
  j["master_seed"] = seed;
  j["parameters"] = std::move(parameters);
  j["argv"] = replayable_args(args, seed);
  auto files = Json::array();
  for (const auto& p : outputs) files.push_back(p.string());
  j["outputs"] = std::move(files);
  write_file(path, j.dump(2) + "\n");
}

std::string player_number(int player) { return std::to_string(player); }
std::string sweep_label(int player) { return std::string(sweep_player_name(player)); }

std::string profile_name(const GameMatrix& m, const Profile& p) {
  return "(" + m.row_strategies[p.row] + ", " + m.col_strategies[p.col] + ")";
}

void print_equilibria(const GameMatrix& m, std::ostream& out) {
  const auto dominant = find_dominant_strategy_equilibrium(m);
  const auto nash = find_pure_nash(m);
  out << "dominant-strategy equilibrium: " << (dominant ? profile_name(m, *dominant) : "none")
      << "\n";
  out << "pure Nash equilibria:";
  if (nash.empty()) out << " none";
  for (std::size_t i = 0; i < nash.size(); ++i) {
    out << (i ? "; " : " ") << profile_name(m, nash[i]) << " payoffs ("
        << format_double(m.cells[nash[i].row][nash[i].col].row) << ", "
        << format_double(m.cells[nash[i].row][nash[i].col].col) << ")";
  }
  out << "\n";
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct CommonFlags {
  std::string seed = std::to_string(kDefaultSeed);
  unsigned threads = 0;
  std::size_t step_cap = 0;
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--seed", f.seed, "Master seed (integer) or 'random'")->capture_default_str();
  sub->add_option("--threads", f.threads,
                  "Worker threads (0: CASCADIA_THREADS or hardware concurrency)");
  sub->add_option("--step-cap", f.step_cap, "Timestep cap per cascade (0: 100*|V|)");
}

struct SimulateFlags {
  CommonFlags common;
  std::string graph;
  bool remap = false;
  std::vector<std::string> players;
  std::vector<std::string> strategies;
  double dd_p = 0.01;
  std::size_t trials = 10;
  std::string out;
  std::string manifest;
};

int cmd_simulate(const SimulateFlags& f, const std::vector<std::string>& args, std::ostream& out) {
  if (f.trials < 1) throw UsageError("--trials must be >= 1");
  const auto seed = parse_seed(f.common.seed);
  const Graph g = load_graph_source(f.graph, f.remap);

  std::vector<Player> players;
  for (std::size_t i = 0; i < f.players.size(); ++i) {
    players.push_back(parse_player(f.players[i], static_cast<int>(i + 1)));
  }
  std::vector<StrategyKind> strategies;
  if (f.strategies.empty()) {
    strategies.assign(players.size(), StrategyKind::random());
  } else if (f.strategies.size() == 1) {
    strategies.assign(players.size(), parse_strategy_flag(f.strategies[0], f.dd_p));
  } else if (f.strategies.size() == players.size()) {
    for (const auto& s : f.strategies) strategies.push_back(parse_strategy_flag(s, f.dd_p));
  } else {
    throw UsageError("--strategy must be given once or once per --player");
  }

  SimulationConfig cfg;
  cfg.master_seed = seed.value;
  cfg.trials = f.trials;
  cfg.step_cap = f.common.step_cap;
  cfg.threads = resolve_thread_count(f.common.threads);
  const auto records = run_simulation(g, players, strategies, cfg);

  std::ostringstream csv;
  write_trials_csv(csv, records, player_number);
  if (f.out.empty() || f.out == "-") {
    out << csv.str();
    return kExitOk;
  }

  const fs::path data(f.out);
  write_file(data, csv.str());
  Json params;
  params["graph"] = f.graph;
  params["remap"] = f.remap;
  params["nodes"] = g.node_count();
  params["edges"] = g.edge_count();
  auto pj = Json::array();
  for (std::size_t i = 0; i < players.size(); ++i) {
    pj.push_back({{"id", players[i].id},
                  {"budget", players[i].budget},
                  {"score", players[i].product_score},
                  {"strategy", strategy_name(strategies[i])}});
  }
  params["players"] = std::move(pj);
  params["dd_p"] = f.dd_p;
  params["trials"] = f.trials;
  params["step_cap"] = f.common.step_cap;
  params["threads"] = cfg.threads;
  const fs::path manifest = f.manifest.empty() ? fs::path(f.out + ".manifest.json") : fs::path(f.manifest);
  write_manifest(manifest, "simulate", args, seed.value, std::move(params), {data});
  return kExitOk;
}

struct SweepFlags {
  CommonFlags common;
  std::string topology;
  std::string sizes;
  std::size_t trials = 10;
  std::string out_dir = ".";
};

int cmd_sweep(const SweepFlags& f, const std::vector<std::string>& args, std::ostream& out) {
  const auto topology = parse_topology(f.topology);
  if (!topology) {
    throw UsageError("unknown topology '" + f.topology + "'; valid: ngon, tree, dense");
  }
  if (f.trials < 1) throw UsageError("--trials must be >= 1");
  const auto seed = parse_seed(f.common.seed);

  ExperimentConfig cfg;
  cfg.master_seed = seed.value;
  cfg.trials_per_point = f.trials;
  cfg.sizes = parse_size_list(f.sizes, "--sizes");
  cfg.topology = *topology;
  cfg.step_cap = f.common.step_cap;
  cfg.threads = resolve_thread_count(f.common.threads);
  if (*topology == Topology::NGon) {
    for (auto s : cfg.sizes) {
      if (s < 3) throw UsageError("--sizes: an n-gon needs at least 3 nodes");
    }
  }

  const auto result = run_product_vs_budget(cfg);

  const fs::path dir(f.out_dir);
  const fs::path trials_path = dir / "trials.csv";
  const fs::path means_path = dir / "means.csv";
  const fs::path fits_path = dir / "fits.json";

  std::ostringstream trials_csv, means_csv;
  write_trials_csv(trials_csv, result.trials, sweep_label);
  write_means_csv(means_csv, result.means, sweep_label);
  write_file(trials_path, trials_csv.str());
  write_file(means_path, means_csv.str());

  Json fits = Json::object();
  for (int player : {kProductPlayer, kBudgetPlayer}) {
    Json entry;
    if (cfg.sizes.size() >= 3) {
      const auto fit = result.fit(player);
      entry = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"r_squared", fit.r_squared}};
    }
    fits[std::string(sweep_player_name(player))] = entry;
  }
  write_file(fits_path, fits.dump(2) + "\n");

  Json params;
  params["topology"] = f.topology;
  params["sizes"] = cfg.sizes;
  params["trials"] = f.trials;
  params["step_cap"] = f.common.step_cap;
  params["threads"] = cfg.threads;
  write_manifest(dir / "manifest.json", "sweep", args, seed.value, std::move(params),
                 {trials_path, means_path, fits_path});

  out << means_csv.str();
  return kExitOk;
}

struct GameFlags {
  CommonFlags common;
  std::string graph;
  bool remap = false;
  std::vector<std::string> players;
  std::string strategies = "single-discount,degree-discount,highest-degree";
  double dd_p = 0.01;
  std::size_t trials = 10;
  std::string out;
  std::string matrix_file;
  bool analyze_only = false;
};

int cmd_game_matrix(const GameFlags& f, const std::vector<std::string>& args, std::ostream& out) {
  if (f.analyze_only) {
    if (f.matrix_file.empty()) throw UsageError("--analyze-only requires --matrix-file");
    GameMatrix m;
    try {
      m = game_matrix_from_json(read_file(f.matrix_file));
    } catch (const ParseError& e) {
      throw IoError(f.matrix_file + ": " + e.what());
    }
    print_equilibria(m, out);
    return kExitOk;
  }
  if (f.graph.empty()) throw UsageError("--graph is required unless --analyze-only is given");
  if (f.players.size() != 2) throw UsageError("game-matrix needs exactly two --player flags");
  if (f.trials < 1) throw UsageError("--trials must be >= 1");
  const auto seed = parse_seed(f.common.seed);
  const Graph g = load_graph_source(f.graph, f.remap);
  const std::vector<Player> players{parse_player(f.players[0], 1), parse_player(f.players[1], 2)};
  std::vector<StrategyKind> strategies;
  for (const auto& s : split(f.strategies, ',')) strategies.push_back(parse_strategy_flag(s, f.dd_p));

  const unsigned threads = resolve_thread_count(f.common.threads);
  const auto m = run_game_matrix(g, players, strategies, f.trials, seed.value, threads,
                                 f.common.step_cap);
  const std::string json = game_matrix_to_json(m);
  if (f.out.empty() || f.out == "-") {
    out << json;
  } else {
    write_file(f.out, json);
    Json params;
    params["graph"] = f.graph;
    params["remap"] = f.remap;
    params["players"] = Json::array({{{"budget", players[0].budget}, {"score", players[0].product_score}},
                                     {{"budget", players[1].budget}, {"score", players[1].product_score}}});
    params["strategies"] = split(f.strategies, ',');
    params["dd_p"] = f.dd_p;
    params["trials"] = f.trials;
    params["step_cap"] = f.common.step_cap;
    params["threads"] = threads;
    write_manifest(f.out + ".manifest.json", "game-matrix", args, seed.value, std::move(params),
                   {fs::path(f.out)});
  }
  print_equilibria(m, out);
  return kExitOk;
}

struct BoundsFlags {
  double c = 0.02;
  double m = 5;
  double p1 = 1.0;
  double p2 = 0.2;
  std::string n = "1000,5000,9000";
};

int cmd_bounds(const BoundsFlags& f, std::ostream& out) {
  if (!(f.c > 0.0 && f.c < 1.0)) throw UsageError("--c must lie in (0, 1)");
  if (!(f.m > 1.0)) throw UsageError("--m must exceed 1");
  if ((f.m + 1.0) * f.c > 1.0) {
    throw UsageError("(m + 1) c > 1: the two seed sets do not fit in the graph");
  }
  for (double p : {f.p1, f.p2}) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("product scores must lie in [0, 1]");
  }
  const auto ns = parse_size_list(f.n, "--n");

  DenseNetworkConfig cfg;
  cfg.c = f.c;
  cfg.m = f.m;
  cfg.p1 = f.p1;
  cfg.p2 = f.p2;
  const ProbabilityBounds bounds[] = {dense_probability_bounds(cfg, 1),
                                      dense_probability_bounds(cfg, 2)};

  out << "n,player,lower,closed_form,upper,status\n";
  std::size_t violations = 0;
  for (auto n : ns) {
    for (const auto& b : bounds) {
      const double value = b.closed_form(static_cast<double>(n));
      const bool inside = b.lower <= value && value <= b.upper;
      if (!inside) ++violations;
      out << n << ',' << b.player << ',' << format_double(b.lower) << ','
          << format_double(value) << ',' << format_double(b.upper) << ','
          << (inside ? "ok" : "VIOLATION") << '\n';
    }
  }
  if (violations) out << "# " << violations << " value(s) outside the bounds\n";
  return kExitOk;
}

struct StatsFlags {
  std::string graph;
  bool remap = false;
  bool exact = false;
  unsigned threads = 0;
  std::string out;
};

int cmd_graph_stats(const StatsFlags& f, std::ostream& out) {
  const Graph g = load_graph_source(f.graph, f.remap);
  if (g.node_count() == 0) throw UsageError("graph has no nodes");
  const auto m = compute_metrics(g, f.exact, resolve_thread_count(f.threads));
  Json j;
  j["nodes"] = m.nodes;
  j["edges"] = m.edges;
  j["average_degree"] = m.average_degree;
  j["diameter"] = m.diameter;
  j["approximate"] = m.approximate;
  j["connected"] = m.connected;
  const std::string text = j.dump(2) + "\n";
  if (f.out.empty() || f.out == "-") {
    out << text;
  } else {
    write_file(f.out, text);
  }
  return kExitOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_replay(const std::string& manifest_path, std::ostream& out, std::ostream& err) {
  std::vector<std::string> argv;
  try {
    const auto j = nlohmann::json::parse(read_file(manifest_path));
    argv = j.at("argv").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(manifest_path + ": malformed manifest: " + e.what());
  }
  if (!argv.empty() && argv.front() == "replay") throw UsageError("manifest replays itself");
  return dispatch(argv, out, err);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Competitive influence cascades: simulation, sweeps, games and bounds", "cascadia"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CASCADIA_VERSION);

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "Run repeated cascades on one graph");
  simulate->add_option("--graph", sim.graph, "ngon:N | tree:N | dense:N | edgelist:PATH")->required();
  simulate->add_flag("--remap", sim.remap, "Remap edge-list ids densely");
  simulate->add_option("--player", sim.players, "budget=K,score=P (repeat per player)")->required();
  simulate->add_option("--strategy", sim.strategies,
                       "random | highest-degree | single-discount | degree-discount");
  simulate->add_option("--dd-p", sim.dd_p, "Degree discount propagation parameter")->capture_default_str();
  simulate->add_option("--trials", sim.trials)->capture_default_str();
  simulate->add_option("--out", sim.out, "Per-trial CSV path (default stdout)");
  simulate->add_option("--manifest", sim.manifest, "Manifest path (default <out>.manifest.json)");
  add_common(simulate, sim.common);

  SweepFlags sw;
  auto* sweep = app.add_subcommand("sweep", "Product vs budget sweep over graph sizes");
  sweep->add_option("--topology", sw.topology, "ngon | tree | dense")->required();
  sweep->add_option("--sizes", sw.sizes, "start:stop:step or a,b,c")->required();
  sweep->add_option("--trials", sw.trials)->capture_default_str();
  sweep->add_option("--out-dir", sw.out_dir, "Directory for trials.csv, means.csv, fits.json")
      ->capture_default_str();
  add_common(sweep, sw.common);

  GameFlags gm;
  auto* game = app.add_subcommand("game-matrix", "Strategy payoff matrix and equilibria");
  game->add_option("--graph", gm.graph, "ngon:N | tree:N | dense:N | edgelist:PATH");
  game->add_flag("--remap", gm.remap, "Remap edge-list ids densely");
  game->add_option("--player", gm.players, "budget=K,score=P (exactly two)");
  game->add_option("--strategies", gm.strategies, "Comma-separated strategy list")->capture_default_str();
  game->add_option("--dd-p", gm.dd_p)->capture_default_str();
  game->add_option("--trials", gm.trials)->capture_default_str();
  game->add_option("--out", gm.out, "Matrix JSON path (default stdout)");
  game->add_option("--matrix-file", gm.matrix_file, "Stored matrix JSON");
  game->add_flag("--analyze-only", gm.analyze_only, "Only run the equilibrium detectors");
  add_common(game, gm.common);

  BoundsFlags bf;
  auto* bounds = app.add_subcommand("bounds", "Dense-network first-step probability bounds");
  bounds->add_option("--c", bf.c)->capture_default_str();
  bounds->add_option("--m", bf.m)->capture_default_str();
  bounds->add_option("--p1", bf.p1)->capture_default_str();
  bounds->add_option("--p2", bf.p2)->capture_default_str();
  bounds->add_option("--n", bf.n, "Graph sizes: a,b,c or start:stop:step")->capture_default_str();

  StatsFlags st;
  auto* stats = app.add_subcommand("graph-stats", "Node/edge counts, average degree, diameter");
  stats->add_option("--graph", st.graph, "ngon:N | tree:N | dense:N | edgelist:PATH")->required();
  stats->add_flag("--remap", st.remap);
  stats->add_flag("--exact", st.exact, "BFS from every node");
  stats->add_option("--threads", st.threads);
  stats->add_option("--out", st.out, "JSON path (default stdout)");

  std::string manifest;
  auto* replay = app.add_subcommand("replay", "Re-run the invocation recorded in a manifest");
  replay->add_option("--manifest", manifest)->required();

  std::vector<const char*> argv{"cascadia"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (*simulate) return cmd_simulate(sim, args, out);
  if (*sweep) return cmd_sweep(sw, args, out);
  if (*game) return cmd_game_matrix(gm, args, out);
  if (*bounds) return cmd_bounds(bf, out);
  if (*stats) return cmd_graph_stats(st, out);
  return cmd_replay(manifest, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidConfiguration& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace cascadia::cli
