#include "gamedec/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gamedec/errors.hpp"
#include "gamedec/gen.hpp"
#include "gamedec/io.hpp"
#include "gamedec/solver.hpp"

namespace gamedec {

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write file '" + path + "'");
  out << content;
}

struct GenFlags {
  GenConfig cfg;
  void attach(CLI::App* cmd, bool seed_required) {
    auto* seed = cmd->add_option("--seed", cfg.seed, "RNG seed (64-bit)");
    if (seed_required) seed->required();
    cmd->add_option("--min-strategies", cfg.min_strategies,
                    "Minimum strategies per player");
    cmd->add_option("--max-strategies", cfg.max_strategies,
                    "Maximum strategies per player");
    cmd->add_option("--p-sum", cfg.p_sum, "Probability of a sum split");
    cmd->add_option("--p-prod", cfg.p_prod, "Probability of a product split");
    cmd->add_option("--p-elim", cfg.p_elim,
                    "Probability of a dominated-strategy insertion step");
    cmd->add_option("--max-height", cfg.max_height, "Height limit of the plan tree");
    cmd->add_option("--leaf-max-size", cfg.leaf_max_size,
                    "Nodes of size up to this become leaves");
    cmd->add_option("--payoff-max", cfg.leaf_payoff_max,
                    "Leaf payoffs drawn uniformly from [0, this]");
  }
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int cmd_solve(const std::string& game_path, bool no_decompose, bool no_eliminate,
              const std::string& report_path, int threads, std::ostream& out) {
  const BimatrixGame g = parse_game(read_file(game_path));
  SolveOptions options;
  options.decompose = !no_decompose;
  options.eliminate = !no_eliminate;
  options.threads = std::max(1, threads);
  auto [eq, report] = solve(g, options);
  out << equilibrium_to_json(eq).dump(2) << "\n";
  if (!report_path.empty()) write_file(report_path, report_to_json(report).dump(2) + "\n");
  return 0;
}

int cmd_decompose(const std::string& game_path, bool no_eliminate, std::ostream& out) {
  const BimatrixGame g = parse_game(read_file(game_path));
  const DecompositionTree tree = decompose_tree(g, !no_eliminate);
  out << tree_to_json(tree).dump(2) << "\n";
  return 0;
}

int cmd_generate(const GenConfig& cfg, const std::string& out_path,
                 const std::string& tree_path) {
  const GenTree tree = generate_tree(cfg);
  if (tree_path.empty()) {
    write_file(out_path, write_game(realize(tree, cfg)));
  } else {
    RealizedGame realized = realize_with_structure(tree, cfg);
    write_file(out_path, write_game(realized.game));
    write_file(tree_path, tree_to_json(realized.structure).dump(2) + "\n");
  }
  return 0;
}

int cmd_verify(const std::string& game_path, const std::string& eq_path,
               std::ostream& out, std::ostream& err) {
  const BimatrixGame g = parse_game(read_file(game_path));
  Json j;
  try {
    j = Json::parse(read_file(eq_path));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("equilibrium JSON: ") + e.what());
  }
  Equilibrium eq = [&] {
    try {
      return equilibrium_from_json(j);
    } catch (const parse_error&) {
      throw;
    }
  }();
  if (eq.x.size() != g.rows() || eq.y.size() != g.cols()) {
    err << "strategy lengths (" << eq.x.size() << ", " << eq.y.size()
        << ") do not match the game (" << g.rows() << ", " << g.cols() << ")\n";
    return 3;
  }
  const auto [p, q] = expected_payoffs(g, eq.x, eq.y);
  if (p != eq.p1 || q != eq.p2) {
    err << "stated payoffs (" << eq.p1.str() << ", " << eq.p2.str()
        << ") differ from computed (" << p.str() << ", " << q.str() << ")\n";
    return 3;
  }
  if (!is_nash(g, eq.x, eq.y)) {
    err << "strategy pair admits a profitable deviation\n";
    return 3;
  }
  out << "valid equilibrium\n";
  return 0;
}

int cmd_bench(const GenConfig& base_cfg, long count, bool baseline,
              long baseline_max_size, const std::string& out_path, std::ostream& err) {
  std::ostringstream csv;
  csv << "seed,n,m,S,lambda,sum_nodes,product_nodes,elim_nodes,leaf_nodes,solve_ms";
  if (baseline) csv << ",baseline_ms";
  csv << "\n";

  std::vector<double> speedups;
  for (long i = 0; i < count; ++i) {
    GenConfig cfg = base_cfg;
    cfg.seed = base_cfg.seed + static_cast<std::uint64_t>(i);
    const GenTree tree = generate_tree(cfg);
    const BimatrixGame g = realize(tree, cfg);

    const auto t0 = Clock::now();
    auto [eq, report] = solve(g, SolveOptions{});
    const double solve_ms = ms_since(t0);
    if (!is_nash(g, eq.x, eq.y)) throw invariant_error("bench solve failed verification");

    csv << cfg.seed << "," << g.rows() << "," << g.cols() << "," << report.s << ","
        << report.lambda << "," << report.node_counts.sum << ","
        << report.node_counts.product << "," << report.node_counts.elim << ","
        << report.node_counts.leaf << "," << solve_ms;
    if (baseline) {
      if (report.s <= baseline_max_size) {
        const auto t1 = Clock::now();
        SolveOptions direct;
        direct.decompose = false;
        auto [beq, brep] = solve(g, direct);
        const double baseline_ms = ms_since(t1);
        if (!is_nash(g, beq.x, beq.y))
          throw invariant_error("bench baseline failed verification");
        csv << "," << baseline_ms;
        if (solve_ms > 0) speedups.push_back(baseline_ms / solve_ms);
      } else {
        csv << ",";
      }
    }
    csv << "\n";
  }
  if (!speedups.empty()) {
    std::sort(speedups.begin(), speedups.end());
    const double median = speedups[speedups.size() / 2];
    csv << "# median_speedup=" << median << "\n";
    err << "median baseline/decompose speedup: " << median << "x over "
        << speedups.size() << " instances\n";
  }
  write_file(out_path, csv.str());
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bimatrix game toolkit: compose, decompose, and solve "
               "games via sum/product structure"};
  app.name("gamedec");
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Find one exact Nash equilibrium");
  std::string solve_game, solve_report;
  bool no_decompose = false, no_eliminate = false;
  int threads = 1;
  solve_cmd->add_option("game-file", solve_game, "Game in bimatrix text format")
      ->required();
  solve_cmd->add_flag("--no-decompose", no_decompose,
                      "Run the base solver directly (benchmark baseline)");
  solve_cmd->add_flag("--no-eliminate", no_eliminate,
                      "Skip dominated-strategy elimination");
  solve_cmd->add_option("--report", solve_report, "Write a solve report JSON here");
  solve_cmd->add_option("--threads", threads, "Solve sibling subtrees concurrently");

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "Print the decomposition tree");
  std::string dec_game;
  bool dec_no_eliminate = false;
  dec_cmd->add_option("game-file", dec_game, "Game in bimatrix text format")->required();
  dec_cmd->add_flag("--no-eliminate", dec_no_eliminate,
                    "Skip dominated-strategy elimination");

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Generate a decomposable game");
  GenFlags gen_flags;
  std::string gen_out, gen_tree;
  gen_flags.attach(gen_cmd, true);
  gen_cmd->add_option("-o,--output", gen_out, "Game file to write")->required();
  gen_cmd->add_option("--tree", gen_tree, "Also write the plan tree JSON here");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Check an equilibrium JSON exactly");
  std::string ver_game, ver_eq;
  ver_cmd->add_option("game-file", ver_game, "Game in bimatrix text format")->required();
  ver_cmd->add_option("equilibrium-json", ver_eq, "Equilibrium JSON file")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Generate a corpus, solve, emit CSV");
  GenFlags bench_flags;
  long bench_count = 100;
  bool bench_baseline = false;
  long bench_baseline_max = 400;
  std::string bench_out;
  bench_cmd->add_option("--count", bench_count, "Number of games");
  bench_flags.attach(bench_cmd, true);
  bench_cmd->add_flag("--baseline", bench_baseline,
                      "Also time the base solver without decomposition");
  bench_cmd->add_option("--baseline-max-size", bench_baseline_max,
                        "Skip the baseline for games larger than this");
  bench_cmd->add_option("-o,--output", bench_out, "CSV file to write")->required();

  std::reverse(args.begin(), args.end());  // CLI11 consumes args back to front
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (solve_cmd->parsed())
      return cmd_solve(solve_game, no_decompose, no_eliminate, solve_report, threads, out);
    if (dec_cmd->parsed()) return cmd_decompose(dec_game, dec_no_eliminate, out);
    if (gen_cmd->parsed()) return cmd_generate(gen_flags.cfg, gen_out, gen_tree);
    if (ver_cmd->parsed()) return cmd_verify(ver_game, ver_eq, out, err);
    if (bench_cmd->parsed())
      return cmd_bench(bench_flags.cfg, bench_count, bench_baseline, bench_baseline_max,
                       bench_out, err);
    err << "no subcommand given\n";
    return 1;
  } catch (const parse_error& e) {
    err << "parse error";
    if (e.line > 0) {
      err << " at line " << e.line;
      if (e.column > 0) err << ", column " << e.column;
    }
    err << ": " << e.what() << "\n";
    return 2;
  } catch (const config_error& e) {
    err << "configuration error: " << e.what() << "\n";
    return 1;
  } catch (const contract_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return ver_cmd->parsed() ? 3 : 2;
  } catch (const invalid_input_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return ver_cmd->parsed() ? 3 : 2;
  } catch (const error& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace gamedec
