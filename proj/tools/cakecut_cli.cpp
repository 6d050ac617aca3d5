// Command-line front end: solve for envy-free and dragon certificates,
// verify certificate files, report chessboard homology, and audit model
// equivariance. Exit codes: 0 success, 1 input error, 2 budget exhausted.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cakecut/cakecut.hpp"

namespace {

using cakecut::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitBudgetExhausted = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << content;
}

cakecut::ModelFile load_model(const std::string& model_path, const std::string& demo_name) {
  if (!demo_name.empty()) return cakecut::load_demo(demo_name);
  if (model_path.empty()) throw std::runtime_error("pass --model FILE or --demo NAME");
  try {
    return cakecut::model_from_string(read_file(model_path));
  } catch (const json::exception& e) {
    throw std::runtime_error("model file '" + model_path + "': " + e.what());
  }
}

void print_warnings(const cakecut::ModelFile& model) {
  for (const auto& w : model.warnings) std::cout << "warning: " << w << "\n";
}

void print_score_table(const cakecut::ScoreOracle& oracle, const cakecut::NaturalConfig& c,
                       const std::string& label) {
  std::cout << "score table at " << label << " (cut";
  for (double x : c.cut.points()) std::cout << " " << x;
  std::cout << "; * marks preferred plates)\n";
  std::cout << "  player |";
  for (int i = 1; i <= c.r; ++i) std::cout << std::setw(11) << i;
  std::cout << "\n";
  for (int j = 1; j <= oracle.player_count(); ++j) {
    const auto scores = oracle.plate_scores(c, j);
    std::cout << "  " << std::setw(6) << j << " |";
    for (int i = 1; i <= c.r; ++i) {
      std::ostringstream cell;
      cell << std::setprecision(6) << scores[i - 1] << (oracle.prefers(c, j, i) ? "*" : "");
      std::cout << std::setw(11) << cell.str();
    }
    std::cout << "\n";
  }
}

struct SolveArgs {
  std::string model_path;
  std::string demo_name;
  std::string out_path;
  int grid = 16;
  double eps = 1e-6;
  int budget = 80;
  int threads = 0;
  std::uint64_t seed = 1;
  bool explain = false;
  bool as_json = false;
};

int run_solve(const SolveArgs& args) {
  auto model = load_model(args.model_path, args.demo_name);
  print_warnings(model);
  const auto& oracle = model.oracle;
  const int r = oracle.plate_count();
  const int players = oracle.player_count();

  if (args.explain && model.reference) {
    print_score_table(oracle, *model.reference, "the model's reference configuration");
  }

  cakecut::SolveParams params;
  params.grid = args.grid;
  params.eps = args.eps;
  params.budget = args.budget;
  params.threads = args.threads;

  json cert_json;
  bool found = false;
  double potential = 0.0;
  std::string kind;
  if (players == r) {
    kind = "envyfree";
    auto res = cakecut::solve(oracle, params);
    found = res.found;
    potential = res.potential;
    cert_json = cakecut::certificate_to_json(*res.certificate);
    if (args.explain && !model.reference) {
      print_score_table(oracle, res.certificate->config, "the solver's best configuration");
    }
  } else if (players == r - 1) {
    kind = "dragon-plates";
    auto res = cakecut::solve_dragon_piece(oracle, params);
    found = res.found;
    potential = res.potential;
    cert_json = cakecut::certificate_to_json(*res.certificate);
  } else if (players == r + 1) {
    kind = "dragon-players";
    auto res = cakecut::solve_dragon_player(oracle, params);
    found = res.found;
    potential = res.potential;
    cert_json = cakecut::certificate_to_json(*res.certificate);
  } else {
    throw std::runtime_error("player count must be r, r-1 or r+1 (got " +
                             std::to_string(players) + " players for r = " + std::to_string(r) +
                             ")");
  }

  if (!args.out_path.empty()) write_file(args.out_path, cert_json.dump(2) + "\n");
  if (args.as_json) {
    std::cout << json{{"kind", kind}, {"found", found}, {"potential", potential}}.dump() << "\n";
  } else {
    std::cout << (found ? "certificate found" : "budget exhausted; best incumbent reported")
              << " (kind " << kind << ", potential " << std::setprecision(17) << potential << ")\n";
  }
  return found ? kExitOk : kExitBudgetExhausted;
}

int run_verify(const std::string& cert_path, const std::string& model_path,
               const std::string& demo_name, bool as_json) {
  auto model = load_model(model_path, demo_name);
  auto cert = cakecut::certificate_from_json(json::parse(read_file(cert_path)));
  auto report = cakecut::verify_any(cert, model.oracle);
  if (as_json) {
    std::cout << cakecut::verify_report_to_json(report).dump() << "\n";
  } else {
    std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& f : report.failures) std::cout << "  " << f << "\n";
    std::cout << "  margins:";
    for (double m : report.margins) std::cout << " " << std::setprecision(17) << m;
    std::cout << "\n";
  }
  return report.pass ? kExitOk : kExitInputError;
}

int run_chess(int m, int n, bool as_json) {
  cakecut::ChessComplex board(m, n);
  auto homology = cakecut::homology_ranks(board);
  json report = cakecut::chess_report_to_json(board, homology);
  if (as_json) {
    std::cout << report.dump() << "\n";
  } else {
    std::cout << "chessboard complex " << m << "x" << n << "\n";
    for (const auto& h : homology) {
      std::cout << "  dim " << h.dim << ": faces " << cakecut::face_count_formula(board, h.dim + 1)
                << ", reduced betti " << h.betti << (h.torsion ? ", torsion" : "") << "\n";
    }
    const auto& vanish = report.at("vanishing");
    if (vanish.at("applies").get<bool>()) {
      std::cout << (vanish.at("ok").get<bool>()
                        ? "  low-degree homology vanishes as expected for n >= 2m-1\n"
                        : "  VIOLATION: low-degree homology does not vanish\n");
    }
  }
  return kExitOk;
}

int run_audit(const std::string& model_path, const std::string& demo_name, int samples,
              std::uint64_t seed, bool as_json) {
  auto model = load_model(model_path, demo_name);
  print_warnings(model);
  if (samples == 0) std::cout << "warning: zero samples audit nothing\n";
  cakecut::Sampler sampler(seed);
  std::vector<cakecut::NaturalConfig> configs;
  configs.reserve(samples);
  for (int i = 0; i < samples; ++i) configs.push_back(sampler.natural_config(model.oracle.plate_count()));
  auto violations = cakecut::audit_equivariance(model.oracle, configs, model.oracle.group());
  if (as_json) {
    std::cout << cakecut::audit_report_to_json(violations, samples).dump() << "\n";
  } else if (violations.empty()) {
    std::cout << "equivariant on " << samples << " samples\n";
  } else {
    std::cout << violations.size() << " violations on " << samples << " samples\n";
    for (std::size_t i = 0; i < violations.size() && i < 10; ++i) {
      const auto& v = violations[i];
      std::cout << "  sample " << v.sample << " player " << v.player << " plate " << v.plate
                << " g (";
      for (std::size_t d = 0; d < v.g.size(); ++d) std::cout << (d ? "," : "") << v.g[d];
      std::cout << ")\n";
    }
  }
  return violations.empty() ? kExitOk : kExitInputError;
}

void list_demos() {
  for (const auto& d : cakecut::demo_entries()) {
    std::cout << d.name << (d.negative_control ? " [negative control]" : "") << " - " << d.summary
              << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cooperative envy-free division toolkit"};
  app.require_subcommand(0, 1);
  bool flag_list_demos = false;
  app.add_flag("--list-demos", flag_list_demos, "list built-in demo models");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "search for a division certificate");
  solve_cmd->add_option("--model", solve_args.model_path, "model JSON file");
  solve_cmd->add_option("--demo", solve_args.demo_name, "built-in demo model name");
  solve_cmd->add_option("--grid", solve_args.grid, "coarse grid resolution")->check(CLI::Range(2, 4096));
  solve_cmd->add_option("--eps", solve_args.eps, "target tolerance");
  solve_cmd->add_option("--budget", solve_args.budget, "refinement rounds");
  solve_cmd->add_option("--seed", solve_args.seed, "seed (reserved for randomized inputs)");
  solve_cmd->add_option("--threads", solve_args.threads, "worker threads (0 = auto)");
  solve_cmd->add_option("--out", solve_args.out_path, "certificate output file");
  solve_cmd->add_flag("--explain", solve_args.explain, "print the per-plate score table");
  solve_cmd->add_flag("--json", solve_args.as_json, "machine-readable summary");

  std::string verify_cert, verify_model, verify_demo;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate against a model");
  verify_cmd->add_option("--cert", verify_cert, "certificate JSON file")->required();
  verify_cmd->add_option("--model", verify_model, "model JSON file");
  verify_cmd->add_option("--demo", verify_demo, "built-in demo model name");
  verify_cmd->add_flag("--json", verify_json, "machine-readable report");

  int chess_m = 0, chess_n = 0;
  bool chess_json = false;
  auto* chess_cmd = app.add_subcommand("chess", "face counts and homology of the rook complex");
  chess_cmd->alias("chess-homology");
  chess_cmd->add_option("m", chess_m, "rows")->required();
  chess_cmd->add_option("n", chess_n, "columns")->required();
  chess_cmd->add_flag("--json", chess_json, "machine-readable report");

  std::string audit_model, audit_demo;
  int audit_samples = 200;
  std::uint64_t audit_seed = 1;
  bool audit_json = false;
  auto* audit_cmd = app.add_subcommand("audit", "sampling-based equivariance audit");
  audit_cmd->alias("audit-equivariance");
  audit_cmd->add_option("--model", audit_model, "model JSON file");
  audit_cmd->add_option("--demo", audit_demo, "built-in demo model name");
  audit_cmd->add_option("--samples", audit_samples, "number of sampled configurations")
      ->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--seed", audit_seed, "sampling seed");
  audit_cmd->add_flag("--json", audit_json, "machine-readable report");

  std::string demo_name, demo_dump_dir;
  bool demo_list = false;
  auto* demo_cmd = app.add_subcommand("demo", "run or export the built-in demo models");
  demo_cmd->add_option("name", demo_name, "demo model to run end to end");
  demo_cmd->add_flag("--list", demo_list, "list demo models");
  demo_cmd->add_option("--dump-dir", demo_dump_dir, "write every demo model as JSON into DIR");

  CLI11_PARSE(app, argc, argv);

  try {
    if (flag_list_demos || demo_list) {
      list_demos();
      return kExitOk;
    }
    if (*solve_cmd) return run_solve(solve_args);
    if (*verify_cmd) return run_verify(verify_cert, verify_model, verify_demo, verify_json);
    if (*chess_cmd) return run_chess(chess_m, chess_n, chess_json);
    if (*audit_cmd) return run_audit(audit_model, audit_demo, audit_samples, audit_seed, audit_json);
    if (*demo_cmd) {
      if (!demo_dump_dir.empty()) {
        for (const auto& d : cakecut::demo_entries()) {
          write_file(demo_dump_dir + "/" + d.name + ".json", json::parse(d.json).dump(2) + "\n");
        }
        std::cout << "wrote " << cakecut::demo_entries().size() << " models to " << demo_dump_dir
                  << "\n";
        return kExitOk;
      }
      if (demo_name.empty()) {
        list_demos();
        return kExitOk;
      }
      SolveArgs args;
      args.demo_name = demo_name;
      args.explain = true;
      args.grid = 8;
      args.budget = 60;
      return run_solve(args);
    }
    std::cout << app.help();
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
