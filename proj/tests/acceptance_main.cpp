// Acceptance suite: one pass/fail line per criterion, non-zero exit when
// any criterion fails. Each criterion pins its tolerance and time limit.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "cakecut/cakecut.hpp"
#include "support/helpers.hpp"

namespace fs = std::filesystem;
using namespace cakecut;

namespace {

struct Criterion {
  int number;
  std::string description;
  double time_limit_seconds;
  std::function<bool(std::ostream&)> check;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool example_chocolate_table(std::ostream& log) {
  auto model = load_demo("example-1-2");
  const auto scores = model.oracle.plate_scores(*model.reference, 1);
  const std::vector<double> expected{101.0, 200.0, 101.0, 102.0, 2.0, 2.0, 101.0};
  if (scores != expected) {
    log << "score vector mismatch";
    return false;
  }
  if (!model.oracle.prefers(*model.reference, 1, 2)) {
    log << "empty plate 2 must be the argmax";
    return false;
  }
  for (double eps : {0.0, 50.0, 97.9}) {
    auto players = model.oracle.players();
    for (auto& p : players) p.eps_pref = eps;
    ScoreOracle relaxed(model.oracle.group(), std::move(players));
    if (relaxed.prefers(*model.reference, 1, 6)) {
      log << "plate 6 preferred at eps_pref " << eps;
      return false;
    }
  }
  return true;
}

bool chessboard_homology(std::ostream& log) {
  const auto h23 = homology_ranks(ChessComplex(2, 3));
  if (h23[0].betti != 0 || h23[1].betti != 1) {
    log << "2x3 betti mismatch";
    return false;
  }
  const auto h35 = homology_ranks(ChessComplex(3, 5));
  if (h35[0].betti != 0 || h35[1].betti != 0) {
    log << "3x5 betti mismatch";
    return false;
  }
  const auto h47 = homology_ranks(ChessComplex(4, 7));
  for (int d = 0; d <= 2; ++d) {
    if (h47[d].betti != 0 || h47[d].torsion) {
      log << "4x7 reduced homology must vanish in degree " << d;
      return false;
    }
  }
  return true;
}

bool face_count_grid(std::ostream& log) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 7; ++n) {
      ChessComplex board(m, n);
      for (int k = 1; k <= m; ++k) {
        const long long enumerated = static_cast<long long>(enumerate_faces(board, k - 1).size());
        if (enumerated != face_count_formula(board, k)) {
          log << "count mismatch at m=" << m << " n=" << n << " k=" << k;
          return false;
        }
      }
    }
  }
  return true;
}

bool matching_vs_exhaustive(std::ostream& log) {
  Sampler rng(4001);
  for (int trial = 0; trial < 1000; ++trial) {
    const int r = rng.uniform_int(1, 5);
    const int density = rng.uniform_int(2, 8);
    std::vector<std::vector<bool>> accept(r, std::vector<bool>(r));
    for (auto& row : accept) {
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = rng.uniform_int(1, 10) <= density;
    }
    testing::BoolOracle oracle{accept};
    const bool found = find_matching(testing::dummy_config(r), oracle).has_value();
    if (found != testing::matching_exists_exhaustive(accept)) {
      log << "disagreement at trial " << trial;
      return false;
    }
  }
  return true;
}

bool solver_vs_brute_force(std::ostream& log) {
  for (int i = 0; i < 20; ++i) {
    Sampler rng(5000 + i);
    auto oracle = testing::random_equivariant_oracle(2, 1, rng);
    SolveParams params;
    params.grid = 64;
    params.eps = 1e-9;
    const auto res = solve(oracle, params);
    const auto brute = brute_force_solve(oracle, 64);
    if (res.potential > brute.potential + 1e-9) {
      log << "model " << i << ": solver " << res.potential << " > brute " << brute.potential;
      return false;
    }
  }
  return true;
}

bool existence_at_desk_scale(std::ostream& log) {
  const std::vector<std::tuple<int, int, int>> shapes = {{2, 1, 32}, {3, 1, 24}, {2, 2, 12}};
  for (const auto& [p, nu, grid] : shapes) {
    for (int i = 0; i < 10; ++i) {
      Sampler rng(6000 + 100 * p * nu + i);
      auto oracle = testing::random_equivariant_oracle(p, nu, rng);
      SolveParams params;  // default budget
      params.grid = grid;
      params.eps = 1e-3;
      const auto res = solve(oracle, params);
      if (!res.found || res.potential > 1e-3) {
        log << "r=" << oracle.plate_count() << " model " << i << " potential " << res.potential;
        return false;
      }
      if (!verify_certificate(*res.certificate, oracle).pass) {
        log << "certificate failed verification";
        return false;
      }
    }
  }
  return true;
}

bool equivariance_audits(std::ostream& log) {
  for (const auto& entry : demo_entries()) {
    auto model = load_demo(entry.name);
    Sampler rng(7001);
    std::vector<NaturalConfig> samples;
    for (int i = 0; i < 200; ++i) samples.push_back(rng.natural_config(model.oracle.plate_count()));
    const auto violations = audit_equivariance(model.oracle, samples, model.oracle.group());
    if (entry.negative_control && violations.empty()) {
      log << entry.name << " should violate equivariance";
      return false;
    }
    if (!entry.negative_control && !violations.empty()) {
      log << entry.name << " has " << violations.size() << " violations";
      return false;
    }
  }
  return true;
}

bool dragon_variants(std::ostream& log) {
  SolveParams params;
  params.grid = 16;
  params.eps = 1e-6;
  for (const char* name : {"dragon-piece-2", "dragon-piece-3"}) {
    auto model = load_demo(name);
    const auto res = solve_dragon_piece(model.oracle, params);
    if (!res.found || !verify_certificate(*res.certificate, model.oracle).pass) {
      log << name << " failed (potential " << res.potential << ")";
      return false;
    }
  }
  for (const char* name : {"dragon-player-2", "dragon-player-3"}) {
    auto model = load_demo(name);
    const auto res = solve_dragon_player(model.oracle, params);
    if (!res.found || !verify_certificate(*res.certificate, model.oracle).pass) {
      log << name << " failed (potential " << res.potential << ")";
      return false;
    }
  }
  return true;
}

bool projection_equivalence_laws(std::ostream& log) {
  const std::vector<std::pair<int, const char*>> models = {
      {2, "uniform-2"}, {3, "window-3"}, {4, "tables-4"}};
  Sampler rng(9001);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& [r, name] = models[trial % models.size()];
    auto model = load_demo(name);
    PullbackOracle pulled(model.oracle);
    auto aux = rng.aux_config(r);
    auto other = rng.equivalent_representative(aux);
    if (!equal_within(matrix_rep(aux), matrix_rep(other), 0.0)) {
      log << "matrix representations differ at trial " << trial;
      return false;
    }
    if (!(project(aux) == project(other))) {
      log << "projections differ at trial " << trial;
      return false;
    }
    for (int j = 1; j <= model.oracle.player_count(); ++j) {
      for (int i = 1; i <= r; ++i) {
        if (pulled.prefers(aux, j, i) != pulled.prefers(other, j, i)) {
          log << "pullback answers differ at trial " << trial;
          return false;
        }
      }
    }
  }
  return true;
}

bool threaded_determinism(std::ostream& log) {
  const fs::path tmp = fs::current_path() / "acceptance_tmp";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  const std::string cli = CAKECUT_CLI_PATH;
  const std::string base = cli + " solve --demo window-3 --grid 16 --eps 1e-6 --seed 7";
  const auto run = [&](int threads) {
    const std::string suffix = std::to_string(threads);
    const std::string cmd = base + " --threads " + suffix + " --out " +
                            (tmp / ("cert" + suffix + ".json")).string() + " > " +
                            (tmp / ("stdout" + suffix + ".txt")).string() + " 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  if (run(1) != 0 || run(4) != 0) {
    log << "solver runs failed";
    return false;
  }
  const bool same_cert = slurp(tmp / "cert1.json") == slurp(tmp / "cert4.json");
  const bool same_out = slurp(tmp / "stdout1.txt") == slurp(tmp / "stdout4.txt");
  fs::remove_all(tmp);
  if (!same_cert || !same_out) {
    log << "outputs differ across thread counts";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "seven-plate chocolate table: scores (101,200,101,102,2,2,101), empty plate 2 wins",
       1.0, example_chocolate_table},
      {2, "chessboard homology: 2x3 (0,1); 3x5 (0,0,.); 4x7 vanishes in degrees 0..2", 60.0,
       chessboard_homology},
      {3, "rook face counts match C(m,k)*C(n,k)*k! for m<=4, n<=7", 10.0, face_count_grid},
      {4, "matching agrees with exhaustive permutation search on 1000 random instances", 10.0,
       matching_vs_exhaustive},
      {5, "solver potential is at most the brute-force optimum on 20 random two-player models",
       60.0, solver_vs_brute_force},
      {6, "solver certifies potential <= 1e-3 on 10 random models for each r in {2,3,4}", 300.0,
       existence_at_desk_scale},
      {7, "every shipped model passes the 200-sample equivariance audit; the negative control "
          "fails", 30.0, equivariance_audits},
      {8, "dragon solvers return verified tree certificates for r in {2,3}", 120.0,
       dragon_variants},
      {9, "equivalent auxiliary representatives: identical matrices, projections and pullback "
          "answers on 1000 samples", 10.0, projection_equivalence_laws},
      {10, "equal seeds with different --threads produce byte-identical outputs", 60.0,
       threaded_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.time_limit_seconds) {
      ok = false;
      log << (log.str().empty() ? "" : "; ") << "time limit " << c.time_limit_seconds
          << " s exceeded";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.description
              << " [" << seconds << " s]";
    if (!ok && !log.str().empty()) std::cout << " -- " << log.str();
    std::cout << "\n";
    failures += ok ? 0 : 1;
  }
  if (failures > 0) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
