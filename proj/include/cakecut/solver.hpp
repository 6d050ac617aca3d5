#pragma once

// Search for approximate cooperative envy-free certificates, the averaged
// test map with Birkhoff-support permutation extraction, tree-certificate
// solvers for both dragon scenarios, and brute-force oracles for
// desk-scale validation. Every certificate is re-verified independently of
// the search path before being returned.

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cakecut/prefs.hpp"

namespace cakecut {

// ---------------------------------------------------------------------------
// Bipartite matching

namespace detail {

// Maximum matching via a greedy pass plus augmenting paths, both in fixed
// vertex order; returns match_left (-1 for unmatched).
inline std::vector<int> max_bipartite_matching(int n_left, int n_right,
                                               const std::vector<std::vector<int>>& adj) {
  std::vector<int> match_left(n_left, -1), match_right(n_right, -1);
  for (int u = 0; u < n_left; ++u) {
    for (int v : adj[u]) {
      if (match_right[v] == -1) {
        match_left[u] = v;
        match_right[v] = u;
        break;
      }
    }
  }
  std::vector<char> visited(n_right, 0);
  auto augment = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] == -1 || self(self, match_right[v])) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < n_left; ++u) {
    if (match_left[u] != -1) continue;
    std::fill(visited.begin(), visited.end(), 0);
    augment(augment, u);
  }
  return match_left;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // false when the edge would close a cycle.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) {
      if (find(i) == i) ++c;
    }
    return c;
  }
};

}  // namespace detail

// Perfect matching of players to accepted plates, if one exists.
// Deterministic through fixed vertex ordering; any perfect matching is a
// valid answer.
template <class Oracle>
std::optional<std::vector<int>> find_matching(const NaturalConfig& c, const Oracle& oracle) {
  const int r = oracle.player_count();
  std::vector<std::vector<int>> adj(r);
  for (int j = 1; j <= r; ++j) {
    for (int i = 1; i <= oracle.plate_count(); ++i) {
      if (oracle.prefers(c, j, i)) adj[j - 1].push_back(i - 1);
    }
  }
  auto match = detail::max_bipartite_matching(r, oracle.plate_count(), adj);
  std::vector<int> sigma(r);
  for (int j = 0; j < r; ++j) {
    if (match[j] == -1) return std::nullopt;
    sigma[j] = match[j] + 1;
  }
  return sigma;
}

// ---------------------------------------------------------------------------
// Test map and Birkhoff-support extraction

struct TestMap {
  std::vector<std::vector<double>> S;  // S[i][j]: plate i weight in player j's unity partition
  std::vector<double> F;               // column average, sums to 1

  std::vector<double> centered() const {
    std::vector<double> out(F);
    for (double& v : out) v -= 1.0 / static_cast<double>(F.size());
    return out;
  }
};

// Per-player partitions of unity supported on the delta-enlarged preferred
// sets, averaged into the vector F. Plates within delta of a player's best
// score receive positive weight proportional to their remaining headroom.
inline TestMap test_map(const NaturalConfig& c, const ScoreOracle& oracle, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("test map needs delta > 0");
  const int r = oracle.plate_count();
  if (oracle.player_count() != r) {
    throw std::invalid_argument("test map needs one player per plate");
  }
  TestMap tm;
  tm.S.assign(r, std::vector<double>(r, 0.0));
  tm.F.assign(r, 0.0);
  for (int j = 1; j <= r; ++j) {
    const auto deficits = oracle.score_deficits(c, j);
    const double eps = oracle.player_model(j).eps_pref;
    std::vector<double> h(r, 0.0);
    double total = 0.0;
    for (int i = 0; i < r; ++i) {
      h[i] = std::max(0.0, eps + delta - deficits[i]);
      total += h[i];
    }
    for (int i = 0; i < r; ++i) tm.S[i][j - 1] = h[i] / total;
  }
  for (int i = 0; i < r; ++i) {
    double s = 0.0;
    for (int j = 0; j < r; ++j) s += tm.S[i][j];
    tm.F[i] = s / static_cast<double>(r);
  }
  return tm;
}

// Extracts a permutation supported on the positive entries of a doubly
// stochastic matrix; such a permutation always exists since the vertices of
// the polytope of doubly stochastic matrices are the permutation matrices.
inline std::vector<int> support_permutation(const std::vector<std::vector<double>>& S,
                                            double tol = 1e-9) {
  const int r = static_cast<int>(S.size());
  if (r == 0) throw std::invalid_argument("empty matrix");
  for (const auto& row : S) {
    if (static_cast<int>(row.size()) != r) throw std::invalid_argument("matrix must be square");
  }
  for (int i = 0; i < r; ++i) {
    double row_sum = 0.0, col_sum = 0.0;
    for (int j = 0; j < r; ++j) {
      if (S[i][j] < -tol || S[j][i] < -tol) {
        throw std::invalid_argument("matrix is not doubly stochastic within tolerance");
      }
      row_sum += S[i][j];
      col_sum += S[j][i];
    }
    if (std::abs(row_sum - 1.0) > tol || std::abs(col_sum - 1.0) > tol) {
      throw std::invalid_argument("matrix is not doubly stochastic within tolerance");
    }
  }
  std::vector<std::vector<int>> adj(r);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) {
      if (S[i][j] > 0.0) adj[j].push_back(i);
    }
  }
  auto match = detail::max_bipartite_matching(r, r, adj);
  std::vector<int> sigma(r);
  for (int j = 0; j < r; ++j) {
    if (match[j] == -1) {
      throw std::runtime_error("support admits no perfect matching; tolerance breached");
    }
    sigma[j] = match[j] + 1;
  }
  return sigma;
}

// ---------------------------------------------------------------------------
// Envy potential (bottleneck assignment)

struct Assignment {
  double potential = 0.0;
  std::vector<int> sigma;        // player j -> plate sigma[j-1]
  std::vector<double> margins;   // score(sigma(j)) - best score (<= 0)
};

namespace detail {

inline std::vector<std::vector<double>> deficit_matrix(const NaturalConfig& c,
                                                       const ScoreOracle& oracle) {
  std::vector<std::vector<double>> d;
  d.reserve(oracle.player_count());
  for (int j = 1; j <= oracle.player_count(); ++j) d.push_back(oracle.score_deficits(c, j));
  return d;
}

// Smallest threshold admitting a perfect matching on edges with deficit at
// or below it, together with one such matching.
inline Assignment bottleneck_assignment(const std::vector<std::vector<double>>& deficits) {
  const int r = static_cast<int>(deficits.size());
  std::vector<double> values;
  for (const auto& row : deficits) values.insert(values.end(), row.begin(), row.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  auto matching_at = [&](double threshold) {
    std::vector<std::vector<int>> adj(r);
    for (int j = 0; j < r; ++j) {
      for (int i = 0; i < static_cast<int>(deficits[j].size()); ++i) {
        if (deficits[j][i] <= threshold) adj[j].push_back(i);
      }
    }
    return max_bipartite_matching(r, static_cast<int>(deficits[0].size()), adj);
  };
  auto perfect = [&](const std::vector<int>& m) {
    for (int v : m) {
      if (v == -1) return false;
    }
    return true;
  };

  std::size_t lo = 0, hi = values.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (perfect(matching_at(values[mid]))) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  Assignment out;
  out.potential = values[lo];
  auto match = matching_at(values[lo]);
  out.sigma.resize(r);
  out.margins.resize(r);
  for (int j = 0; j < r; ++j) {
    out.sigma[j] = match[j] + 1;
    out.margins[j] = -deficits[j][match[j]];
  }
  return out;
}

}  // namespace detail

// Bottleneck assignment value: the smallest worst-case gap between a
// player's best plate and the plate a bijection hands them. Zero exactly
// when an exact envy-free matching exists.
inline Assignment envy_assignment(const NaturalConfig& c, const ScoreOracle& oracle) {
  if (oracle.player_count() != c.r) {
    throw std::invalid_argument("envy potential needs one player per plate");
  }
  return detail::bottleneck_assignment(detail::deficit_matrix(c, oracle));
}

inline double envy_potential(const NaturalConfig& c, const ScoreOracle& oracle) {
  return envy_assignment(c, oracle).potential;
}

// ---------------------------------------------------------------------------
// Tree transversals for the dragon scenarios

struct TransversalEdge {
  int u = 0;  // 1-based vertices, u < v
  int v = 0;
  double cost = 0.0;
};

struct TransversalResult {
  bool feasible = false;
  double bottleneck = std::numeric_limits<double>::infinity();
  std::vector<std::array<int, 2>> edges;  // one per slot
};

namespace detail {

inline bool transversal_dfs(int slot, double threshold,
                            const std::vector<std::vector<TransversalEdge>>& candidates,
                            UnionFind& uf, std::vector<std::array<int, 2>>& chosen) {
  if (slot == static_cast<int>(candidates.size())) return true;
  for (const auto& e : candidates[slot]) {
    if (e.cost > threshold) continue;
    UnionFind saved = uf;
    if (!uf.unite(e.u - 1, e.v - 1)) {
      uf = saved;
      continue;
    }
    chosen[slot] = {e.u, e.v};
    if (transversal_dfs(slot + 1, threshold, candidates, uf, chosen)) return true;
    uf = saved;
  }
  return false;
}

}  // namespace detail

// One edge per slot, jointly acyclic on vertex_count vertices. With exactly
// vertex_count-1 slots an acyclic transversal is a spanning tree. Minimizes
// the largest edge cost; deterministic through candidate order.
inline TransversalResult min_bottleneck_tree_transversal(
    int vertex_count, const std::vector<std::vector<TransversalEdge>>& slot_candidates) {
  if (static_cast<int>(slot_candidates.size()) != vertex_count - 1) {
    throw std::invalid_argument("a spanning tree needs one edge per slot and vertex_count-1 slots");
  }
  std::vector<double> costs;
  for (const auto& slot : slot_candidates) {
    if (slot.empty()) return TransversalResult{};
    for (const auto& e : slot) costs.push_back(e.cost);
  }
  std::sort(costs.begin(), costs.end());
  costs.erase(std::unique(costs.begin(), costs.end()), costs.end());

  auto feasible = [&](double threshold, std::vector<std::array<int, 2>>* out) {
    detail::UnionFind uf(vertex_count);
    std::vector<std::array<int, 2>> chosen(slot_candidates.size());
    if (detail::transversal_dfs(0, threshold, slot_candidates, uf, chosen)) {
      if (out) *out = chosen;
      return true;
    }
    return false;
  };

  std::size_t lo = 0, hi = costs.size() - 1;
  if (!feasible(costs[hi], nullptr)) return TransversalResult{};
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (feasible(costs[mid], nullptr)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  TransversalResult res;
  res.feasible = true;
  res.bottleneck = costs[lo];
  feasible(costs[lo], &res.edges);
  return res;
}

namespace detail {

// Candidate edges on plates for the scenario where a greedy extra agent
// grabs one plate: player j must accept both endpoints.
inline std::vector<std::vector<TransversalEdge>> dragon_piece_candidates(
    const NaturalConfig& c, const ScoreOracle& oracle) {
  const int r = c.r;
  std::vector<std::vector<TransversalEdge>> slots;
  slots.reserve(oracle.player_count());
  for (int j = 1; j <= oracle.player_count(); ++j) {
    const auto d = oracle.score_deficits(c, j);
    std::vector<TransversalEdge> edges;
    for (int u = 1; u <= r; ++u) {
      for (int v = u + 1; v <= r; ++v) {
        edges.push_back(TransversalEdge{u, v, std::max(d[u - 1], d[v - 1])});
      }
    }
    slots.push_back(std::move(edges));
  }
  return slots;
}

// Candidate player pairs per plate for the scenario where one of r+1
// players is removed after cutting: both players must accept the plate.
inline std::vector<std::vector<TransversalEdge>> dragon_player_candidates(
    const NaturalConfig& c, const ScoreOracle& oracle) {
  const int players = oracle.player_count();
  std::vector<std::vector<double>> d;
  d.reserve(players);
  for (int j = 1; j <= players; ++j) d.push_back(oracle.score_deficits(c, j));
  std::vector<std::vector<TransversalEdge>> slots;
  slots.reserve(c.r);
  for (int i = 1; i <= c.r; ++i) {
    std::vector<TransversalEdge> edges;
    for (int u = 1; u <= players; ++u) {
      for (int v = u + 1; v <= players; ++v) {
        edges.push_back(TransversalEdge{u, v, std::max(d[u - 1][i - 1], d[v - 1][i - 1])});
      }
    }
    slots.push_back(std::move(edges));
  }
  return slots;
}

}  // namespace detail

// Smallest tolerance at which some transversal of accepted plate pairs
// forms a spanning tree on the plates (players = r-1).
inline TransversalResult dragon_piece_relaxation(const NaturalConfig& c,
                                                 const ScoreOracle& oracle) {
  if (oracle.player_count() != c.r - 1) {
    throw std::invalid_argument("dragon-piece needs r-1 players");
  }
  return min_bottleneck_tree_transversal(c.r, detail::dragon_piece_candidates(c, oracle));
}

// Symmetric variant with plates and players exchanged (players = r+1,
// spanning tree on the players).
inline TransversalResult dragon_player_relaxation(const NaturalConfig& c,
                                                  const ScoreOracle& oracle) {
  if (oracle.player_count() != c.r + 1) {
    throw std::invalid_argument("dragon-player needs r+1 players");
  }
  return min_bottleneck_tree_transversal(c.r + 1, detail::dragon_player_candidates(c, oracle));
}

// ---------------------------------------------------------------------------
// Certificates

struct EnvyFreeCertificate {
  NaturalConfig config;
  std::vector<int> sigma;  // sigma[j-1] = plate assigned to player j
  double eps = 0.0;
  std::vector<double> margins;  // <= 0; valid when >= -eps
  double potential = 0.0;
};

struct TreeCertificatePlates {
  NaturalConfig config;
  std::vector<std::array<int, 2>> edges;  // edges[j-1] = {u_j, v_j} on plates
  double eps = 0.0;
  std::vector<std::array<double, 2>> margins;
  double potential = 0.0;
};

struct TreeCertificatePlayers {
  NaturalConfig config;
  std::vector<std::array<int, 2>> edges;  // edges[i-1] = {u_i, v_i} on players
  double eps = 0.0;
  std::vector<std::array<double, 2>> margins;
  double potential = 0.0;
};

struct VerifyReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<double> margins;  // flattened recomputed margins

  void fail(std::string msg) {
    pass = false;
    failures.push_back(std::move(msg));
  }
};

namespace detail {

// A spanning tree is certified two ways: edge count plus acyclicity, and
// connectivity; each implies the other at |E| = |V|-1 and both are checked.
inline void check_tree(VerifyReport& report, int vertex_count,
                       const std::vector<std::array<int, 2>>& edges, const char* vertex_kind) {
  if (static_cast<int>(edges.size()) != vertex_count - 1) {
    report.fail("not a tree: expected " + std::to_string(vertex_count - 1) + " edges, got " +
                std::to_string(edges.size()));
    return;
  }
  UnionFind uf(vertex_count);
  for (const auto& e : edges) {
    if (e[0] < 1 || e[0] > vertex_count || e[1] < 1 || e[1] > vertex_count) {
      report.fail(std::string("edge endpoint outside the ") + vertex_kind + " range");
      return;
    }
    if (e[0] == e[1]) {
      report.fail("edge endpoints must be distinct");
      return;
    }
    if (!uf.unite(e[0] - 1, e[1] - 1)) {
      report.fail("not a tree: edges contain a cycle");
      return;
    }
  }
  if (uf.components() != 1) {
    report.fail("not a tree: edge set is disconnected");
  }
}

}  // namespace detail

// Recomputes every membership and structural condition from scratch.
inline VerifyReport verify_certificate(const EnvyFreeCertificate& cert,
                                       const ScoreOracle& oracle) {
  VerifyReport report;
  if (cert.config.r != oracle.plate_count() || oracle.player_count() != cert.config.r) {
    report.fail("certificate and model disagree on the number of plates/players");
    return report;
  }
  const int r = cert.config.r;
  if (static_cast<int>(cert.sigma.size()) != r) {
    report.fail("not a bijection: wrong number of assignments");
    return report;
  }
  std::vector<bool> seen(r, false);
  for (int plate : cert.sigma) {
    if (plate < 1 || plate > r || seen[plate - 1]) {
      report.fail("not a bijection");
      return report;
    }
    seen[plate - 1] = true;
  }
  for (int j = 1; j <= r; ++j) {
    const auto d = oracle.score_deficits(cert.config, j);
    const double margin = -d[cert.sigma[j - 1] - 1];
    report.margins.push_back(margin);
    if (margin < -cert.eps) {
      report.fail("player " + std::to_string(j) + " rejects plate " +
                  std::to_string(cert.sigma[j - 1]) + " (margin " + std::to_string(margin) + ")");
    }
  }
  return report;
}

inline VerifyReport verify_certificate(const TreeCertificatePlates& cert,
                                       const ScoreOracle& oracle) {
  VerifyReport report;
  if (cert.config.r != oracle.plate_count() || oracle.player_count() != cert.config.r - 1) {
    report.fail("certificate and model disagree on the number of plates/players");
    return report;
  }
  detail::check_tree(report, cert.config.r, cert.edges, "plate");
  if (!report.pass) return report;
  for (int j = 1; j <= oracle.player_count(); ++j) {
    const auto d = oracle.score_deficits(cert.config, j);
    for (int endpoint : cert.edges[j - 1]) {
      const double margin = -d[endpoint - 1];
      report.margins.push_back(margin);
      if (margin < -cert.eps) {
        report.fail("player " + std::to_string(j) + " rejects plate " + std::to_string(endpoint));
      }
    }
  }
  return report;
}

inline VerifyReport verify_certificate(const TreeCertificatePlayers& cert,
                                       const ScoreOracle& oracle) {
  VerifyReport report;
  if (cert.config.r != oracle.plate_count() || oracle.player_count() != cert.config.r + 1) {
    report.fail("certificate and model disagree on the number of plates/players");
    return report;
  }
  detail::check_tree(report, cert.config.r + 1, cert.edges, "player");
  if (!report.pass) return report;
  for (int i = 1; i <= cert.config.r; ++i) {
    for (int player : cert.edges[i - 1]) {
      const auto d = oracle.score_deficits(cert.config, player);
      const double margin = -d[i - 1];
      report.margins.push_back(margin);
      if (margin < -cert.eps) {
        report.fail("player " + std::to_string(player) + " rejects plate " + std::to_string(i));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Grid search with local refinement

struct SolveParams {
  int grid = 16;      // coarse resolution N: cut points on {t/N}
  double eps = 1e-6;  // target tolerance
  int budget = 80;    // refinement rounds
  int threads = 0;    // 0 = hardware concurrency
  int incumbents = 12;
};

struct SearchStats {
  long long evaluated = 0;
  int rounds = 0;
};

namespace detail {

// Canonical representatives of injective allocations [k] -> [r] under the
// plate action: the lexicographically smallest member of each orbit.
inline std::vector<Allocation> allocation_orbit_reps(const PToralGroup& g, int k) {
  const int r = g.order();
  std::vector<Allocation> reps;
  Allocation current;
  std::vector<bool> used(r + 1, false);
  const auto elems = g.elements();
  auto canonical = [&](const Allocation& a) {
    for (const auto& e : elems) {
      Allocation moved = act_alloc(g, e, a);
      if (moved < a) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == k) {
      if (canonical(current)) reps.push_back(current);
      return;
    }
    for (int plate = 1; plate <= r; ++plate) {
      if (used[plate]) continue;
      used[plate] = true;
      current.push_back(plate);
      self(self);
      current.pop_back();
      used[plate] = false;
    }
  };
  recurse(recurse);
  return reps;
}

struct Candidate {
  int k = 1;
  std::vector<int> interior;  // grid indices 1..N-1, strictly increasing
  int alloc_id = 0;
};

// All k-1 element subsets of {1..N-1} in lexicographic order.
inline std::vector<std::vector<int>> grid_combinations(int grid, int choose) {
  std::vector<std::vector<int>> out;
  if (choose == 0) {
    out.push_back({});
    return out;
  }
  if (choose > grid - 1) return out;
  std::vector<int> combo(choose);
  for (int i = 0; i < choose; ++i) combo[i] = i + 1;
  while (true) {
    out.push_back(combo);
    int i = choose - 1;
    while (i >= 0 && combo[i] == grid - 1 - (choose - 1 - i)) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < choose; ++j) combo[j] = combo[j - 1] + 1;
  }
  return out;
}

inline NaturalConfig make_config(int r, int grid, const Candidate& cand,
                                 const std::vector<std::vector<Allocation>>& reps_by_k) {
  std::vector<double> points;
  points.reserve(cand.k + 1);
  points.push_back(0.0);
  for (int t : cand.interior) points.push_back(static_cast<double>(t) / grid);
  points.push_back(1.0);
  return NaturalConfig(ProperCut(std::move(points)), reps_by_k[cand.k][cand.alloc_id], r);
}

inline NaturalConfig config_from_interior(int r, const std::vector<double>& interior,
                                          const Allocation& alloc) {
  std::vector<double> points;
  points.reserve(interior.size() + 2);
  points.push_back(0.0);
  for (double x : interior) points.push_back(x);
  points.push_back(1.0);
  return NaturalConfig(ProperCut(std::move(points)), alloc, r);
}

struct Incumbent {
  double value = std::numeric_limits<double>::infinity();
  int k = 1;
  Allocation alloc;
  std::vector<double> interior;
  double step = 0.0;
};

// Coarse pass over every grid configuration (one representative per plate
// orbit), then pattern-search refinement of the best incumbents: each round
// tries +-step moves of every interior cut point and halves the step when
// no move improves. The incumbent minimum is a deterministic function of
// the candidate order, independent of the thread count.
template <class Objective>
Incumbent grid_search(int r, const PToralGroup& group, const SolveParams& params,
                      SearchStats& stats, const Objective& objective) {
  if (params.grid < 2) throw std::invalid_argument("grid resolution must be at least 2");
  if (params.eps <= 0.0) throw std::invalid_argument("target eps must be positive");

  std::vector<std::vector<Allocation>> reps_by_k(r + 1);
  for (int k = 1; k <= r; ++k) reps_by_k[k] = allocation_orbit_reps(group, k);

  std::vector<Candidate> candidates;
  for (int k = 1; k <= r; ++k) {
    const auto combos = grid_combinations(params.grid, k - 1);
    for (const auto& combo : combos) {
      for (int a = 0; a < static_cast<int>(reps_by_k[k].size()); ++a) {
        candidates.push_back(Candidate{k, combo, a});
      }
    }
  }

  std::vector<double> values(candidates.size());
  int threads = params.threads > 0 ? params.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(candidates.size())));
  {
    std::vector<std::thread> pool;
    std::size_t chunk = (candidates.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(candidates.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end]() {
        for (std::size_t i = begin; i < end; ++i) {
          values[i] = objective(make_config(r, params.grid, candidates[i], reps_by_k));
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  stats.evaluated += static_cast<long long>(candidates.size());

  // Global top-M plus the best candidate of every (k, allocation) class.
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<std::size_t> chosen;
  {
    int class_count = 0;
    std::vector<std::vector<int>> class_id(r + 1);
    for (int k = 1; k <= r; ++k) {
      class_id[k].assign(reps_by_k[k].size(), 0);
      for (auto& id : class_id[k]) id = class_count++;
    }
    std::vector<char> class_taken(class_count, 0);
    const int cap = std::max(params.incumbents, std::min(class_count, 32));
    for (std::size_t i = 0; i < order.size() && static_cast<int>(chosen.size()) < cap; ++i) {
      std::size_t idx = order[i];
      const int cls = class_id[candidates[idx].k][candidates[idx].alloc_id];
      if (!class_taken[cls] || static_cast<int>(chosen.size()) < params.incumbents) {
        class_taken[cls] = 1;
        chosen.push_back(idx);
      }
    }
  }

  std::vector<Incumbent> pool;
  pool.reserve(chosen.size());
  for (std::size_t idx : chosen) {
    Incumbent inc;
    inc.value = values[idx];
    inc.k = candidates[idx].k;
    inc.alloc = reps_by_k[inc.k][candidates[idx].alloc_id];
    for (int t : candidates[idx].interior) {
      inc.interior.push_back(static_cast<double>(t) / params.grid);
    }
    inc.step = 0.5 / params.grid;
    pool.push_back(std::move(inc));
  }

  auto best_of = [&]() {
    std::size_t b = 0;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (pool[i].value < pool[b].value) b = i;
    }
    return b;
  };

  constexpr double kMinGap = 1e-9;
  for (int round = 0; round < params.budget; ++round) {
    if (pool[best_of()].value <= params.eps) break;
    ++stats.rounds;
    for (auto& inc : pool) {
      const int dims = inc.k - 1;
      if (dims == 0) continue;
      std::vector<double> best_move;
      double best_value = inc.value;
      std::vector<int> move(dims, -1);  // ternary counter over {-1,0,+1}
      while (true) {
        bool all_zero = true;
        for (int m : move) all_zero = all_zero && m == 0;
        if (!all_zero) {
          std::vector<double> trial(inc.interior);
          bool valid = true;
          for (int d = 0; d < dims; ++d) trial[d] += move[d] * inc.step;
          double prev = 0.0;
          for (double x : trial) {
            if (x - prev < kMinGap) valid = false;
            prev = x;
          }
          if (1.0 - prev < kMinGap) valid = false;
          if (valid) {
            double v = objective(config_from_interior(r, trial, inc.alloc));
            ++stats.evaluated;
            if (v < best_value) {
              best_value = v;
              best_move = trial;
            }
          }
        }
        int d = dims - 1;
        while (d >= 0 && move[d] == 1) move[d--] = -1;
        if (d < 0) break;
        ++move[d];
      }
      if (!best_move.empty()) {
        inc.interior = best_move;
        inc.value = best_value;
      } else {
        inc.step /= 2.0;
      }
    }
  }
  return pool[best_of()];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Solvers

struct SolveResult {
  bool found = false;
  std::optional<EnvyFreeCertificate> certificate;  // incumbent even when !found
  double potential = std::numeric_limits<double>::infinity();
  SearchStats stats;
};

struct DragonPieceResult {
  bool found = false;
  std::optional<TreeCertificatePlates> certificate;
  double potential = std::numeric_limits<double>::infinity();
  SearchStats stats;
};

struct DragonPlayerResult {
  bool found = false;
  std::optional<TreeCertificatePlayers> certificate;
  double potential = std::numeric_limits<double>::infinity();
  SearchStats stats;
};

// Coarse-to-fine search for an approximately envy-free configuration. The
// returned certificate is recomputed and re-verified at the incumbent,
// independently of the search path; absence of a certificate only means
// the budget ran out, never nonexistence.
inline SolveResult solve(const ScoreOracle& oracle, const SolveParams& params) {
  const int r = oracle.plate_count();
  if (oracle.player_count() != r) {
    throw std::invalid_argument("envy-free solve needs one player per plate");
  }
  SolveResult result;
  auto inc = detail::grid_search(
      r, oracle.group(), params, result.stats,
      [&](const NaturalConfig& c) { return envy_potential(c, oracle); });

  NaturalConfig best = detail::config_from_interior(r, inc.interior, inc.alloc);
  Assignment assign = envy_assignment(best, oracle);
  EnvyFreeCertificate cert{best, assign.sigma, params.eps, assign.margins, assign.potential};
  result.potential = assign.potential;
  result.found = assign.potential <= params.eps && verify_certificate(cert, oracle).pass;
  result.certificate = std::move(cert);
  return result;
}

inline DragonPieceResult solve_dragon_piece(const ScoreOracle& oracle, const SolveParams& params) {
  const int r = oracle.plate_count();
  if (oracle.player_count() != r - 1) {
    throw std::invalid_argument("dragon-piece solve needs r-1 players");
  }
  DragonPieceResult result;
  auto inc = detail::grid_search(
      r, oracle.group(), params, result.stats,
      [&](const NaturalConfig& c) { return dragon_piece_relaxation(c, oracle).bottleneck; });

  NaturalConfig best = detail::config_from_interior(r, inc.interior, inc.alloc);
  auto trans = dragon_piece_relaxation(best, oracle);
  if (!trans.feasible) return result;
  std::vector<std::array<double, 2>> margins;
  for (int j = 1; j <= oracle.player_count(); ++j) {
    const auto d = oracle.score_deficits(best, j);
    margins.push_back({-d[trans.edges[j - 1][0] - 1], -d[trans.edges[j - 1][1] - 1]});
  }
  TreeCertificatePlates cert{best, trans.edges, params.eps, margins, trans.bottleneck};
  result.potential = trans.bottleneck;
  result.found = trans.bottleneck <= params.eps && verify_certificate(cert, oracle).pass;
  result.certificate = std::move(cert);
  return result;
}

inline DragonPlayerResult solve_dragon_player(const ScoreOracle& oracle,
                                              const SolveParams& params) {
  const int r = oracle.plate_count();
  if (oracle.player_count() != r + 1) {
    throw std::invalid_argument("dragon-player solve needs r+1 players");
  }
  DragonPlayerResult result;
  auto inc = detail::grid_search(
      r, oracle.group(), params, result.stats,
      [&](const NaturalConfig& c) { return dragon_player_relaxation(c, oracle).bottleneck; });

  NaturalConfig best = detail::config_from_interior(r, inc.interior, inc.alloc);
  auto trans = dragon_player_relaxation(best, oracle);
  if (!trans.feasible) return result;
  std::vector<std::array<double, 2>> margins;
  for (int i = 1; i <= r; ++i) {
    const auto du = oracle.score_deficits(best, trans.edges[i - 1][0]);
    const auto dv = oracle.score_deficits(best, trans.edges[i - 1][1]);
    margins.push_back({-du[i - 1], -dv[i - 1]});
  }
  TreeCertificatePlayers cert{best, trans.edges, params.eps, margins, trans.bottleneck};
  result.potential = trans.bottleneck;
  result.found = trans.bottleneck <= params.eps && verify_certificate(cert, oracle).pass;
  result.certificate = std::move(cert);
  return result;
}

// Exhaustive ground truth at desk scale: every grid configuration, every
// injective allocation (no orbit reduction) and every assignment
// permutation, with the potential evaluated by direct enumeration rather
// than the bottleneck machinery.
inline EnvyFreeCertificate brute_force_solve(const ScoreOracle& oracle, int grid) {
  const int r = oracle.plate_count();
  if (r > 3 || grid > 64) throw std::invalid_argument("brute force is guarded to r <= 3, grid <= 64");
  if (oracle.player_count() != r) {
    throw std::invalid_argument("envy-free solve needs one player per plate");
  }

  std::optional<EnvyFreeCertificate> best;
  std::vector<int> base_perm(r);
  for (int j = 0; j < r; ++j) base_perm[j] = j + 1;

  for (int k = 1; k <= r; ++k) {
    const auto combos = detail::grid_combinations(grid, k - 1);
    std::vector<Allocation> allocs;
    {
      Allocation current;
      std::vector<bool> used(r + 1, false);
      auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == k) {
          allocs.push_back(current);
          return;
        }
        for (int plate = 1; plate <= r; ++plate) {
          if (used[plate]) continue;
          used[plate] = true;
          current.push_back(plate);
          self(self);
          current.pop_back();
          used[plate] = false;
        }
      };
      recurse(recurse);
    }
    for (const auto& combo : combos) {
      std::vector<double> points;
      points.push_back(0.0);
      for (int t : combo) points.push_back(static_cast<double>(t) / grid);
      points.push_back(1.0);
      for (const auto& alloc : allocs) {
        NaturalConfig c(ProperCut(points), alloc, r);
        auto deficits = detail::deficit_matrix(c, oracle);
        std::vector<int> perm = base_perm;
        double best_value = std::numeric_limits<double>::infinity();
        std::vector<int> best_perm;
        do {
          double worst = 0.0;
          for (int j = 0; j < r; ++j) worst = std::max(worst, deficits[j][perm[j] - 1]);
          if (worst < best_value) {
            best_value = worst;
            best_perm = perm;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!best || best_value < best->potential) {
          std::vector<double> margins(r);
          for (int j = 0; j < r; ++j) margins[j] = -deficits[j][best_perm[j] - 1];
          best = EnvyFreeCertificate{c, best_perm, best_value, margins, best_value};
        }
      }
    }
  }
  return *best;
}

}  // namespace cakecut
