#pragma once

// Shared helpers for the test suites: random equivariant models, auxiliary
// padding, and a preference oracle backed by a plain boolean matrix.

#include <utility>
#include <vector>

#include "cakecut/cakecut.hpp"

namespace cakecut::testing {

// Random piecewise-constant density on a 1/16 grid with values in
// {0.25, ..., 2.0}; dyadic data keeps integrals exact.
inline Density random_density(Sampler& rng) {
  const int pieces = rng.uniform_int(1, 3);
  std::vector<int> cuts;
  while (static_cast<int>(cuts.size()) < pieces - 1) {
    int c = rng.uniform_int(1, 15);
    bool fresh = true;
    for (int existing : cuts) fresh = fresh && existing != c;
    if (fresh) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<DensityPiece> out;
  double begin = 0.0;
  for (int c : cuts) {
    out.push_back(DensityPiece{begin, c / 16.0, rng.uniform_int(1, 8) / 4.0});
    begin = c / 16.0;
  }
  out.push_back(DensityPiece{begin, 1.0, rng.uniform_int(1, 8) / 4.0});
  return Density(std::move(out));
}

// Equivariant by construction: every offset is a group element.
inline NeighborWeights random_weights(const PToralGroup& g, Sampler& rng) {
  std::vector<std::pair<std::vector<int>, double>> raw;
  raw.push_back({g.identity(), static_cast<double>(rng.uniform_int(1, 2))});
  const int extras = rng.uniform_int(0, std::min(2, g.order() - 1));
  for (int i = 0; i < extras; ++i) {
    auto offset = g.element(rng.uniform_int(1, g.order() - 1));
    raw.push_back({offset, static_cast<double>(rng.uniform_int(-1, 1))});
  }
  return NeighborWeights::from_offsets(g, raw);
}

inline ScoreOracle random_equivariant_oracle(int p, int nu, Sampler& rng, int player_count = 0) {
  PToralGroup group(p, nu);
  if (player_count == 0) player_count = group.order();
  std::vector<PlayerModel> players;
  for (int j = 0; j < player_count; ++j) {
    players.push_back(PlayerModel{random_density(rng), random_weights(group, rng)});
  }
  return ScoreOracle(group, std::move(players));
}

// Preimage of a natural configuration under projection: 2r-1-k degenerate
// tiles at the left end, assigned the unused plates round-robin (or plate 1
// when every plate is busy).
inline AuxConfig pad_natural(const NaturalConfig& c) {
  const int n = 2 * c.r - 1;
  const int k = c.cut.tile_count();
  std::vector<double> points;
  points.push_back(0.0);
  for (int i = 0; i < n - k; ++i) points.push_back(0.0);
  for (int i = 1; i <= k; ++i) points.push_back(c.cut.points()[i]);

  std::vector<int> unused;
  std::vector<bool> used(c.r + 1, false);
  for (int plate : c.alloc) used[plate] = true;
  for (int plate = 1; plate <= c.r; ++plate) {
    if (!used[plate]) unused.push_back(plate);
  }
  Allocation alloc;
  for (int i = 0; i < n - k; ++i) {
    alloc.push_back(unused.empty() ? 1 : unused[i % unused.size()]);
  }
  for (int plate : c.alloc) alloc.push_back(plate);
  return AuxConfig(ImproperCut(std::move(points)), std::move(alloc), c.r);
}

// Preference oracle driven by a plain acceptance matrix, ignoring the
// configuration; used to compare matching against exhaustive search.
struct BoolOracle {
  std::vector<std::vector<bool>> accept;  // accept[player][plate]

  int player_count() const { return static_cast<int>(accept.size()); }
  int plate_count() const { return static_cast<int>(accept[0].size()); }
  bool prefers(const NaturalConfig&, int player, int plate) const {
    return accept[player - 1][plate - 1];
  }
};

inline NaturalConfig dummy_config(int r) {
  return NaturalConfig(ProperCut({0.0, 1.0}), {1}, r);
}

// Independent oracle: existence of a perfect matching by trying every
// permutation of plates.
inline bool matching_exists_exhaustive(const std::vector<std::vector<bool>>& accept) {
  const int r = static_cast<int>(accept.size());
  std::vector<int> perm(r);
  for (int i = 0; i < r; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int j = 0; j < r && ok; ++j) ok = accept[j][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace cakecut::testing
