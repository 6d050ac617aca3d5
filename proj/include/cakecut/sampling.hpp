#pragma once

// Seeded random configurations for audits and tests. Distributions are
// hand-rolled on top of mt19937_64 so equal seeds give identical samples
// on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "cakecut/config.hpp"

namespace cakecut {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return (engine_() >> 11) * 0x1.0p-53; }

  // Inclusive bounds; modulo bias is irrelevant at these ranges.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // count sorted points in (0,1), pairwise separated by at least min_gap.
  std::vector<double> sorted_interior(int count, double min_gap) {
    while (true) {
      std::vector<double> pts(count);
      for (double& x : pts) x = uniform01();
      std::sort(pts.begin(), pts.end());
      bool ok = true;
      double prev = 0.0;
      for (double x : pts) {
        ok = ok && (x - prev >= min_gap);
        prev = x;
      }
      ok = ok && (1.0 - prev >= min_gap);
      if (ok) return pts;
    }
  }

  std::vector<int> shuffled_plates(int r) {
    std::vector<int> plates(r);
    for (int i = 0; i < r; ++i) plates[i] = i + 1;
    for (int i = r - 1; i > 0; --i) std::swap(plates[i], plates[uniform_int(0, i)]);
    return plates;
  }

  NaturalConfig natural_config(int r) {
    const int k = uniform_int(1, r);
    std::vector<double> points{0.0};
    for (double x : sorted_interior(k - 1, 1e-3)) points.push_back(x);
    points.push_back(1.0);
    auto plates = shuffled_plates(r);
    Allocation alloc(plates.begin(), plates.begin() + k);
    return NaturalConfig(ProperCut(std::move(points)), std::move(alloc), r);
  }

  // Improper configuration with a random number of non-degenerate tiles in
  // random slots; degenerate tiles get arbitrary plates.
  AuxConfig aux_config(int r) {
    const int n = 2 * r - 1;
    const int live = uniform_int(1, r);

    std::vector<int> slots(n);
    for (int i = 0; i < n; ++i) slots[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(slots[i], slots[uniform_int(0, i)]);
    std::vector<bool> is_live(n, false);
    for (int i = 0; i < live; ++i) is_live[slots[i]] = true;

    const auto interior = sorted_interior(live - 1, 1e-3);
    std::vector<double> proper{0.0};
    for (double x : interior) proper.push_back(x);
    proper.push_back(1.0);

    std::vector<double> points;
    points.push_back(0.0);
    int consumed = 0;
    for (int tile = 0; tile < n; ++tile) {
      if (is_live[tile]) ++consumed;
      points.push_back(proper[consumed]);
    }

    auto plates = shuffled_plates(r);
    Allocation alloc(n, 0);
    int next_live_plate = 0;
    for (int tile = 0; tile < n; ++tile) {
      alloc[tile] = is_live[tile] ? plates[next_live_plate++] : uniform_int(1, r);
    }
    return AuxConfig(ImproperCut(std::move(points)), std::move(alloc), r);
  }

  // Equivalent representative: same cut, degenerate plates re-rolled.
  AuxConfig equivalent_representative(const AuxConfig& c) {
    Allocation alloc = c.alloc;
    const auto ts = c.cut.tiles();
    for (int tile = 0; tile < c.cut.tile_count(); ++tile) {
      if (ts[tile].degenerate()) alloc[tile] = uniform_int(1, c.r);
    }
    return AuxConfig(c.cut, std::move(alloc), c.r);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cakecut
