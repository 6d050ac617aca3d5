#pragma once

// Allocation functions, natural and auxiliary configuration points, the
// tile-length matrix identifying equivalence classes of improper
// configurations, and the projection from auxiliary to natural points.

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "cakecut/geometry.hpp"

namespace cakecut {

// Allocation of tiles to plates: alloc[i-1] is the plate (1..r) serving
// tile i. Injectivity requirements depend on the configuration kind.
using Allocation = std::vector<int>;

// A proper cut of at most r tiles plus an injective allocation.
struct NaturalConfig {
  ProperCut cut;
  Allocation alloc;
  int r;

  NaturalConfig(ProperCut c, Allocation a, int plates)
      : cut(std::move(c)), alloc(std::move(a)), r(plates) {
    if (r < 1) throw std::invalid_argument("plate count must be positive");
    if (cut.tile_count() > r) throw std::invalid_argument("more tiles than plates");
    if (static_cast<int>(alloc.size()) != cut.tile_count()) {
      throw std::invalid_argument("allocation must cover every tile exactly once");
    }
    std::vector<bool> seen(r, false);
    for (int plate : alloc) {
      if (plate < 1 || plate > r) throw std::invalid_argument("plate label out of range");
      if (seen[plate - 1]) throw std::invalid_argument("allocation must be injective");
      seen[plate - 1] = true;
    }
  }

  int plate_of_tile(int tile) const { return alloc.at(tile - 1); }

  // 0 when the plate is empty.
  int tile_of_plate(int plate) const {
    for (std::size_t i = 0; i < alloc.size(); ++i) {
      if (alloc[i] == plate) return static_cast<int>(i) + 1;
    }
    return 0;
  }

  friend bool operator==(const NaturalConfig& a, const NaturalConfig& b) {
    return a.r == b.r && a.cut == b.cut && a.alloc == b.alloc;
  }
};

// An improper cut into exactly 2r-1 tiles plus an essentially injective
// allocation: distinct non-degenerate tiles go to distinct plates, while
// degenerate tiles may share plates freely.
struct AuxConfig {
  ImproperCut cut;
  Allocation alloc;
  int r;

  AuxConfig(ImproperCut c, Allocation a, int plates)
      : cut(std::move(c)), alloc(std::move(a)), r(plates) {
    if (r < 1) throw std::invalid_argument("plate count must be positive");
    if (cut.tile_count() != 2 * r - 1) {
      throw std::invalid_argument("auxiliary cut must have exactly 2r-1 tiles");
    }
    if (static_cast<int>(alloc.size()) != cut.tile_count()) {
      throw std::invalid_argument("allocation must cover every tile exactly once");
    }
    std::vector<bool> seen(r, false);
    const auto ts = cut.tiles();
    for (int i = 0; i < cut.tile_count(); ++i) {
      int plate = alloc[i];
      if (plate < 1 || plate > r) throw std::invalid_argument("plate label out of range");
      if (ts[i].degenerate()) continue;
      if (seen[plate - 1]) {
        throw std::invalid_argument("two non-degenerate tiles share a plate");
      }
      seen[plate - 1] = true;
    }
  }

  int plate_of_tile(int tile) const { return alloc.at(tile - 1); }
};

// Tile-length matrix: n rows (tiles) by r columns (plates); the entry at
// (tile, its plate) is the tile length, everything else zero. Equal
// matrices characterize equivalent auxiliary configurations.
struct MatrixRep {
  int n = 0;
  int r = 0;
  std::vector<double> entries;  // row-major

  double at(int tile, int plate) const { return entries[(tile - 1) * r + (plate - 1)]; }

  double total() const {
    double s = 0.0;
    for (double v : entries) s += v;
    return s;
  }

  double row_sum(int tile) const {
    double s = 0.0;
    for (int p = 1; p <= r; ++p) s += at(tile, p);
    return s;
  }

  double col_sum(int plate) const {
    double s = 0.0;
    for (int t = 1; t <= n; ++t) s += at(t, plate);
    return s;
  }
};

inline MatrixRep matrix_rep(const AuxConfig& c) {
  MatrixRep m;
  m.n = c.cut.tile_count();
  m.r = c.r;
  m.entries.assign(static_cast<std::size_t>(m.n) * m.r, 0.0);
  for (const Tile& t : c.cut.tiles()) {
    if (t.degenerate()) continue;
    m.entries[(t.index - 1) * static_cast<std::size_t>(m.r) + (c.plate_of_tile(t.index) - 1)] =
        t.length();
  }
  return m;
}

inline bool equal_within(const MatrixRep& a, const MatrixRep& b, double tol = kDegenerateTol) {
  if (a.n != b.n || a.r != b.r) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (std::abs(a.entries[i] - b.entries[i]) > tol) return false;
  }
  return true;
}

// Equivalence of auxiliary configurations: same cut, allocations differing
// only on degenerate tiles. Decided through matrix equality.
inline bool equivalent(const AuxConfig& a, const AuxConfig& b) {
  if (a.r != b.r) throw std::invalid_argument("configurations have different plate counts");
  return equal_within(matrix_rep(a), matrix_rep(b));
}

// Forgets degenerate tiles: the induced proper cut keeps the allocation of
// the surviving tiles, re-indexed left to right. Constant on equivalence
// classes.
inline NaturalConfig project(const AuxConfig& c) {
  ProperCut reduced = collapse(c.cut);
  Allocation alloc;
  alloc.reserve(reduced.tile_count());
  for (const Tile& t : c.cut.tiles()) {
    if (!t.degenerate()) alloc.push_back(c.plate_of_tile(t.index));
  }
  return NaturalConfig(std::move(reduced), std::move(alloc), c.r);
}

// Membership of `probe` in the eps-neighborhood of `center`: cut points are
// Hausdorff-close and allocations agree on every pair of tiles overlapping
// by more than overlap_delta.
inline bool neighborhood_contains(const NaturalConfig& center, const NaturalConfig& probe,
                                  double eps, double overlap_delta) {
  if (center.r != probe.r) throw std::invalid_argument("configurations have different plate counts");
  if (eps <= 0.0 || eps >= center.cut.min_tile_length() / 2.0) {
    throw std::invalid_argument("eps too large for this cut");
  }
  if (overlap_delta <= eps) {
    throw std::invalid_argument("overlap_delta must exceed eps");
  }
  if (hausdorff_distance(center.cut.points(), probe.cut.points()) >= eps) return false;
  for (const Tile& j : probe.cut.tiles()) {
    for (const Tile& i : center.cut.tiles()) {
      double overlap = std::min(j.right, i.right) - std::max(j.left, i.left);
      if (overlap > overlap_delta && probe.plate_of_tile(j.index) != center.plate_of_tile(i.index)) {
        return false;
      }
    }
  }
  return true;
}

inline bool neighborhood_contains(const NaturalConfig& center, const NaturalConfig& probe,
                                  double eps) {
  return neighborhood_contains(center, probe, eps, 10.0 * eps);
}

}  // namespace cakecut
