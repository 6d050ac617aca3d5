#pragma once

// Cuts of the unit interval, their tiles, the Hausdorff metric on finite
// point sets, and the essential-tile matcher used to probe convergence of
// cut sequences.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cakecut {

// Comparison tolerance for degeneracy checks on cut coordinates.
inline constexpr double kDegenerateTol = 1e-12;

struct Tile {
  double left = 0.0;
  double right = 0.0;
  int index = 0;  // 1-based, numbered left to right

  double length() const { return right - left; }
  bool degenerate() const { return length() <= kDegenerateTol; }
};

inline bool operator==(const Tile& a, const Tile& b) {
  return a.left == b.left && a.right == b.right && a.index == b.index;
}

namespace detail {

inline std::vector<Tile> tiles_of_points(const std::vector<double>& pts) {
  std::vector<Tile> out;
  out.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    out.push_back(Tile{pts[i - 1], pts[i], static_cast<int>(i)});
  }
  return out;
}

inline void check_endpoints(const std::vector<double>& pts, const char* kind) {
  if (pts.size() < 2) {
    throw std::invalid_argument(std::string(kind) + " needs at least two points");
  }
  if (pts.front() != 0.0 || pts.back() != 1.0) {
    throw std::invalid_argument(std::string(kind) + " must start at 0 and end at 1");
  }
}

}  // namespace detail

// Strictly increasing cut points 0 = x_0 < ... < x_k = 1. Every tile is
// non-degenerate; gaps at or below kDegenerateTol are rejected.
class ProperCut {
 public:
  explicit ProperCut(std::vector<double> points) : points_(std::move(points)) {
    detail::check_endpoints(points_, "proper cut");
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (points_[i] - points_[i - 1] <= kDegenerateTol) {
        throw std::invalid_argument("proper cut points must be strictly increasing");
      }
    }
  }

  // max_tiles is the plate count r of the surrounding context.
  ProperCut(std::vector<double> points, int max_tiles) : ProperCut(std::move(points)) {
    if (tile_count() > max_tiles) {
      throw std::invalid_argument("proper cut has more tiles than allowed");
    }
  }

  const std::vector<double>& points() const { return points_; }
  int tile_count() const { return static_cast<int>(points_.size()) - 1; }
  std::vector<Tile> tiles() const { return detail::tiles_of_points(points_); }

  double min_tile_length() const {
    double m = 1.0;
    for (std::size_t i = 1; i < points_.size(); ++i) {
      m = std::min(m, points_[i] - points_[i - 1]);
    }
    return m;
  }

  friend bool operator==(const ProperCut& a, const ProperCut& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<double> points_;
};

// Non-decreasing cut points 0 = x_0 <= ... <= x_n = 1; tiles may be
// degenerate. The tile count n is fixed by the point sequence.
class ImproperCut {
 public:
  explicit ImproperCut(std::vector<double> points) : points_(std::move(points)) {
    detail::check_endpoints(points_, "improper cut");
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (points_[i] < points_[i - 1]) {
        throw std::invalid_argument("improper cut points must be non-decreasing");
      }
    }
  }

  const std::vector<double>& points() const { return points_; }
  int tile_count() const { return static_cast<int>(points_.size()) - 1; }
  std::vector<Tile> tiles() const { return detail::tiles_of_points(points_); }

  friend bool operator==(const ImproperCut& a, const ImproperCut& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<double> points_;
};

// Two-sided sup-min distance between finite point sets.
inline double hausdorff_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("empty set has no Hausdorff distance");
  }
  auto one_sided = [](const std::vector<double>& from, const std::vector<double>& to) {
    double worst = 0.0;
    for (double x : from) {
      double nearest = std::abs(x - to.front());
      for (double y : to) nearest = std::min(nearest, std::abs(x - y));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

// Drops degenerate tiles: the resulting proper cut keeps the distinct points
// of the input. Total length 1 guarantees at least one tile survives.
inline ProperCut collapse(const ImproperCut& cut) {
  std::vector<double> kept;
  kept.reserve(cut.points().size());
  kept.push_back(0.0);
  const auto& pts = cut.points();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (pts[i] - kept.back() > kDegenerateTol) kept.push_back(pts[i]);
  }
  if (1.0 - kept.back() > kDegenerateTol) {
    kept.push_back(1.0);
  } else {
    kept.back() = 1.0;  // merge a near-1 point into the right endpoint
  }
  return ProperCut(std::move(kept));
}

// Matches each tile of `limit` with the unique tile of `approx` whose
// endpoints lie within eps; all unmatched approx tiles must be short
// (< 2*eps). Returns the mapping limit-tile-index -> approx-tile-index,
// or nullopt when no such matching exists.
inline std::optional<std::map<int, int>> match_essential_tiles(const std::vector<Tile>& approx,
                                                               const ProperCut& limit,
                                                               double eps) {
  if (eps <= 0.0) {
    throw std::invalid_argument("essential-tile matching needs eps > 0");
  }
  if (eps >= limit.min_tile_length() / 2.0) {
    throw std::invalid_argument("eps must be below half the minimal tile length of the limit cut");
  }

  std::map<int, int> mapping;
  std::vector<bool> used(approx.size(), false);
  for (const Tile& target : limit.tiles()) {
    int found = -1;
    for (const Tile& cand : approx) {
      if (std::abs(cand.left - target.left) < eps && std::abs(cand.right - target.right) < eps) {
        if (found != -1) return std::nullopt;  // ambiguous
        found = cand.index;
      }
    }
    if (found == -1 || used[found - 1]) return std::nullopt;
    used[found - 1] = true;
    mapping[target.index] = found;
  }
  for (const Tile& cand : approx) {
    if (!used[cand.index - 1] && cand.length() >= 2.0 * eps) return std::nullopt;
  }
  return mapping;
}

inline std::optional<std::map<int, int>> match_essential_tiles(const ProperCut& approx,
                                                               const ProperCut& limit,
                                                               double eps) {
  return match_essential_tiles(approx.tiles(), limit, eps);
}

inline std::optional<std::map<int, int>> match_essential_tiles(const ImproperCut& approx,
                                                               const ProperCut& limit,
                                                               double eps) {
  return match_essential_tiles(approx.tiles(), limit, eps);
}

}  // namespace cakecut
