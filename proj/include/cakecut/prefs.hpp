#pragma once

// Preference oracles and the concrete cooperative score models: integral
// evaluations over piecewise-constant densities, neighbor-weighted plate
// scores, eps-argmax preferred sets, and the pullback to auxiliary
// configurations.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cakecut/symmetry.hpp"

namespace cakecut {

struct DensityPiece {
  double begin = 0.0;
  double end = 1.0;
  double value = 0.0;
};

// Piecewise-constant ingredient density on [0,1). Segment values are exact
// sums of value * overlap, evaluated through the cumulative integral so
// that abutting segments add up exactly.
class Density {
 public:
  explicit Density(std::vector<DensityPiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("density needs at least one piece");
    if (pieces_.front().begin != 0.0 || pieces_.back().end != 1.0) {
      throw std::invalid_argument("density pieces must cover [0,1)");
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const auto& p = pieces_[i];
      if (!(p.begin < p.end)) throw std::invalid_argument("density piece has no width");
      if (p.value < 0.0 || !std::isfinite(p.value)) {
        throw std::invalid_argument("density values must be finite and non-negative");
      }
      if (i > 0 && pieces_[i - 1].end != p.begin) {
        throw std::invalid_argument("density pieces must abut");
      }
    }
    prefix_.resize(pieces_.size() + 1, 0.0);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      prefix_[i + 1] = prefix_[i] + pieces_[i].value * (pieces_[i].end - pieces_[i].begin);
    }
  }

  static Density uniform(double value = 1.0) {
    return Density({DensityPiece{0.0, 1.0, value}});
  }

  const std::vector<DensityPiece>& pieces() const { return pieces_; }

  double max_value() const {
    double m = 0.0;
    for (const auto& p : pieces_) m = std::max(m, p.value);
    return m;
  }

  // Cumulative integral over [0, x].
  double cumulative(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return prefix_.back();
    std::size_t lo = 0, hi = pieces_.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (pieces_[mid].begin <= x) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return prefix_[lo] + pieces_[lo].value * (x - pieces_[lo].begin);
  }

  double integral(double a, double b) const {
    if (a > b) throw std::invalid_argument("segment endpoints out of order");
    if (a < 0.0 || b > 1.0) throw std::invalid_argument("segment must lie in [0,1]");
    return cumulative(b) - cumulative(a);
  }

 private:
  std::vector<DensityPiece> pieces_;
  std::vector<double> prefix_;
};

// Value a player assigns to a segment of the cake: the density integral.
// Degenerate segments are worth exactly 0.
inline double segment_value(const Density& d, double a, double b) {
  if (a == b) return 0.0;
  return d.integral(a, b);
}

// Cooperation pattern: weighted plate offsets expressed as group elements,
// so the induced neighbor structure is invariant under the plate action.
struct NeighborWeights {
  // Sorted by group-element index for deterministic evaluation order.
  std::vector<std::pair<PToralGroup::Element, double>> terms;

  static NeighborWeights from_offsets(const PToralGroup& g,
                                      const std::vector<std::pair<std::vector<int>, double>>& raw) {
    NeighborWeights w;
    for (const auto& [digits, weight] : raw) {
      w.terms.emplace_back(g.reduce(digits), weight);
    }
    std::sort(w.terms.begin(), w.terms.end(),
              [&g](const auto& a, const auto& b) { return g.index_of(a.first) < g.index_of(b.first); });
    bool any = false;
    for (const auto& [digits, weight] : w.terms) any = any || weight != 0.0;
    if (!any) throw std::invalid_argument("neighbor weights need at least one non-zero term");
    return w;
  }

  // Cyclic shorthand for nu = 1: offsets are plain integers.
  static NeighborWeights cyclic(const PToralGroup& g,
                                const std::vector<std::pair<int, double>>& raw) {
    std::vector<std::pair<std::vector<int>, double>> lifted;
    lifted.reserve(raw.size());
    for (const auto& [offset, weight] : raw) {
      lifted.push_back({std::vector<int>{offset}, weight});
    }
    return from_offsets(g, lifted);
  }

  double abs_sum() const {
    double s = 0.0;
    for (const auto& [digits, weight] : terms) s += std::abs(weight);
    return s;
  }
};

// Acceptance decision for (configuration, player, plate) triples.
class PreferenceOracle {
 public:
  virtual ~PreferenceOracle() = default;
  virtual int plate_count() const = 0;
  virtual int player_count() const = 0;
  virtual bool prefers(const NaturalConfig& c, int player, int plate) const = 0;
};

struct PlayerModel {
  Density density;
  NeighborWeights weights;
  double eps_pref = 0.0;
  // Constant value of degenerate segments; added to every plate so the
  // evaluation stays continuous when a tile shrinks to a point.
  double empty_value = 0.0;
  // Per-plate additive bias, 1-based; non-empty bias breaks equivariance
  // and exists for negative-control models.
  std::vector<double> plate_bias;
};

// Score-based cooperative preferences: player j accepts plate i when
//   s_j(c, i) >= max_i' s_j(c, i') - eps_pref,
// with s_j(c, i) = sum over offsets o of w_j(o) * f_j(content of plate o+i).
class ScoreOracle : public PreferenceOracle {
 public:
  ScoreOracle(PToralGroup group, std::vector<PlayerModel> players)
      : group_(std::move(group)), players_(std::move(players)) {
    if (players_.empty()) throw std::invalid_argument("oracle needs at least one player");
    for (const auto& pl : players_) {
      if (pl.eps_pref < 0.0) throw std::invalid_argument("eps_pref must be non-negative");
      if (!pl.plate_bias.empty() && static_cast<int>(pl.plate_bias.size()) != group_.order()) {
        throw std::invalid_argument("plate bias must list every plate");
      }
    }
  }

  const PToralGroup& group() const { return group_; }
  const std::vector<PlayerModel>& players() const { return players_; }

  int plate_count() const override { return group_.order(); }
  int player_count() const override { return static_cast<int>(players_.size()); }

  // Scores of every plate for one player, including empty plates.
  std::vector<double> plate_scores(const NaturalConfig& c, int player) const {
    check_config(c);
    const PlayerModel& pl = player_model(player);
    const int r = group_.order();

    std::vector<double> plate_value(r, pl.empty_value);
    for (const Tile& t : c.cut.tiles()) {
      plate_value[c.plate_of_tile(t.index) - 1] += segment_value(pl.density, t.left, t.right);
    }

    std::vector<double> scores(r, 0.0);
    for (int i = 1; i <= r; ++i) {
      double s = pl.plate_bias.empty() ? 0.0 : pl.plate_bias[i - 1];
      for (const auto& [offset, weight] : pl.weights.terms) {
        s += weight * plate_value[group_.act(offset, i) - 1];
      }
      scores[i - 1] = s;
    }
    return scores;
  }

  bool prefers(const NaturalConfig& c, int player, int plate) const override {
    if (plate < 1 || plate > group_.order()) throw std::invalid_argument("plate out of range");
    const double eps = player_model(player).eps_pref;
    if (std::isinf(eps)) return true;
    const auto scores = plate_scores(c, player);
    const double best = *std::max_element(scores.begin(), scores.end());
    return scores[plate - 1] >= best - eps;
  }

  // Gap between each plate's score and the player's best plate (>= 0).
  std::vector<double> score_deficits(const NaturalConfig& c, int player) const {
    auto scores = plate_scores(c, player);
    const double best = *std::max_element(scores.begin(), scores.end());
    for (double& s : scores) s = best - s;
    return scores;
  }

  const PlayerModel& player_model(int player) const {
    if (player < 1 || player > player_count()) throw std::invalid_argument("player out of range");
    return players_[player - 1];
  }

 private:
  void check_config(const NaturalConfig& c) const {
    if (c.r != group_.order()) throw std::invalid_argument("configuration plate count differs from model");
  }

  PToralGroup group_;
  std::vector<PlayerModel> players_;
};

// Moving one cut point by delta changes every plate score of this player by
// at most lipschitz_bound * delta: a cut point borders two tiles, each
// changing by at most max-density * delta.
inline double lipschitz_bound(const ScoreOracle& o, int player) {
  const PlayerModel& pl = o.player_model(player);
  return 2.0 * pl.density.max_value() * pl.weights.abs_sum();
}

// Preferences on auxiliary configurations obtained by projecting first.
// Equivalent configurations receive identical answers since projection is
// constant on equivalence classes.
class PullbackOracle {
 public:
  explicit PullbackOracle(const PreferenceOracle& base) : base_(base) {}

  int plate_count() const { return base_.plate_count(); }
  int player_count() const { return base_.player_count(); }

  bool prefers(const AuxConfig& c, int player, int plate) const {
    return base_.prefers(project(c), player, plate);
  }

 private:
  const PreferenceOracle& base_;
};

}  // namespace cakecut
