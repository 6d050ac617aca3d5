#include <catch2/catch_amalgamated.hpp>

#include "cakecut/serialization.hpp"
#include "support/helpers.hpp"

using namespace cakecut;

namespace {

AuxConfig half_split(Allocation alloc) {
  return AuxConfig(ImproperCut({0.0, 0.5, 0.5, 1.0}), std::move(alloc), 2);
}

}  // namespace

TEST_CASE("matrix representation of auxiliary configurations") {
  const auto m = matrix_rep(half_split({1, 2, 2}));
  CHECK(m.n == 3);
  CHECK(m.r == 2);
  CHECK(m.at(1, 1) == 0.5);
  CHECK(m.at(1, 2) == 0.0);
  CHECK(m.at(2, 1) == 0.0);
  CHECK(m.at(2, 2) == 0.0);
  CHECK(m.at(3, 1) == 0.0);
  CHECK(m.at(3, 2) == 0.5);

  // Degenerate tile 2 contributes nothing, so another plate choice for it
  // yields the same matrix.
  CHECK(equal_within(matrix_rep(half_split({1, 1, 2})), m));

  const auto whole = matrix_rep(AuxConfig(ImproperCut({0.0, 1.0}), {1}, 1));
  CHECK(whole.n == 1);
  CHECK(whole.r == 1);
  CHECK(whole.at(1, 1) == 1.0);
}

TEST_CASE("matrix sums mirror tile lengths and plate masses") {
  Sampler rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = rng.uniform_int(1, 4);
    auto aux = rng.aux_config(r);
    auto m = matrix_rep(aux);
    CHECK(std::abs(m.total() - 1.0) <= 1e-9);
    const auto tiles = aux.cut.tiles();
    for (const Tile& t : tiles) {
      const double expected = t.degenerate() ? 0.0 : t.length();
      CHECK(m.row_sum(t.index) == expected);
    }
    for (int plate = 1; plate <= r; ++plate) {
      double mass = 0.0;
      for (const Tile& t : tiles) {
        if (!t.degenerate() && aux.plate_of_tile(t.index) == plate) mass += t.length();
      }
      CHECK(m.col_sum(plate) == mass);
    }
  }
}

TEST_CASE("equivalence of auxiliary configurations") {
  const auto a = half_split({1, 2, 2});
  CHECK(equivalent(a, a));
  CHECK(equivalent(a, half_split({1, 1, 2})));
  CHECK(!equivalent(a, half_split({2, 2, 1})));
  const AuxConfig other_r(ImproperCut({0.0, 1.0}), {1}, 1);
  CHECK_THROWS(equivalent(a, other_r));
}

TEST_CASE("essential injectivity is enforced") {
  CHECK_THROWS(half_split({1, 2, 1}));          // two non-degenerate tiles on plate 1
  CHECK_NOTHROW(half_split({1, 1, 2}));         // degenerate tile may share
  CHECK_THROWS(AuxConfig(ImproperCut({0.0, 0.0, 1.0}), {2, 1}, 2));  // n != 2r-1
}

TEST_CASE("projection forgets degenerate tiles") {
  const auto projected = project(half_split({1, 1, 2}));
  CHECK(projected.cut == ProperCut({0.0, 0.5, 1.0}));
  CHECK(projected.alloc == Allocation{1, 2});
  CHECK(projected.r == 2);

  // No degenerate tiles (possible only at r = 1): projection is the
  // identity on the data.
  const AuxConfig clean(ImproperCut({0.0, 1.0}), {1}, 1);
  const auto same = project(clean);
  CHECK(same.cut.points() == clean.cut.points());
  CHECK(same.alloc == clean.alloc);
}

TEST_CASE("projection is constant on equivalence classes") {
  Sampler rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = rng.uniform_int(2, 4);
    auto aux = rng.aux_config(r);
    auto other = rng.equivalent_representative(aux);
    REQUIRE(equivalent(aux, other));
    CHECK(project(aux) == project(other));
  }
}

TEST_CASE("projection is surjective via left-padding") {
  Sampler rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = rng.uniform_int(1, 5);
    auto natural = rng.natural_config(r);
    auto padded = testing::pad_natural(natural);
    CHECK(project(padded) == natural);
  }
}

TEST_CASE("projection probe: matrix convergence gives configuration convergence") {
  // Limit: two live tiles on plates 1 and 2, three degenerate tiles.
  const AuxConfig limit(ImproperCut({0.0, 0.0, 0.4, 0.4, 0.4, 1.0}), {2, 1, 3, 3, 2}, 3);
  const auto p_limit = project(limit);
  const double eps = 0.01;
  auto prev_gap = std::numeric_limits<double>::infinity();
  for (int t = 8; t <= 40; t += 8) {
    const double delta = std::ldexp(1.0, -t);  // 2^-t
    const AuxConfig approx(ImproperCut({0.0, 0.0, 0.4, 0.4 + delta, 0.4 + delta, 1.0}),
                           {2, 1, 3, 3, 2}, 3);
    // Entrywise matrix convergence.
    double gap = 0.0;
    const auto ma = matrix_rep(approx), ml = matrix_rep(limit);
    for (std::size_t i = 0; i < ma.entries.size(); ++i) {
      gap = std::max(gap, std::abs(ma.entries[i] - ml.entries[i]));
    }
    CHECK(gap < prev_gap);
    prev_gap = gap;

    // The projected sequence converges: cuts are Hausdorff-close, essential
    // tiles match, and allocations agree on them.
    const auto p = project(approx);
    CHECK(hausdorff_distance(p.cut.points(), p_limit.cut.points()) <= delta);
    auto matched = match_essential_tiles(p.cut, p_limit.cut, eps);
    REQUIRE(matched.has_value());
    for (const auto& [limit_tile, approx_tile] : *matched) {
      CHECK(p.plate_of_tile(approx_tile) == p_limit.plate_of_tile(limit_tile));
    }
  }
}

TEST_CASE("neighborhood membership") {
  const NaturalConfig center(ProperCut({0.0, 0.5, 1.0}), {1, 2}, 2);
  CHECK(neighborhood_contains(center, center, 0.02, 0.1));
  const NaturalConfig near(ProperCut({0.0, 0.49, 1.0}), {1, 2}, 2);
  CHECK(neighborhood_contains(center, near, 0.02, 0.1));
  const NaturalConfig swapped(ProperCut({0.0, 0.49, 1.0}), {2, 1}, 2);
  CHECK(!neighborhood_contains(center, swapped, 0.02, 0.1));
  const NaturalConfig far(ProperCut({0.0, 0.4, 1.0}), {1, 2}, 2);
  CHECK(!neighborhood_contains(center, far, 0.02, 0.1));

  CHECK_THROWS_WITH(neighborhood_contains(center, near, 0.3, 3.1),
                    "eps too large for this cut");
  CHECK_THROWS(neighborhood_contains(center, near, 0.02, 0.01));  // delta must exceed eps
}

TEST_CASE("configuration JSON round trip") {
  Sampler rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = rng.uniform_int(1, 5);
    auto natural = rng.natural_config(r);
    CHECK(natural_config_from_json(config_to_json(natural)) == natural);
    auto aux = rng.aux_config(std::max(2, r));
    auto back = aux_config_from_json(config_to_json(aux));
    CHECK(back.cut == aux.cut);
    CHECK(back.alloc == aux.alloc);
  }
}
