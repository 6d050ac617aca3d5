#pragma once

// Built-in demonstration models. The JSON strings are the canonical source;
// the files under models/ are dumps of the same data for browsing.

#include <stdexcept>
#include <string>
#include <vector>

#include "cakecut/serialization.hpp"

namespace cakecut {

struct DemoEntry {
  const char* name;
  const char* summary;
  bool negative_control;  // ships deliberately broken invariants
  const char* json;
};

inline const std::vector<DemoEntry>& demo_entries() {
  static const std::vector<DemoEntry> entries = {
      {"example-1-2",
       "seven plates, chocolate amounts (100,0,100,1,1,0,1); the best plate is empty", false,
       R"({
  "name": "example-1-2",
  "r": 7, "p": 7, "nu": 1,
  "players": [
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"-1": 1.0, "0": 1.0, "1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"-1": 1.0, "0": 1.0, "1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"-1": 1.0, "0": 1.0, "1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"-1": 1.0, "0": 1.0, "1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"-1": 1.0, "0": 1.0, "1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"-1": 1.0, "0": 1.0, "1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"-1": 1.0, "0": 1.0, "1": 1.0}, "eps_pref": 0.0}
  ],
  "reference_config": {"r": 7, "cut": [0.0, 0.25, 0.5, 0.625, 0.75, 1.0],
                       "alloc": {"1": 1, "2": 3, "3": 4, "4": 5, "5": 7}}
})"},
      {"uniform-2", "two players, uniform cake, classical halving", false,
       R"({
  "name": "uniform-2",
  "r": 2, "p": 2, "nu": 1,
  "players": [
    {"density": [[0.0,1.0,1.0]], "weights": {"0": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,1.0,1.0]], "weights": {"0": 1.0}, "eps_pref": 0.0}
  ]
})"},
      {"choco-3", "three players, chocolate-style lumpy densities, full neighbor window", false,
       R"({
  "name": "choco-3",
  "r": 3, "p": 3, "nu": 1,
  "players": [
    {"density": [[0.0,0.25,2.0],[0.25,0.5,0.5],[0.5,0.75,1.0],[0.75,1.0,0.5]],
     "weights": {"-1": 1.0, "0": 1.0, "1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,0.5],[0.25,0.5,2.0],[0.5,0.75,0.5],[0.75,1.0,1.0]],
     "weights": {"-1": 1.0, "0": 1.0, "1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,1.0,1.0]],
     "weights": {"-1": 1.0, "0": 1.0, "1": 1.0}, "eps_pref": 0.0}
  ]
})"},
      {"window-3", "three players who also value the next plate clockwise", false,
       R"({
  "name": "window-3",
  "r": 3, "p": 3, "nu": 1,
  "players": [
    {"density": [[0.0,0.25,2.0],[0.25,0.5,0.5],[0.5,0.75,1.0],[0.75,1.0,0.5]],
     "weights": {"0": 1.0, "1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,0.5],[0.25,0.5,2.0],[0.5,0.75,0.5],[0.75,1.0,1.0]],
     "weights": {"0": 1.0, "1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,1.0,1.0]],
     "weights": {"0": 1.0, "1": 1.0}, "eps_pref": 0.0}
  ]
})"},
      {"weighted-7", "seven plates scored by 3*own - next + previous", false,
       R"({
  "name": "weighted-7",
  "r": 7, "p": 7, "nu": 1,
  "players": [
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": 1.0}, "eps_pref": 0.0}
  ]
})"},
      {"weighted-7-sym", "symmetric variant: 3*own - next - previous", false,
       R"({
  "name": "weighted-7-sym",
  "r": 7, "p": 7, "nu": 1,
  "players": [
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": -1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": -1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": -1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": -1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": -1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": -1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.25,400.0],[0.25,0.5,400.0],[0.5,0.625,8.0],[0.625,0.75,8.0],[0.75,1.0,4.0]],
     "weights": {"0": 3.0, "1": -1.0, "-1": -1.0}, "eps_pref": 0.0}
  ]
})"},
      {"tables-4", "two tables of two plates; players cooperate with their table neighbor", false,
       R"({
  "name": "tables-4",
  "r": 4, "p": 2, "nu": 2,
  "players": [
    {"density": [[0.0,0.25,2.0],[0.25,1.0,0.5]],
     "weights": {"0,0": 1.0, "0,1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.5,0.5],[0.5,0.75,2.0],[0.75,1.0,1.0]],
     "weights": {"0,0": 1.0, "0,1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.5,1.25],[0.5,1.0,0.75]],
     "weights": {"0,0": 1.0, "0,1": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,1.0,1.0]],
     "weights": {"0,0": 1.0, "0,1": 1.0}, "eps_pref": 0.0}
  ]
})"},
      {"broken-plate-bonus", "negative control: a bonus glued to plate 1 breaks equivariance", true,
       R"({
  "name": "broken-plate-bonus",
  "r": 3, "p": 3, "nu": 1,
  "players": [
    {"density": [[0.0,0.5,1.5],[0.5,1.0,0.5]],
     "weights": {"0": 1.0}, "eps_pref": 0.0, "plate_bias": [5.0, 0.0, 0.0]},
    {"density": [[0.0,1.0,1.0]], "weights": {"0": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,1.0,1.0]], "weights": {"0": 1.0}, "eps_pref": 0.0}
  ]
})"},
      {"dragon-piece-2", "one player, two plates; a greedy agent grabs a plate first", false,
       R"({
  "name": "dragon-piece-2",
  "r": 2, "p": 2, "nu": 1,
  "players": [
    {"density": [[0.0,1.0,1.0]], "weights": {"0": 1.0}, "eps_pref": 0.0}
  ]
})"},
      {"dragon-piece-3", "two players, three plates; a greedy agent grabs a plate first", false,
       R"({
  "name": "dragon-piece-3",
  "r": 3, "p": 3, "nu": 1,
  "players": [
    {"density": [[0.0,0.5,1.25],[0.5,1.0,0.75]], "weights": {"0": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.5,0.75],[0.5,1.0,1.25]], "weights": {"0": 1.0}, "eps_pref": 0.0}
  ]
})"},
      {"dragon-player-2", "three players, two plates; one player is removed after cutting", false,
       R"({
  "name": "dragon-player-2",
  "r": 2, "p": 2, "nu": 1,
  "players": [
    {"density": [[0.0,1.0,1.0]], "weights": {"0": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,1.0,1.0]], "weights": {"0": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.5,0.5],[0.5,1.0,1.5]], "weights": {"0": 1.0}, "eps_pref": 0.0}
  ]
})"},
      {"dragon-player-3", "four players, three plates; one player is removed after cutting", false,
       R"({
  "name": "dragon-player-3",
  "r": 3, "p": 3, "nu": 1,
  "players": [
    {"density": [[0.0,1.0,1.0]], "weights": {"0": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,1.0,1.0]], "weights": {"0": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.5,1.125],[0.5,1.0,0.875]], "weights": {"0": 1.0}, "eps_pref": 0.0},
    {"density": [[0.0,0.5,0.875],[0.5,1.0,1.125]], "weights": {"0": 1.0}, "eps_pref": 0.0}
  ]
})"}};
  return entries;
}

inline const DemoEntry& find_demo(const std::string& name) {
  for (const auto& d : demo_entries()) {
    if (name == d.name) return d;
  }
  throw std::runtime_error("unknown demo model '" + name + "'");
}

inline ModelFile load_demo(const std::string& name) {
  return model_from_string(find_demo(name).json);
}

}  // namespace cakecut
