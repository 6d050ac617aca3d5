#pragma once

// JSON formats for configurations, preference models, certificates and
// reports. Everything is plain JSON with sorted object keys, so equal
// values serialize to identical bytes.

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cakecut/chess.hpp"
#include "cakecut/solver.hpp"

namespace cakecut {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Configurations: {"r": int, "cut": [floats], "alloc": {"tile": plate}}

inline json config_to_json(const NaturalConfig& c) {
  json alloc = json::object();
  for (int i = 1; i <= c.cut.tile_count(); ++i) {
    alloc[std::to_string(i)] = c.plate_of_tile(i);
  }
  return json{{"r", c.r}, {"cut", c.cut.points()}, {"alloc", alloc}};
}

inline json config_to_json(const AuxConfig& c) {
  json alloc = json::object();
  for (int i = 1; i <= c.cut.tile_count(); ++i) {
    alloc[std::to_string(i)] = c.plate_of_tile(i);
  }
  return json{{"r", c.r}, {"cut", c.cut.points()}, {"alloc", alloc}};
}

namespace detail {

inline std::pair<std::vector<double>, Allocation> cut_alloc_from_json(const json& j,
                                                                      const char* what) {
  if (!j.contains("r") || !j.contains("cut") || !j.contains("alloc")) {
    throw std::runtime_error(std::string(what) + ": needs fields r, cut, alloc");
  }
  std::vector<double> points = j.at("cut").get<std::vector<double>>();
  const auto& alloc_obj = j.at("alloc");
  Allocation alloc(points.empty() ? 0 : points.size() - 1, 0);
  if (alloc_obj.size() != alloc.size()) {
    throw std::runtime_error(std::string(what) + ": alloc must assign every tile");
  }
  for (auto it = alloc_obj.begin(); it != alloc_obj.end(); ++it) {
    int tile = std::stoi(it.key());
    if (tile < 1 || tile > static_cast<int>(alloc.size())) {
      throw std::runtime_error(std::string(what) + ": tile index " + it.key() + " out of range");
    }
    alloc[tile - 1] = it.value().get<int>();
  }
  return {std::move(points), std::move(alloc)};
}

}  // namespace detail

inline NaturalConfig natural_config_from_json(const json& j) {
  auto [points, alloc] = detail::cut_alloc_from_json(j, "configuration");
  return NaturalConfig(ProperCut(std::move(points)), std::move(alloc), j.at("r").get<int>());
}

inline AuxConfig aux_config_from_json(const json& j) {
  auto [points, alloc] = detail::cut_alloc_from_json(j, "configuration");
  return AuxConfig(ImproperCut(std::move(points)), std::move(alloc), j.at("r").get<int>());
}

// ---------------------------------------------------------------------------
// Models

struct ModelFile {
  std::string name;
  ScoreOracle oracle;
  std::optional<NaturalConfig> reference;  // pinned example configuration
  std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<int> parse_offset_key(const std::string& key, int nu) {
  std::vector<int> digits;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) digits.push_back(std::stoi(part));
  if (static_cast<int>(digits.size()) != nu) {
    throw std::runtime_error("weights: offset '" + key + "' needs " + std::to_string(nu) +
                             " comma-separated digits");
  }
  return digits;
}

}  // namespace detail

inline ModelFile model_from_json(const json& j) {
  for (const char* field : {"r", "p", "nu", "players"}) {
    if (!j.contains(field)) {
      throw std::runtime_error(std::string("model: missing field '") + field + "'");
    }
  }
  const int r = j.at("r").get<int>();
  const int p = j.at("p").get<int>();
  const int nu = j.at("nu").get<int>();

  std::vector<std::string> warnings;
  bool prime = detail::is_prime(p);
  if (!prime && nu != 1) {
    throw std::runtime_error("model: composite p requires nu = 1 (cyclic structure)");
  }
  long long expect = 1;
  for (int i = 0; i < nu; ++i) expect *= p;
  if (expect != r) throw std::runtime_error("model: r must equal p^nu");
  if (!prime) {
    warnings.push_back("r = " + std::to_string(r) +
                       " is not a prime power; no existence guarantee applies");
  }
  PToralGroup group(p, nu, /*require_prime=*/false);

  std::vector<PlayerModel> players;
  int index = 0;
  for (const auto& pj : j.at("players")) {
    const std::string where = "model: players[" + std::to_string(index) + "]";
    if (!pj.contains("density") || !pj.contains("weights")) {
      throw std::runtime_error(where + ": needs density and weights");
    }
    std::vector<DensityPiece> pieces;
    for (const auto& triple : pj.at("density")) {
      if (!triple.is_array() || triple.size() != 3) {
        throw std::runtime_error(where + ".density: each piece is [begin, end, value]");
      }
      pieces.push_back(DensityPiece{triple[0].get<double>(), triple[1].get<double>(),
                                    triple[2].get<double>()});
    }
    std::vector<std::pair<std::vector<int>, double>> raw;
    for (auto it = pj.at("weights").begin(); it != pj.at("weights").end(); ++it) {
      raw.push_back({detail::parse_offset_key(it.key(), nu), it.value().get<double>()});
    }
    PlayerModel pm{Density(std::move(pieces)), NeighborWeights::from_offsets(group, raw)};
    if (pj.contains("eps_pref")) pm.eps_pref = pj.at("eps_pref").get<double>();
    if (pj.contains("empty_value")) pm.empty_value = pj.at("empty_value").get<double>();
    if (pj.contains("plate_bias")) {
      pm.plate_bias = pj.at("plate_bias").get<std::vector<double>>();
    }
    players.push_back(std::move(pm));
    ++index;
  }

  ModelFile out{j.value("name", std::string{}), ScoreOracle(group, std::move(players)),
                std::nullopt, std::move(warnings)};
  if (j.contains("reference_config")) {
    out.reference = natural_config_from_json(j.at("reference_config"));
  }
  return out;
}

inline ModelFile model_from_string(const std::string& text) {
  return model_from_json(json::parse(text));
}

// ---------------------------------------------------------------------------
// Certificates

inline json certificate_to_json(const EnvyFreeCertificate& c) {
  return json{{"kind", "envyfree"},
              {"config", config_to_json(c.config)},
              {"sigma", c.sigma},
              {"eps", c.eps},
              {"margins", c.margins},
              {"potential", c.potential}};
}

namespace detail {

inline json edges_to_json(const std::vector<std::array<int, 2>>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back(json::array({e[0], e[1]}));
  return out;
}

inline json edge_margins_to_json(const std::vector<std::array<double, 2>>& margins) {
  json out = json::array();
  for (const auto& m : margins) out.push_back(json::array({m[0], m[1]}));
  return out;
}

inline std::vector<std::array<int, 2>> edges_from_json(const json& j) {
  std::vector<std::array<int, 2>> out;
  for (const auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return out;
}

inline std::vector<std::array<double, 2>> edge_margins_from_json(const json& j) {
  std::vector<std::array<double, 2>> out;
  for (const auto& e : j) out.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
  return out;
}

}  // namespace detail

inline json certificate_to_json(const TreeCertificatePlates& c) {
  return json{{"kind", "dragon-plates"},
              {"config", config_to_json(c.config)},
              {"edges", detail::edges_to_json(c.edges)},
              {"eps", c.eps},
              {"margins", detail::edge_margins_to_json(c.margins)},
              {"potential", c.potential}};
}

inline json certificate_to_json(const TreeCertificatePlayers& c) {
  return json{{"kind", "dragon-players"},
              {"config", config_to_json(c.config)},
              {"edges", detail::edges_to_json(c.edges)},
              {"eps", c.eps},
              {"margins", detail::edge_margins_to_json(c.margins)},
              {"potential", c.potential}};
}

using AnyCertificate =
    std::variant<EnvyFreeCertificate, TreeCertificatePlates, TreeCertificatePlayers>;

inline AnyCertificate certificate_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  NaturalConfig config = natural_config_from_json(j.at("config"));
  const double eps = j.at("eps").get<double>();
  const double potential = j.value("potential", 0.0);
  if (kind == "envyfree") {
    return EnvyFreeCertificate{std::move(config), j.at("sigma").get<std::vector<int>>(), eps,
                               j.at("margins").get<std::vector<double>>(), potential};
  }
  if (kind == "dragon-plates") {
    return TreeCertificatePlates{std::move(config), detail::edges_from_json(j.at("edges")), eps,
                                 detail::edge_margins_from_json(j.at("margins")), potential};
  }
  if (kind == "dragon-players") {
    return TreeCertificatePlayers{std::move(config), detail::edges_from_json(j.at("edges")), eps,
                                  detail::edge_margins_from_json(j.at("margins")), potential};
  }
  throw std::runtime_error("certificate: unknown kind '" + kind + "'");
}

inline VerifyReport verify_any(const AnyCertificate& cert, const ScoreOracle& oracle) {
  return std::visit([&](const auto& c) { return verify_certificate(c, oracle); }, cert);
}

// ---------------------------------------------------------------------------
// Reports

inline json audit_report_to_json(const std::vector<EquivarianceViolation>& violations,
                                 int samples) {
  json list = json::array();
  for (const auto& v : violations) {
    list.push_back(json{{"sample", v.sample}, {"player", v.player}, {"plate", v.plate},
                        {"g", v.g}});
  }
  return json{{"samples", samples}, {"pass", violations.empty()}, {"violations", list}};
}

inline json chess_report_to_json(const ChessComplex& board,
                                 const std::vector<HomologySummary>& homology) {
  json faces = json::array();
  json betti = json::array();
  json torsion = json::array();
  for (const auto& h : homology) {
    faces.push_back(face_count_formula(board, h.dim + 1));
    betti.push_back(h.betti);
    torsion.push_back(h.torsion);
  }
  // Reduced homology is expected to vanish below the top dimension once the
  // board is wide enough (n >= 2m-1).
  const bool applies = board.n >= 2 * board.m - 1;
  json degrees = json::array();
  bool ok = true;
  if (applies) {
    for (int d = 0; d + 1 <= board.m - 1; ++d) {
      degrees.push_back(d);
      if (d < static_cast<int>(homology.size()) &&
          (homology[d].betti != 0 || homology[d].torsion)) {
        ok = false;
      }
    }
  }
  return json{{"m", board.m},
              {"n", board.n},
              {"faces", faces},
              {"betti", betti},
              {"torsion", torsion},
              {"vanishing", json{{"applies", applies}, {"degrees", degrees}, {"ok", ok}}}};
}

inline json verify_report_to_json(const VerifyReport& report) {
  return json{{"pass", report.pass}, {"failures", report.failures}, {"margins", report.margins}};
}

}  // namespace cakecut
