#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cakecut/demos.hpp"

namespace fs = std::filesystem;
using cakecut::json;

namespace {

const std::string kCli = CAKECUT_CLI_PATH;

int run(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = kCli + " " + args;
  if (!stdout_file.empty()) cmd += " > " + stdout_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::current_path() / "cli_test_tmp") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("solve and verify round trip") {
  TempDir tmp;
  const auto cert = tmp.file("cert.json");
  CHECK(run("solve --demo uniform-2 --grid 64 --eps 1e-9 --out " + cert) == 0);
  CHECK(run("verify --cert " + cert + " --demo uniform-2") == 0);

  const auto parsed = json::parse(slurp(cert));
  CHECK(parsed.at("kind") == "envyfree");
  CHECK(parsed.at("potential").get<double>() <= 1e-9);

  SECTION("tampered certificates fail verification") {
    auto bad = parsed;
    bad["sigma"] = std::vector<int>{1, 1};
    std::ofstream(tmp.file("bad.json")) << bad.dump();
    CHECK(run("verify --cert " + tmp.file("bad.json") + " --demo uniform-2") == 1);
  }
  SECTION("verification against the wrong model kind fails") {
    CHECK(run("verify --cert " + cert + " --demo dragon-player-2") == 1);
  }
}

TEST_CASE("dragon models dispatch on player count") {
  TempDir tmp;
  const auto cert = tmp.file("dragon.json");
  CHECK(run("solve --demo dragon-player-2 --grid 16 --eps 1e-6 --out " + cert) == 0);
  CHECK(json::parse(slurp(cert)).at("kind") == "dragon-players");
  CHECK(run("verify --cert " + cert + " --demo dragon-player-2") == 0);
}

TEST_CASE("input errors exit with code 1") {
  TempDir tmp;
  CHECK(run("solve --model does_not_exist.json", tmp.file("out.txt")) == 1);
  std::ofstream(tmp.file("garbage.json")) << "{ not json";
  CHECK(run("solve --model " + tmp.file("garbage.json"), tmp.file("out.txt")) == 1);
}

TEST_CASE("chess subcommand reports homology") {
  TempDir tmp;
  const auto out = tmp.file("chess.json");
  CHECK(run("chess 2 3 --json", out) == 0);
  const auto report = json::parse(slurp(out));
  CHECK(report.at("betti") == json::array({0, 1}));
  CHECK(report.at("faces") == json::array({6, 6}));
  CHECK(report.at("vanishing").at("ok") == true);

  // The alias spelled out in full works too.
  CHECK(run("chess-homology 2 3 --json", tmp.file("alias.json")) == 0);
  CHECK(json::parse(slurp(tmp.file("alias.json"))) == report);
}

TEST_CASE("audit subcommand") {
  TempDir tmp;
  CHECK(run("audit --demo uniform-2 --samples 50 --seed 3", tmp.file("a.txt")) == 0);
  CHECK(run("audit-equivariance --demo broken-plate-bonus --samples 20 --seed 3 --json",
            tmp.file("b.json")) == 1);
  const auto report = json::parse(slurp(tmp.file("b.json")));
  CHECK(report.at("pass") == false);
  CHECK(report.at("violations").size() >= 1);
  CHECK(run("audit --demo uniform-2 --samples 0", tmp.file("c.txt")) == 0);
}

TEST_CASE("demo listing") {
  TempDir tmp;
  CHECK(run("--list-demos", tmp.file("list.txt")) == 0);
  const auto listing = slurp(tmp.file("list.txt"));
  for (const auto& d : cakecut::demo_entries()) {
    CHECK(listing.find(d.name) != std::string::npos);
  }
}

TEST_CASE("explain prints the chocolate score table") {
  TempDir tmp;
  CHECK(run("solve --demo example-1-2 --grid 4 --budget 0 --explain", tmp.file("table.txt")) == 2);
  const auto text = slurp(tmp.file("table.txt"));
  CHECK(text.find("200*") != std::string::npos);   // empty plate 2 is the argmax
  CHECK(text.find("score table") != std::string::npos);
}

TEST_CASE("shipped model files match the built-in registry") {
  const fs::path models = fs::path(CAKECUT_SOURCE_DIR) / "models";
  for (const auto& d : cakecut::demo_entries()) {
    const fs::path file = models / (std::string(d.name) + ".json");
    REQUIRE(fs::exists(file));
    CHECK(json::parse(slurp(file)) == json::parse(d.json));
  }
}

TEST_CASE("outcomes are independent of the thread count") {
  TempDir tmp;
  const std::string base = "solve --demo window-3 --grid 16 --eps 1e-6 --seed 7";
  CHECK(run(base + " --threads 1 --out " + tmp.file("t1.json"), tmp.file("s1.txt")) == 0);
  CHECK(run(base + " --threads 4 --out " + tmp.file("t4.json"), tmp.file("s4.txt")) == 0);
  CHECK(slurp(tmp.file("t1.json")) == slurp(tmp.file("t4.json")));
  CHECK(slurp(tmp.file("s1.txt")) == slurp(tmp.file("s4.txt")));
}
