#include <catch_amalgamated.hpp>

#include "json.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int rc;
  std::string out;
};

Run punip(const std::string& args) {
  std::string cmd = std::string(PUNIP_EXE) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("classify sl2r") {
  auto r = punip("classify sl2r");
  CHECK(r.rc == 0);
  CHECK(r.out.find("|BB*0| = 3  |Z*0| = 3") != std::string::npos);
  CHECK(r.out.find("bijection check PASS") != std::string::npos);
  auto j = nlohmann::json::parse(punip("--format json classify --group sl2r").out);
  CHECK(j["counts"]["bb_star"] == 3);
  CHECK(j["surjective"] == true);
  CHECK(j["packets"].size() == 2);
}

TEST_CASE("langlands sl2r") {
  auto r = punip("--format json langlands sl2r");
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  std::multiset<size_t> sizes;
  for (auto& p : j["packets"]) sizes.insert(p["members"].size());
  CHECK(sizes == std::multiset<size_t>{1, 2});
  CHECK(j["all_order2"] == true);
  CHECK(j["order2_oracle"] == 2);
}

TEST_CASE("ktypes and verify") {
  auto r = punip("--format json ktypes sl2r --param 1 --cutoff 6");
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ktypes"].size() > 0);
  CHECK(j["associated_variety"]["full_nilcone"] == true);
  CHECK(punip("verify su2").rc == 0);
  CHECK(punip("verify sl3r --cutoff 6").rc == 0);
  CHECK(punip("kgb sl2r").out.find("cayley+") != std::string::npos);
  CHECK(punip("catalog").out.find("g2split") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(punip("classify nosuchgroup").rc == 2);
  CHECK(punip("verify sl2r --cutoff 0").rc == 2);
  CHECK(punip("ktypes sl2r --param 99").rc == 2);
  CHECK(punip("ktypes sl2r").rc == 2);
  CHECK(punip("--format xml classify sl2r").rc == 2);
  CHECK(punip("classify").rc == 2);
  CHECK(punip("frobnicate").rc == 2);
  CHECK(punip("--catalog /nonexistent.json catalog").rc == 2);
}

TEST_CASE("graph size bound is an invariant failure") { CHECK(punip("--max-graph-size 3 classify sp4r").rc == 1); }

TEST_CASE("JSON output is deterministic") {
  for (std::string g : {"sl3r", "sp4r"}) {
    auto a = punip("--format json classify " + g), b = punip("--format json classify " + g);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("external catalog file") {
  auto path = std::filesystem::temp_directory_path() / "punip_test_catalog.json";
  {
    std::ofstream f(path);
    f << R"({"schema_version": 1, "groups": [{"name": "mysl2", "datum": "A1.sc", "delta": "id",
            "seed": {"theta_word": [1], "grading": ""}, "invariant_degrees": [2], "dual_realization": "PGL2"}]})";
  }
  auto r = punip("--catalog " + path.string() + " classify mysl2");
  CHECK(r.rc == 0);
  CHECK(r.out.find("|BB*0| = 3") != std::string::npos);
  {
    std::ofstream f(path);
    f << R"({"schema_version": 1, "groups": [{"name": "x", "datum": "A1.sc", "seed": {"theta_word": [], "grading": "11"}}]})";
  }
  CHECK(punip("--catalog " + path.string() + " classify x").rc == 2);
  std::filesystem::remove(path);
}
