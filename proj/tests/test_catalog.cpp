#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace pu;
using nlohmann::json;

namespace {
json wrap(json entry) { return json{{"schema_version", 1}, {"groups", json::array({std::move(entry)})}}; }

std::string error_field(const json& j) {
  try {
    catalog_from_json(j);
  } catch (const CatalogError& e) {
    return e.field;
  }
  return "";
}
}  // namespace

TEST_CASE("built-in catalog") {
  auto cat = builtin_catalog();
  std::set<std::string> names;
  for (auto& e : cat) names.insert(e.name);
  CHECK(names == std::set<std::string>{"sl2r", "sl3r", "su21", "sp4r", "g2split", "su2"});
  for (auto& e : cat) CHECK_NOTHROW(build_group(e));
  CHECK_THROWS_AS(find_entry(cat, "e8"), CatalogError);
}

TEST_CASE("catalog JSON round trip") {
  auto cat = builtin_catalog();
  auto back = catalog_from_json(json::parse(catalog_to_json(cat).dump()));
  CHECK(back == cat);
}

TEST_CASE("explicit datum entry") {
  json e = {{"name", "sl2xsl2"},
            {"datum", {{"simple_roots", {{2, 0}, {0, 2}}}, {"simple_coroots", {{1, 0}, {0, 1}}}}},
            {"delta", {{0, 1}, {1, 0}}},
            {"seed", {{"theta_word", json::array()}, {"grading", ""}}},
            {"description", "SL(2,C) as a real group"}};
  auto cat = catalog_from_json(wrap(e));
  REQUIRE(cat.size() == 1);
  auto g = build_group(cat[0]);
  CHECK(g.ic.D().nroots() == 4);
  CHECK(catalog_from_json(json::parse(catalog_to_json(cat).dump())) == cat);
  auto R = classify(g);
  CHECK(R.ok());
  CHECK(R.bb_star.size() == R.z_star.size());
}

TEST_CASE("catalog errors name the offending field") {
  json good = to_json(find_entry(builtin_catalog(), "su2"));
  CHECK(error_field(wrap(good)).empty());

  auto bad = good;
  bad["seed"]["grading"] = "01";
  CHECK(error_field(wrap(bad)) == "$.groups[0].seed.grading");
  bad["seed"]["grading"] = "x";
  CHECK(error_field(wrap(bad)) == "$.groups[0].seed.grading");

  bad = good;
  bad["seed"]["theta_word"] = {3};
  CHECK(error_field(wrap(bad)) == "$.groups[0].seed.theta_word");

  bad = good;
  bad["datum"] = "Q7";
  CHECK(error_field(wrap(bad)) == "$.groups[0].datum");

  bad = good;
  bad["delta"] = "sideways";
  CHECK(error_field(wrap(bad)) == "$.groups[0].delta");

  bad = good;
  bad.erase("seed");
  CHECK(error_field(wrap(bad)) == "$.groups[0].seed");

  auto two = wrap(good);
  two["groups"].push_back(good);
  CHECK(error_field(two) == "$.groups[1].name");

  auto v = wrap(good);
  v["schema_version"] = 2;
  CHECK(error_field(v) == "$.schema_version");
  CHECK(error_field(json::array()) == "$");
}
