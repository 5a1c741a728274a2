#pragma once
// Group catalog: JSON schema, built-in entries, and construction of the inner class + seed frame.
//
// {
//   "schema_version": 1,
//   "groups": [{
//     "name": "sl3r",
//     "datum": "A2.sc"  |  {"simple_roots": [[..]], "simple_coroots": [[..]]},
//     "delta": "id" | "-w0" | [[..], ..],
//     "seed": {"theta_word": [1,2,1], "grading": "", "extra_generators": []},
//     "invariant_degrees": [2,3],
//     "dual_realization": "PGL3",
//     "description": "..."
//   }]
// }
// theta_word uses 1-based simple reflection indices; theta = s_word * delta.
// grading is a bit string over the positive imaginary roots of theta in lexicographic order.

#include "pu/realform.hpp"

#include "json.hpp"

#include <fstream>

namespace pu {

inline constexpr int kCatalogSchemaVersion = 1;

struct CatalogError : std::runtime_error {
  std::string field;
  CatalogError(std::string f, const std::string& msg) : std::runtime_error(f + ": " + msg), field(std::move(f)) {}
};

struct CatalogEntry {
  std::string name;
  std::string datum;  // type string; empty when explicit
  std::vector<IVec> simple_roots, simple_coroots;
  std::string delta = "id";  // "id", "-w0" or "matrix"
  IMat delta_matrix;
  std::vector<int> theta_word;  // 1-based
  std::string grading;
  std::vector<IVec> extra_generators;
  std::vector<int> invariant_degrees;
  std::string dual_realization;
  std::string description;
  bool operator==(const CatalogEntry&) const = default;
};

struct Group {
  CatalogEntry entry;
  InnerClass ic;
  CartanFrame seed;
};

inline Group build_group(const CatalogEntry& e, const std::string& where = "") {
  auto field = [&](const std::string& f) { return where.empty() ? f : where + "." + f; };
  Group g{e, {}, {}};
  BasedRootDatum D;
  try {
    D = e.datum.empty() ? make_datum(e.name, e.simple_roots, e.simple_coroots) : datum_from_string(e.datum);
  } catch (const RootDatumError& ex) {
    throw CatalogError(field("datum"), ex.what());
  }
  IMat delta = IMat::identity(D.n);
  if (e.delta == "matrix") {
    delta = e.delta_matrix;
    if (delta.rows != D.n || delta.cols != D.n) throw CatalogError(field("delta"), "matrix has wrong shape");
  }
  try {
    g.ic = make_inner_class(D, delta);
    if (e.delta == "-w0") g.ic = make_inner_class(D, minus_w0(g.ic));
    else if (e.delta != "id" && e.delta != "matrix") throw CatalogError(field("delta"), "expected id, -w0 or a matrix");
  } catch (const RealFormError& ex) {
    throw CatalogError(field("delta"), ex.what());
  }
  std::vector<int> word;
  for (int i : e.theta_word) {
    if (i < 1 || i > g.ic.D().ss_rank()) throw CatalogError(field("seed.theta_word"), "index out of range");
    word.push_back(i - 1);
  }
  std::vector<int> bits;
  for (char c : e.grading) {
    if (c != '0' && c != '1') throw CatalogError(field("seed.grading"), "bits must be 0 or 1");
    bits.push_back(c - '0');
  }
  for (auto& v : e.extra_generators)
    if (int(v.size()) != g.ic.D().n) throw CatalogError(field("seed.extra_generators"), "wrong length");
  try {
    IMat w = IMat::identity(g.ic.D().n);
    for (int i : word) w = w * g.ic.D().simple_reflection(i);
    IMat theta = w * g.ic.delta;
    if (theta * theta != IMat::identity(g.ic.D().n))
      throw CatalogError(field("seed.theta_word"), "theta is not an involution");
    auto imag = canonical_imaginary(g.ic, theta);
    if (bits.size() != imag.size())
      throw CatalogError(field("seed.grading"), "expected " + std::to_string(imag.size()) + " bits, got " +
                                                    std::to_string(bits.size()));
    g.seed = make_frame(g.ic, theta, bits, e.extra_generators);
  } catch (const RealFormError& ex) {
    throw CatalogError(field("seed"), ex.what());
  }
  return g;
}

// --------------------------------------------------------------------- JSON

inline nlohmann::ordered_json to_json(const CatalogEntry& e) {
  nlohmann::ordered_json j;
  j["name"] = e.name;
  if (e.datum.empty()) j["datum"] = {{"simple_roots", e.simple_roots}, {"simple_coroots", e.simple_coroots}};
  else j["datum"] = e.datum;
  if (e.delta == "matrix") {
    std::vector<IVec> rows;
    for (int i = 0; i < e.delta_matrix.rows; ++i) rows.push_back(e.delta_matrix.row(i));
    j["delta"] = rows;
  } else
    j["delta"] = e.delta;
  j["seed"] = {{"theta_word", e.theta_word}, {"grading", e.grading}, {"extra_generators", e.extra_generators}};
  j["invariant_degrees"] = e.invariant_degrees;
  j["dual_realization"] = e.dual_realization;
  j["description"] = e.description;
  return j;
}

inline nlohmann::ordered_json catalog_to_json(const std::vector<CatalogEntry>& es) {
  nlohmann::ordered_json j;
  j["schema_version"] = kCatalogSchemaVersion;
  j["groups"] = nlohmann::ordered_json::array();
  for (auto& e : es) j["groups"].push_back(to_json(e));
  return j;
}

namespace detail {
template <class T>
T get_field(const nlohmann::json& j, const std::string& key, const std::string& where, bool required = true,
            T dflt = T{}) {
  if (!j.contains(key)) {
    if (required) throw CatalogError(where + "." + key, "missing");
    return dflt;
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& ex) {
    throw CatalogError(where + "." + key, std::string("wrong type (") + ex.what() + ")");
  }
}
}  // namespace detail

inline CatalogEntry entry_from_json(const nlohmann::json& j, const std::string& where) {
  using detail::get_field;
  if (!j.is_object()) throw CatalogError(where, "expected an object");
  CatalogEntry e;
  e.name = get_field<std::string>(j, "name", where);
  if (!j.contains("datum")) throw CatalogError(where + ".datum", "missing");
  const auto& d = j["datum"];
  if (d.is_string()) e.datum = d.get<std::string>();
  else if (d.is_object()) {
    e.simple_roots = get_field<std::vector<IVec>>(d, "simple_roots", where + ".datum");
    e.simple_coroots = get_field<std::vector<IVec>>(d, "simple_coroots", where + ".datum");
  } else
    throw CatalogError(where + ".datum", "expected a type string or an object");
  if (j.contains("delta")) {
    const auto& dl = j["delta"];
    if (dl.is_string()) e.delta = dl.get<std::string>();
    else if (dl.is_array()) {
      e.delta = "matrix";
      try {
        e.delta_matrix = IMat::from_rows(dl.get<std::vector<IVec>>());
      } catch (const nlohmann::json::exception&) {
        throw CatalogError(where + ".delta", "expected an integer matrix");
      }
    } else
      throw CatalogError(where + ".delta", "expected id, -w0 or a matrix");
  }
  if (!j.contains("seed")) throw CatalogError(where + ".seed", "missing");
  const auto& s = j["seed"];
  if (!s.is_object()) throw CatalogError(where + ".seed", "expected an object");
  e.theta_word = get_field<std::vector<int>>(s, "theta_word", where + ".seed");
  e.grading = get_field<std::string>(s, "grading", where + ".seed", false);
  e.extra_generators = get_field<std::vector<IVec>>(s, "extra_generators", where + ".seed", false);
  e.invariant_degrees = get_field<std::vector<int>>(j, "invariant_degrees", where, false);
  e.dual_realization = get_field<std::string>(j, "dual_realization", where, false);
  e.description = get_field<std::string>(j, "description", where, false);
  build_group(e, where);  // validates
  return e;
}

inline std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw CatalogError("$", "expected an object");
  int v = detail::get_field<int>(j, "schema_version", "$");
  if (v != kCatalogSchemaVersion)
    throw CatalogError("$.schema_version", "unsupported version " + std::to_string(v));
  if (!j.contains("groups") || !j["groups"].is_array()) throw CatalogError("$.groups", "expected an array");
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  for (size_t i = 0; i < j["groups"].size(); ++i) {
    std::string where = "$.groups[" + std::to_string(i) + "]";
    out.push_back(entry_from_json(j["groups"][i], where));
    if (!names.insert(out.back().name).second) throw CatalogError(where + ".name", "duplicate name");
  }
  return out;
}

inline std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError(path, "cannot open");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw CatalogError(path, ex.what());
  }
  return catalog_from_json(j);
}

// ----------------------------------------------------------------- built-ins

inline std::vector<CatalogEntry> builtin_catalog() {
  auto mk = [](std::string name, std::string datum, std::string delta, std::vector<int> word, std::string grading,
               std::vector<int> degrees, std::string dual, std::string desc) {
    CatalogEntry e;
    e.name = std::move(name);
    e.datum = std::move(datum);
    e.delta = std::move(delta);
    e.theta_word = std::move(word);
    e.grading = std::move(grading);
    e.invariant_degrees = std::move(degrees);
    e.dual_realization = std::move(dual);
    e.description = std::move(desc);
    return e;
  };
  return {
      mk("sl2r", "A1.sc", "id", {1}, "", {2}, "PGL2", "SL(2,R), split Cartan seed"),
      mk("sl3r", "A2.sc", "-w0", {1, 2, 1}, "", {2, 3}, "PGL3", "SL(3,R), split Cartan seed"),
      mk("su21", "A2.sc", "id", {1, 2, 1}, "", {2, 3}, "PGL3", "SU(2,1), maximally split Cartan seed"),
      mk("sp4r", "C2.sc", "id", {1, 2, 1, 2}, "", {2, 4}, "SO5", "Sp(4,R), split Cartan seed"),
      mk("g2split", "G2", "id", {1, 2, 1, 2, 1, 2}, "", {2, 6}, "G2", "split G2"),
      mk("su2", "A1.sc", "id", {}, "0", {2}, "PGL2", "compact SU(2)"),
  };
}

inline const CatalogEntry& find_entry(const std::vector<CatalogEntry>& cat, const std::string& name) {
  for (auto& e : cat)
    if (e.name == name) return e;
  throw CatalogError("group", "unknown group '" + name + "'");
}

}  // namespace pu
