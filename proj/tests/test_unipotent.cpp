#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace pu;

namespace {
int odd_real_simple(const InnerClass& ic, const BBParameter& p) {
  for (int a : simple_set(ic, p.borel))
    if (classify_root(ic, p.frame, a) == RootClass::Real && is_odd(ic, p, a)) return a;
  return -1;
}
}  // namespace

TEST_CASE("SL2R: three unipotent parameters, bijective Z map") {
  auto g = oracle::builtin("sl2r");
  auto R = classify(g);
  CHECK(R.graph.vertices.size() == 4);
  CHECK(R.bb_star.size() == 3);
  CHECK(R.z_star.size() == 3);
  CHECK(R.surjective);
  CHECK(R.injective);
  CHECK(R.ok());
}

TEST_CASE("SL2R: odd principal series decomposes into the two discrete series") {
  auto g = oracle::builtin("sl2r");
  auto R = classify(g);
  int odd = -1;
  for (auto& p : R.graph.vertices)
    if (odd_real_simple(g.ic, p) >= 0) odd = p.id;
  REQUIRE(odd >= 0);
  const auto& p = R.graph.vertices[odd];
  CHECK_FALSE(is_unipotent_bb(g.ic, p));
  auto terms = decompose_to_unipotent(g.ic, p);
  REQUIRE(terms.size() == 2);
  std::set<int> ids;
  for (auto& t : terms) {
    CHECK(t.coeff == -1);
    CHECK(classify_root(g.ic, t.param.frame, simple_set(g.ic, t.param.borel)[0]) == RootClass::Imaginary);
    ids.insert(R.graph.find(g.ic, t.param));
  }
  CHECK(ids.size() == 2);
}

TEST_CASE("unipotent parameters decompose to themselves") {
  for (std::string name : {"sl2r", "sl3r", "sp4r"}) {
    auto g = oracle::builtin(name);
    auto R = classify(g);
    for (int v : R.bb_star) {
      auto terms = decompose_to_unipotent(g.ic, R.graph.vertices[v]);
      REQUIRE(terms.size() == 1);
      CHECK(terms[0].coeff == 1);
      CHECK(R.graph.find(g.ic, terms[0].param) == v);
    }
  }
}

TEST_CASE("SL3R: type 2 Cayley contributes a single branch") {
  auto g = oracle::builtin("sl3r");
  auto R = classify(g);
  auto as_map = [&](const std::vector<SignedTerm>& ts, int sign) {
    std::map<int, int> m;
    for (auto& t : ts) m[R.graph.find(g.ic, t.param)] += sign * t.coeff;
    return m;
  };
  int seen = 0;
  for (auto& p : R.graph.vertices) {
    int a = odd_real_simple(g.ic, p);
    if (a < 0 || !is_nonzero(g.ic, p) || real_root_type(g.ic, p.frame, a) != RealType::Type2) continue;
    auto [cp, cm] = cayley_real(g.ic, p, a);
    CHECK(param_key(g.ic, canonical(g.ic, cp)) == param_key(g.ic, canonical(g.ic, cm)));
    CHECK(as_map(decompose_to_unipotent(g.ic, p), 1) == as_map(decompose_to_unipotent(g.ic, cp), -1));
    ++seen;
  }
  CHECK(seen > 0);
}

TEST_CASE("compact imaginary simple root after type L normalization gives zero") {
  int zeros = 0;
  for (std::string name : {"su21", "sp4r"}) {
    auto g = oracle::builtin(name);
    auto R = classify(g);
    for (auto& p : R.graph.vertices) {
      auto n = normalize_typeL(g.ic, p);
      bool compact_simple = false;
      for (int a : simple_set(g.ic, n.param.borel))
        compact_simple = compact_simple ||
                         (classify_root(g.ic, n.param.frame, a) == RootClass::Imaginary && n.param.frame.eps[a] == 0);
      if (compact_simple) {
        CHECK_FALSE(is_nonzero(g.ic, p));
        ++zeros;
      }
    }
  }
  CHECK(zeros > 0);
}

TEST_CASE("Zuckerman parameters") {
  auto g = oracle::builtin("sl2r");
  auto R = classify(g);
  for (int v : R.bb_star) {
    auto z = zuckerman_of(g.ic, R.graph.vertices[v]);
    CHECK(z_structure_ok(g.ic, z));
    CHECK(is_unipotent_z(g.ic, z));
    // compact Cartan: l = h and u = n; split Cartan: l = g
    bool split = classify_root(g.ic, z.frame, simple_set(g.ic, 0)[0]) == RootClass::Real;
    CHECK(z.levi.size() == (split ? 2u : 0u));
    CHECK(z.nilradical.size() == (split ? 0u : 1u));
  }
  for (auto& p : R.graph.vertices)
    if (!is_unipotent_bb(g.ic, p)) CHECK_THROWS_AS(zuckerman_of(g.ic, p), std::invalid_argument);
}

TEST_CASE("theta-stable Borel with a compact root is not unipotent") {
  auto g = oracle::builtin("su2");
  auto f = fundamental_frame(g.ic, g.seed);
  int a = simple_set(g.ic, 0)[0];
  auto z = make_z(g.ic, f, {a}, IVec{-1});
  CHECK(z_structure_ok(g.ic, z));
  CHECK_FALSE(is_unipotent_z(g.ic, z));
}

TEST_CASE("catalog classifications") {
  std::map<std::string, std::pair<size_t, size_t>> expect{
      {"sl2r", {4, 3}}, {"sl3r", {7, 2}}, {"su21", {6, 1}}, {"sp4r", {18, 5}}, {"g2split", {13, 2}}, {"su2", {1, 0}}};
  for (auto& e : builtin_catalog()) {
    auto g = build_group(e);
    auto R = classify(g);
    INFO(e.name);
    for (auto& c : R.checks) {
      INFO(c.name << " " << c.detail);
      CHECK(c.pass);
    }
    CHECK(R.bb_star.empty() == !R.quasisplit);
    REQUIRE(expect.count(e.name));
    CHECK(R.graph.vertices.size() == expect[e.name].first);
    CHECK(R.bb_star.size() == expect[e.name].second);
    CHECK(R.z_star.size() == expect[e.name].second);
  }
}

TEST_CASE("every nonzero parameter decomposes into BB*0 with a consistent total") {
  auto g = oracle::builtin("sp4r");
  auto R = classify(g);
  for (auto& p : R.graph.vertices) {
    if (!is_nonzero(g.ic, p)) continue;
    auto terms = decompose_to_unipotent(g.ic, p);
    CHECK(!terms.empty());
    for (auto& t : terms) {
      CHECK(t.coeff != 0);
      CHECK(std::count(R.bb_star.begin(), R.bb_star.end(), R.graph.find(g.ic, t.param)) == 1);
    }
  }
}
