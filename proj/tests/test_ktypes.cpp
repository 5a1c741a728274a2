#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace pu;

namespace {
QVec qv(std::initializer_list<long long> xs) {
  QVec v;
  for (auto x : xs) v.push_back(Q(x));
  return v;
}
Int binom(Int n, Int k) {
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("symmetric algebra characters") {
  auto c = sym_character(1, {qv({1}), qv({1}), qv({1})}, 6);
  for (int d = 0; d <= 6; ++d) {
    REQUIRE(c.graded[d].size() == 1);
    CHECK(c.graded[d].at(qv({d})) == binom(d + 2, 2));
  }
  auto t = sym_character(2, {qv({1, 0}), qv({0, 1})}, 3);
  CHECK(t.graded[3].size() == 4);
  for (auto& [w, m] : t.graded[3]) CHECK(m == 1);
  auto z = sym_character(1, {qv({0}), qv({0}), qv({0})}, 6);
  divide_out_invariant(z, 1);
  for (int d = 0; d <= 6; ++d) CHECK(z.graded[d].at(qv({0})) == binom(d + 1, 1));
  auto s = shift(constant_character(1, 2), qv({5}));
  CHECK(s.graded[0].at(qv({5})) == 1);
  auto p = product(sym_character(1, {qv({1})}, 3), sym_character(1, {qv({-1})}, 3));
  CHECK(p.graded[2].size() == 3);
}

TEST_CASE("Weyl degrees") {
  CHECK(weyl_degrees(1, 2) == std::vector<int>{2});
  CHECK(weyl_degrees(2, 6) == std::vector<int>{2, 3});
  CHECK(weyl_degrees(2, 8) == std::vector<int>{2, 4});
  CHECK(weyl_degrees(2, 12) == std::vector<int>{2, 6});
  CHECK(weyl_degrees(4, 24) == std::vector<int>{2, 4, 4, 6});
  CHECK_THROWS_AS(weyl_degrees(3, 7), KTypeError);
  auto D = datum_from_string("A1xA2");
  std::vector<int> all(D.nroots());
  std::iota(all.begin(), all.end(), 0);
  CHECK(levi_degrees(D, all) == std::vector<int>{2, 2, 3});
}

TEST_CASE("A1 nilpotent cone character") {
  LeviData L{{qv({2}), qv({-2})}, 0, {2}};
  auto c = nilcone_character(1, L, 12);
  auto t = c.total();
  for (int w = -12; w <= 12; ++w) {
    Int m = t.count(qv({w})) ? t.at(qv({w})) : 0;
    CHECK(m == (w % 2 == 0 ? oracle::sl2_nilcone(w) : 0));
  }
}

TEST_CASE("SL2R cells") {
  auto g = oracle::builtin("sl2r");
  auto R = classify(g);
  int lds = 0;
  for (auto& z : R.z_star) {
    auto s = ktype_series(g.ic, z, g.entry.invariant_degrees, 10);
    auto cert = s.certified();
    REQUIRE(!cert.empty());
    if (z.levi.size() == 2) {
      // spherical: every even weight once
      for (auto& t : s.types)
        if (t.certified) CHECK(t.mult == oracle::sl2_nilcone(boost::rational_cast<long long>(t.highest[0])));
      CHECK(cert.count(qv({0})));
      CHECK(cert.count(qv({2})));
      CHECK(cert.count(qv({-2})));
    } else {
      ++lds;
      int sgn = g.ic.D().roots[z.nilradical[0]][0] > 0 ? 1 : -1;
      for (auto& [w, m] : cert) {
        long long x = boost::rational_cast<long long>(w[0]) * sgn;
        CHECK(x > 0);
        CHECK(x % 2 == 1);
        CHECK(m == 1);
      }
      CHECK(cert.count(qv({sgn})));
      CHECK(cert.count(qv({3 * sgn})));
    }
  }
  CHECK(lds == 2);
}

TEST_CASE("SL3R spherical cell against the SO(3) closed form") {
  auto g = oracle::builtin("sl3r");
  auto R = classify(g);
  const auto& z = oracle::full_levi_cell(g, R);
  auto c = cell_data(g.ic, z, g.entry.invariant_degrees);
  REQUIRE(c.K.k_simple.size() == 1);
  QVec beta = c.K.k_simple[0];
  auto s = ktype_series(g.ic, z, g.entry.invariant_degrees, 10);
  int checked = 0;
  for (auto& t : s.types) {
    if (!t.certified) continue;
    Q j = c.K.form(t.highest, beta) / c.K.form(beta, beta);
    REQUIRE(j.denominator() == 1);
    REQUIRE(t.highest == j * beta);
    CHECK(t.mult == oracle::sl3_nilcone(j.numerator()));
    ++checked;
  }
  CHECK(checked >= 3);
}

TEST_CASE("spherical cells match the denominator decomposition") {
  for (std::string name : {"sl2r", "sl3r", "sp4r", "g2split"}) {
    auto g = oracle::builtin(name);
    auto R = classify(g);
    const auto& z = oracle::full_levi_cell(g, R);
    auto c = cell_data(g.ic, z, g.entry.invariant_degrees);
    auto s = ktype_series(g.ic, z, g.entry.invariant_degrees, 8);
    auto ref = oracle::denominator_decomposition(c.K, cell_character(c, 8).total());
    std::map<QVec, Int> got;
    for (auto& t : s.types)
      if (t.mult != 0) got[t.highest] = t.mult;
    INFO(name);
    CHECK(got == ref);
    CHECK(c.levi.degrees == g.entry.invariant_degrees);
  }
}

TEST_CASE("every catalog cell is stable and nonnegative") {
  for (auto& e : builtin_catalog()) {
    auto g = build_group(e);
    auto R = classify(g);
    for (auto& z : R.z_star) {
      INFO(e.name << " z" << z.id);
      auto s = ktype_series(g.ic, z, g.entry.invariant_degrees, 8);
      for (auto& t : s.types)
        if (t.certified) CHECK(t.mult >= 0);
      CHECK(stable_under_extension(g.ic, z, g.entry.invariant_degrees, 8));
    }
  }
}

TEST_CASE("bad cutoff and bad degrees are rejected") {
  auto g = oracle::builtin("sl3r");
  auto R = classify(g);
  const auto& z = oracle::full_levi_cell(g, R);
  CHECK_THROWS_AS(ktype_series(g.ic, z, g.entry.invariant_degrees, 0), KTypeError);
  CHECK_THROWS_AS(cell_data(g.ic, z, {2, 4}), KTypeError);
}

TEST_CASE("associated variety") {
  auto a = oracle::builtin("sl2r");
  auto Ra = classify(a);
  for (auto& z : Ra.z_star) {
    auto av = associated_variety_report(a.ic, z);
    CHECK(av.full);
    CHECK(av.dimension == 1);
  }
  auto b = oracle::builtin("sl3r");
  auto Rb = classify(b);
  CHECK(associated_variety_report(b.ic, Rb.z_star[0]).dimension == 3);
  auto c = oracle::builtin("su2");
  auto f = fundamental_frame(c.ic, c.seed);
  auto z = make_z(c.ic, f, {simple_set(c.ic, 0)[0]}, IVec{-1});
  auto av = associated_variety_report(c.ic, z);
  CHECK_FALSE(av.full);
  CHECK_FALSE(av.dimension.has_value());
}
