#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace pu;

namespace {
InnerClass split_ic(const std::string& t) { return make_inner_class(datum_from_string(t), IMat()); }
int root(const BasedRootDatum& D, IVec v) {
  int r = D.find(v);
  REQUIRE(r >= 0);
  return r;
}
}  // namespace

TEST_CASE("root trichotomy on every catalog frame") {
  for (auto& e : builtin_catalog()) {
    auto g = build_group(e);
    auto G = close_graph(g.ic, seeds_for(g.ic, g.seed));
    for (auto& f : G.frames) {
      int real = 0, imag = 0, cx = 0;
      for (int r = 0; r < g.ic.D().nroots(); ++r) {
        int t = theta_root(g.ic, f.theta, r);
        bool is_real = t == g.ic.D().neg(r), is_imag = t == r;
        CHECK(int(is_real) + int(is_imag) <= 1);
        RootClass c = classify_root(g.ic, f, r);
        real += c == RootClass::Real;
        imag += c == RootClass::Imaginary;
        cx += c == RootClass::Complex;
        CHECK((c == RootClass::Real) == is_real);
        CHECK((c == RootClass::Imaginary) == is_imag);
      }
      CHECK(real + imag + cx == g.ic.D().nroots());
    }
  }
}

TEST_CASE("A1 frames") {
  auto ic = split_ic("A1.sc");
  auto split = frame_from_word(ic, {0}, {});
  auto compact = frame_from_word(ic, {}, {1});
  CHECK(classify_root(ic, split, 0) == RootClass::Real);
  CHECK(classify_root(ic, compact, 0) == RootClass::Imaginary);
  CHECK(grading(compact, 0) == 1);
  CHECK_THROWS_AS(grading(split, 0), RealFormError);
  CHECK_THROWS_AS(frame_from_word(ic, {}, {}), RealFormError);
  CHECK_THROWS_AS(make_inner_class(datum_from_string("A1"), IMat::from_rows({{2}})), RealFormError);

  auto sp = standard_parabolics(ic, split, 0);
  CHECK(sp.qZ.nilradical.empty());
  CHECK(sp.qZ.levi.size() == 2);
  auto cp = standard_parabolics(ic, compact, 0);
  CHECK(cp.qZ.levi.empty());
  CHECK(cp.qZ.nilradical.size() == 1);
}

TEST_CASE("A2 flip: complex roots and theta-stable qZ") {
  auto ic0 = split_ic("A2.sc");
  auto ic = make_inner_class(ic0.D(), minus_w0(ic0));
  auto f = frame_from_word(ic, {}, {1});  // theta = delta
  const auto& D = ic.D();
  int a1 = D.simple_index[0];
  CHECK(classify_root(ic, f, a1) == RootClass::Complex);
  CHECK(classify_root(ic, f, root(D, D.simple_roots[0] + D.simple_roots[1])) == RootClass::Imaginary);
  for (int b = 0; b < ic.W().size(); ++b) {
    auto fl = positive_system_flags(ic, f, b);
    auto sp = standard_parabolics(ic, f, b);
    CHECK(sp.qZ.stable == fl.typeZ);
    CHECK(sp.qL.stable == fl.typeL);
  }
}

TEST_CASE("real root types") {
  auto sl2 = split_ic("A1.sc");
  auto f = frame_from_word(sl2, {0}, {});
  CHECK(real_root_type(sl2, f, 0) == RealType::Type1);
  auto fx = frame_from_word(sl2, {0}, {}, {IVec{1}});  // -I declared
  CHECK(real_root_type(sl2, fx, 0) == RealType::Type1);
  auto pgl2 = split_ic("A1");
  CHECK(real_root_type(pgl2, frame_from_word(pgl2, {0}, {}), 0) == RealType::Type1);

  auto g = oracle::builtin("sl3r");
  int a = g.ic.D().simple_index[0];
  CHECK(real_root_type(g.ic, g.seed, a) == RealType::Type2);
  CHECK(real_root_type_exact(g.ic, g.seed.theta, a) == RealType::Type2);
  CHECK_THROWS_AS(real_root_type(sl2, frame_from_word(sl2, {}, {1}), 0), RealFormError);
}

TEST_CASE("grading transport table") {
  // B2: alpha long noncompact, beta = the orthogonal long root
  auto ic = split_ic("B2");
  const auto& D = ic.D();
  int a = D.simple_index[0];  // long
  int s = D.simple_index[1];  // short
  int b = root(D, D.roots[a] + Int(2) * D.roots[s]);
  int c = root(D, D.roots[a] + D.roots[s]);  // short, orthogonal to the short simple root
  REQUIRE(D.pair(b, a) == 0);
  REQUIRE(D.pair(c, s) == 0);
  // alpha +- beta are not roots for the long pair, they are roots for the short pair
  std::vector<int> all(D.nroots());
  std::iota(all.begin(), all.end(), 0);
  for (int bits = 0; bits < 4; ++bits) {
    int ea = bits & 1, es = bits >> 1;
    auto g = extend_grading(D, all, {a, s}, {ea, es});
    std::vector<int> fb;
    for (int r : canonical_imaginary(ic, IMat::identity(2))) fb.push_back(g[r]);
    auto f = make_frame(ic, IMat::identity(2), fb);
    if (ea == 1) CHECK(grading_transport_d(ic, f, a, b) == f.eps[b]);  // case alpha +- beta not roots
    if (f.eps[s] == 1) CHECK(grading_transport_d(ic, f, s, c) == 1 - f.eps[c]);  // alpha +- beta roots
    if (ea == 0) CHECK_THROWS_AS(grading_transport_d(ic, f, a, b), RealFormError);
  }
}

TEST_CASE("grading transport sweep, rank <= 3") {
  auto r = grading_transport_sweep();
  INFO((r.failures.empty() ? std::string() : r.failures.front()));
  CHECK(r.cases > 1000);
  CHECK(r.failures.empty());
}

TEST_CASE("quasi-split criterion") {
  for (auto [name, qs] : {std::pair{"sl2r", true}, {"su21", true}, {"sl3r", true}, {"su2", false}}) {
    auto g = oracle::builtin(name);
    INFO(name);
    CHECK(is_quasisplit(g.ic, fundamental_frame(g.ic, g.seed)) == qs);
  }
}

TEST_CASE("canonical frame is idempotent and W-invariant") {
  for (auto& e : builtin_catalog()) {
    auto g = build_group(e);
    auto G = close_graph(g.ic, seeds_for(g.ic, g.seed));
    for (auto& f : G.frames) {
      auto [c, u] = canonical_frame(g.ic, f);
      CHECK(frame_key(g.ic, canonical_frame(g.ic, c).first) == frame_key(g.ic, c));
      for (int w = 0; w < g.ic.W().size(); ++w)
        CHECK(frame_key(g.ic, canonical_frame(g.ic, conjugate_frame(g.ic, f, w)).first) == frame_key(g.ic, c));
    }
  }
}

TEST_CASE("Cayley grading candidates") {
  auto g = oracle::builtin("sp4r");
  for (int a : roots_of_class(g.ic, g.seed, RootClass::Real)) {
    auto c = cayley_frame_candidates(g.ic, g.seed, a);
    CHECK(!c.empty());
    for (auto& f : c) CHECK(f.eps[a] == 1);
  }
}
